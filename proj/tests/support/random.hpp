#pragma once

#include <random>

#include "septool/field.hpp"

namespace septool::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational(int num_bound = 9, int den_bound = 5) {
    return Rational(integer(-num_bound, num_bound), integer(1, den_bound));
  }
  Rational nonzero_rational(int num_bound = 9, int den_bound = 5) {
    Rational r;
    do r = rational(num_bound, den_bound);
    while (r.is_zero());
    return r;
  }

  template <std::size_t N>
  Series<N> series(const typename Series<N>::Vars& vars, int max_degree, int trunc, double density = 0.4,
                   int min_degree = 0, int num_bound = 9, int den_bound = 5) {
    typename Series<N>::Terms terms;
    typename Series<N>::Exp e{};
    fill<N>(terms, e, 0, max_degree, min_degree, density, num_bound, den_bound);
    return Series<N>(vars, std::move(terms), trunc);
  }

  Series2 series2(int max_degree, int trunc, double density = 0.4, int min_degree = 0, int num_bound = 9,
                  int den_bound = 5) {
    return series<2>({"x", "y"}, max_degree, trunc, density, min_degree, num_bound, den_bound);
  }

  /// Unit: nonzero constant term plus a sparse tail.
  Series2 unit2(int max_degree, int trunc) {
    Series2 s = series2(max_degree, trunc, 0.4, 1);
    return s + Series2::constant(s.vars(), nonzero_rational());
  }

  /// Polynomial a(x) with a(0) = a'(0) = 0, not identically zero.
  Series1 admissible_a(int max_degree = 6) {
    std::vector<Rational> c(static_cast<std::size_t>(max_degree) + 1);
    do {
      for (int k = 2; k <= max_degree; ++k) c[static_cast<std::size_t>(k)] = coin(0.6) ? rational() : Rational(0);
    } while (std::all_of(c.begin(), c.end(), [](const Rational& r) { return r.is_zero(); }));
    return series1("x", c);
  }

  std::array<std::array<Rational, 2>, 2> invertible_matrix() {
    while (true) {
      std::array<std::array<Rational, 2>, 2> m{{{rational(), rational()}, {rational(), rational()}}};
      if (!(m[0][0] * m[1][1] - m[0][1] * m[1][0]).is_zero()) return m;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  template <std::size_t N>
  void fill(typename Series<N>::Terms& terms, typename Series<N>::Exp& e, std::size_t k, int budget,
            int min_degree, double density, int num_bound, int den_bound) {
    if (k == N) {
      if (Series<N>::degree_of(e) >= min_degree && coin(density)) {
        Rational c = rational(num_bound, den_bound);
        if (!c.is_zero()) terms[e] = c;
      }
      return;
    }
    for (int p = 0; p <= budget; ++p) {
      e[k] = p;
      fill<N>(terms, e, k + 1, budget - p, min_degree, density, num_bound, den_bound);
    }
    e[k] = 0;
  }

  std::mt19937_64 rng_;
};

/// Linear change of coordinates: pulls F back along (x, y) = M (u, v) and
/// applies M^-1 to the components.
inline PlanarField conjugate(const PlanarField& f, const std::array<std::array<Rational, 2>, 2>& m) {
  const auto& v = f.vars();
  Series2 x = Series2::variable(v, 0), y = Series2::variable(v, 1);
  std::array<Series2, 2> img{m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y};
  Series2 a = compose(f[0], img), b = compose(f[1], img);
  Rational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return planar((m[1][1] * a - m[0][1] * b) * det.inverse(), (-m[1][0] * a + m[0][0] * b) * det.inverse());
}

}  // namespace septool::testing
