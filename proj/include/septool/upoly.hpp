#pragma once

// Dense univariate polynomials over Q: real-root isolation and resultants
// used by the tangent-cone and isolatedness checks.

#include <utility>
#include <vector>

#include "septool/rational.hpp"

namespace septool {

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);  // coeffs[i] multiplies t^i

  static UPoly monomial(int degree, const Rational& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& lead() const { return c_.back(); }

  Rational eval(const Rational& t) const;
  int sign_at(const Rational& t) const { return eval(t).sign(); }
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& k, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  /// Euclidean division a = q*b + r.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  /// Exact division; throws NotDivisible on a nonzero remainder.
  static UPoly exact_div(const UPoly& a, const UPoly& b);
  static UPoly gcd(UPoly a, UPoly b);

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Square-free decomposition p = c * prod f_i^i (Yun); entry i-1 holds f_i.
std::vector<UPoly> squarefree_factors(const UPoly& p);

/// Real root of a square-free polynomial: exact when rational, else an
/// isolating open interval (lo, hi) containing exactly one root.
struct RealRoot {
  bool rational = false;
  Rational value;     // exact root when rational
  Rational lo, hi;    // isolating interval otherwise
};

/// All real roots of a square-free polynomial, sorted increasingly.
/// Irrational roots are refined until hi - lo <= width.
std::vector<RealRoot> real_roots(const UPoly& squarefree, const Rational& width);

/// Number of distinct real roots in (a, b] via a Sturm sequence.
int sturm_count(const UPoly& squarefree, const Rational& a, const Rational& b);

/// Determinant of a square matrix of polynomials (fraction-free Bareiss).
UPoly poly_determinant(std::vector<std::vector<UPoly>> m);

}  // namespace septool
