#pragma once

// Truncated formal power series in N variables over exact rationals.
//
// A series carries an explicit truncation order T: coefficients of total
// degree >= T are unknown (not zero). T == kExact marks a polynomial whose
// tail is known to vanish. Every operation propagates truncation so that no
// reported coefficient depends on unknown tail terms.

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "septool/error.hpp"
#include "septool/rational.hpp"

namespace septool {

inline constexpr int kExact = std::numeric_limits<int>::max();
inline constexpr int kDefaultOrder = 24;

// Saturating arithmetic on truncation orders; kExact absorbs.
namespace order {
inline int add(int a, int b) {
  if (a == kExact || b == kExact) return kExact;
  long long s = static_cast<long long>(a) + b;
  return s >= kExact ? kExact - 1 : static_cast<int>(s);
}
inline int sub(int a, int b) {
  if (a == kExact) return kExact;
  return a - b;
}
inline int mul(int a, int b) {
  if (a == 0 || b == 0) return 0;
  if (a == kExact || b == kExact) return kExact;
  long long p = static_cast<long long>(a) * b;
  return p >= kExact ? kExact - 1 : static_cast<int>(p);
}
inline std::string str(int t) { return t == kExact ? "exact" : std::to_string(t); }
}  // namespace order

template <std::size_t N>
class Series {
 public:
  using Exp = std::array<int, N>;
  using Vars = std::array<std::string, N>;
  using Terms = std::map<Exp, Rational>;

  Series() = default;
  explicit Series(Vars vars, int trunc = kExact) : vars_(std::move(vars)), trunc_(trunc) {
    if (trunc_ < 1) fail(Errc::TruncationTooSmall, "series truncation must be >= 1");
  }
  Series(Vars vars, Terms terms, int trunc) : Series(std::move(vars), trunc) {
    terms_ = std::move(terms);
    normalize();
  }

  static Series constant(Vars vars, const Rational& c, int trunc = kExact) {
    Series s(std::move(vars), trunc);
    if (!c.is_zero()) s.terms_[Exp{}] = c;
    return s;
  }
  static Series variable(Vars vars, std::size_t index, int trunc = kExact) {
    Exp e{};
    e[index] = 1;
    return monomial(std::move(vars), e, Rational(1), trunc);
  }
  static Series monomial(Vars vars, const Exp& e, const Rational& c, int trunc = kExact) {
    Series s(std::move(vars), trunc);
    if (!c.is_zero() && degree_of(e) < trunc) s.terms_[e] = c;
    return s;
  }

  static int degree_of(const Exp& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
  }

  const Vars& vars() const { return vars_; }
  int trunc() const { return trunc_; }
  bool exact() const { return trunc_ == kExact; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::size_t var_index(std::string_view name) const {
    for (std::size_t i = 0; i < N; ++i)
      if (vars_[i] == name) return i;
    fail(Errc::VariableMismatch, "unknown variable '" + std::string(name) + "'");
  }

  /// Coefficient of x^e; throws when the degree lies beyond the truncation.
  Rational coeff(const Exp& e) const {
    if (degree_of(e) >= trunc_)
      fail(Errc::TruncationTooSmall, "coefficient of degree " + std::to_string(degree_of(e)) +
                                         " is beyond truncation " + order::str(trunc_));
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coeff(Exp{}); }

  /// Lowest degree of a nonzero term; the truncation order when none is known.
  int order() const {
    int o = trunc_;
    for (const auto& [e, c] : terms_) o = std::min(o, degree_of(e));
    return o;
  }
  /// Highest stored degree, -1 for the zero series.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
  }
  /// Smallest exponent of one variable over stored terms (kExact for zero).
  int order_in(std::size_t var) const {
    int o = kExact;
    for (const auto& [e, c] : terms_) o = std::min(o, e[var]);
    return o;
  }
  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  Series truncated(int t) const {
    Series r = *this;
    r.trunc_ = std::min(trunc_, t);
    r.normalize();
    return r;
  }
  Series homogeneous_part(int d) const {
    Series r(vars_, kExact);
    for (const auto& [e, c] : terms_)
      if (degree_of(e) == d) r.terms_.emplace(e, c);
    return r;
  }
  Series with_vars(Vars vars) const {
    Series r = *this;
    r.vars_ = std::move(vars);
    return r;
  }
  /// Same terms, declared exact. Only valid when the caller knows the tail vanishes.
  Series as_exact() const {
    Series r = *this;
    r.trunc_ = kExact;
    return r;
  }

  /// Sum of the stored terms at a point (the truncation polynomial).
  Rational evaluate(const std::array<Rational, N>& point) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < N; ++i)
        if (e[i] != 0) t *= point[i].pow(static_cast<unsigned>(e[i]));
      acc += t;
    }
    return acc;
  }

  Series& operator+=(const Series& o) {
    check_vars(o);
    trunc_ = std::min(trunc_, o.trunc_);
    for (const auto& [e, c] : o.terms_) terms_[e] += c;
    normalize();
    return *this;
  }
  Series& operator-=(const Series& o) {
    check_vars(o);
    trunc_ = std::min(trunc_, o.trunc_);
    for (const auto& [e, c] : o.terms_) terms_[e] -= c;
    normalize();
    return *this;
  }
  Series& operator*=(const Rational& k) {
    if (k.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(Series a) { return a *= Rational(-1); }
  friend Series operator*(Series a, const Rational& k) { return a *= k; }
  friend Series operator*(const Rational& k, Series a) { return a *= k; }

  /// Cauchy product. The result is known below
  /// min(a.trunc + ord(b), b.trunc + ord(a)), which is the exact validity window.
  friend Series operator*(const Series& a, const Series& b) {
    a.check_vars(b);
    int t = std::min(order::add(a.trunc_, b.order()), order::add(b.trunc_, a.order()));
    Series r(a.vars_, t);
    for (const auto& [ea, ca] : a.terms_) {
      int da = degree_of(ea);
      for (const auto& [eb, cb] : b.terms_) {
        if (da + degree_of(eb) >= t) continue;
        Exp e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        r.terms_[e] += ca * cb;
      }
    }
    r.normalize();
    return r;
  }

  friend bool operator==(const Series& a, const Series& b) = default;

  void check_vars(const Series& o) const {
    if (vars_ != o.vars_) fail(Errc::VariableMismatch, "series over different variables");
  }

  std::string to_string() const;

 private:
  void normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second.is_zero() || degree_of(it->first) >= trunc_)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  Vars vars_{};
  Terms terms_;
  int trunc_ = kExact;
};

using Series1 = Series<1>;
using Series2 = Series<2>;
using Series3 = Series<3>;

/// Univariate series from a dense coefficient list (index = exponent).
Series1 series1(const std::string& var, const std::vector<Rational>& coeffs, int trunc = kExact);

/// Renders terms in descending total degree order, e.g. "x^2*y - 1/3*y + O(5)".
template <std::size_t N>
std::string Series<N>::to_string() const {
  std::vector<std::pair<Exp, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    int dl = degree_of(l.first), dr = degree_of(r.first);
    return dl != dr ? dl < dr : l.first > r.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    bool neg = c.sign() < 0;
    Rational mag = c.abs();
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    bool unit = degree_of(e) > 0 && mag == Rational(1);
    bool need_star = false;
    if (!unit) {
      os << mag.str();
      need_star = true;
    }
    for (std::size_t i = 0; i < N; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << vars_[i];
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  if (!exact()) {
    os << (first ? "" : " + ") << "O(" << trunc_ << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace detail {

/// Exact division of a homogeneous polynomial by a homogeneous divisor using
/// lexicographic leading terms. A single polynomial is a Groebner basis of its
/// ideal, so a nonzero remainder proves non-divisibility.
template <std::size_t N>
typename Series<N>::Terms homogeneous_divide(typename Series<N>::Terms p,
                                             const typename Series<N>::Terms& d) {
  using Exp = typename Series<N>::Exp;
  typename Series<N>::Terms q;
  const auto& [lead_e, lead_c] = *d.rbegin();
  while (!p.empty()) {
    auto [pe, pc] = *p.rbegin();
    Exp qe;
    for (std::size_t i = 0; i < N; ++i) {
      qe[i] = pe[i] - lead_e[i];
      if (qe[i] < 0) fail(Errc::NotDivisible, "remainder term is forced nonzero");
    }
    Rational qc = pc / lead_c;
    q[qe] += qc;
    for (const auto& [de, dc] : d) {
      Exp e;
      for (std::size_t i = 0; i < N; ++i) e[i] = de[i] + qe[i];
      auto& slot = p[e];
      slot -= qc * dc;
      if (slot.is_zero()) p.erase(e);
    }
  }
  return q;
}

}  // namespace detail

/// Quotient q with a = b*q up to the joint truncation. Known below
/// min(a.trunc, b.trunc) - ord(b); when both inputs are exact the quotient is
/// exact if it terminates and otherwise truncated at `cap`.
template <std::size_t N>
Series<N> divide_exact(const Series<N>& a, const Series<N>& b, int cap = kDefaultOrder) {
  a.check_vars(b);
  if (b.is_zero()) fail(Errc::DivisionByZero, "division by a series with no known terms");
  const int d = b.order();
  const auto lead = b.homogeneous_part(d).terms();
  int limit = order::sub(std::min(a.trunc(), b.trunc()), d);
  if (limit == kExact) limit = cap;
  if (limit < 1) fail(Errc::TruncationTooSmall, "quotient has no known coefficients");

  // Exact inputs keep the full remainder so termination is detected honestly.
  const bool exact_inputs = a.exact() && b.exact();
  Series<N> rem = exact_inputs ? a : a.truncated(order::add(limit, d));
  typename Series<N>::Terms quotient;
  bool terminated = false;
  while (true) {
    if (rem.is_zero()) {
      terminated = true;
      break;
    }
    int deg = rem.order();
    if (deg < d) fail(Errc::NotDivisible, "remainder term of degree " + std::to_string(deg) +
                                              " is below the divisor order");
    if (deg - d >= limit) break;
    auto part = detail::homogeneous_divide<N>(rem.homogeneous_part(deg).terms(), lead);
    Series<N> qk(a.vars(), part, kExact);
    for (const auto& [e, c] : part) quotient[e] += c;
    rem = rem - (b * qk);
    if (!exact_inputs) rem = rem.truncated(order::add(limit, d));
  }
  int t = (terminated && exact_inputs) ? kExact : limit;
  return Series<N>(a.vars(), std::move(quotient), t);
}

/// Multiplicative inverse of a unit (nonzero constant term).
template <std::size_t N>
Series<N> invert_unit(const Series<N>& u, int cap = kDefaultOrder) {
  if (u.trunc() < 1 || u.terms().count(typename Series<N>::Exp{}) == 0)
    fail(Errc::NotAUnit, "constant term is zero");
  return divide_exact(Series<N>::constant(u.vars(), Rational(1)), u, cap);
}

/// Formal partial derivative; the truncation drops by one.
template <std::size_t N>
Series<N> derive(const Series<N>& s, std::size_t var) {
  typename Series<N>::Terms out;
  for (const auto& [e, c] : s.terms()) {
    if (e[var] == 0) continue;
    auto f = e;
    f[var] -= 1;
    out[f] = c * Rational(e[var]);
  }
  int t = order::sub(s.trunc(), 1);
  if (t < 1) fail(Errc::TruncationTooSmall, "derivative of a series with truncation 1");
  return Series<N>(s.vars(), std::move(out), t);
}

template <std::size_t N>
Series<N> derive(const Series<N>& s, std::string_view var) {
  return derive(s, s.var_index(var));
}

/// Divides by a monomial; every stored term must contain it.
template <std::size_t N>
Series<N> divide_by_monomial(const Series<N>& s, const typename Series<N>::Exp& m) {
  typename Series<N>::Terms out;
  for (const auto& [e, c] : s.terms()) {
    auto f = e;
    for (std::size_t i = 0; i < N; ++i) {
      f[i] -= m[i];
      if (f[i] < 0) fail(Errc::NotDivisible, "term not divisible by monomial");
    }
    out[f] = c;
  }
  int t = order::sub(s.trunc(), Series<N>::degree_of(m));
  if (t < 1) fail(Errc::TruncationTooSmall, "monomial division exhausts the truncation");
  return Series<N>(s.vars(), std::move(out), t);
}

template <std::size_t N>
Series<N> multiply_by_monomial(const Series<N>& s, const typename Series<N>::Exp& m) {
  typename Series<N>::Terms out;
  for (const auto& [e, c] : s.terms()) {
    auto f = e;
    for (std::size_t i = 0; i < N; ++i) f[i] += m[i];
    out[f] = c;
  }
  return Series<N>(s.vars(), std::move(out), order::add(s.trunc(), Series<N>::degree_of(m)));
}

/// Composition s(g_1, ..., g_N) with images in an M-variable ring.
///
/// Truncation rule: the unknown tail of s (degree >= T_s) contributes at
/// degree >= T_s * min ord(g_k); an unknown tail of g_k inside the monomial
/// x^e contributes at degree >= trunc(g_k) - ord(g_k) + sum_j e_j ord(g_j).
/// The result is known strictly below the minimum of these bounds. Inner
/// series with a constant term are only allowed when s is exact.
template <std::size_t N, std::size_t M>
Series<M> compose(const Series<N>& s, const std::array<Series<M>, N>& images) {
  const auto& vars = images[0].vars();
  for (const auto& g : images) images[0].check_vars(g);

  std::array<int, N> ord{};
  int min_ord = kExact;
  for (std::size_t k = 0; k < N; ++k) {
    ord[k] = images[k].order();
    min_ord = std::min(min_ord, ord[k]);
  }
  int t = kExact;
  if (!s.exact()) {
    if (min_ord == 0)
      fail(Errc::CompositionUndefined,
           "inner series with nonzero constant term inside a truncated series");
    t = std::min(t, order::mul(s.trunc(), min_ord));
  }
  std::array<int, N> max_exp{};
  for (const auto& [e, c] : s.terms()) {
    int base = 0;
    for (std::size_t j = 0; j < N; ++j) base = order::add(base, order::mul(e[j], ord[j]));
    for (std::size_t k = 0; k < N; ++k) {
      max_exp[k] = std::max(max_exp[k], e[k]);
      if (e[k] >= 1 && !images[k].exact() && base != kExact)
        t = std::min(t, base - ord[k] + images[k].trunc());
    }
  }
  if (t < 1) fail(Errc::TruncationTooSmall, "composition has no known coefficients");

  std::array<std::vector<Series<M>>, N> powers;
  for (std::size_t k = 0; k < N; ++k) {
    powers[k].push_back(Series<M>::constant(vars, Rational(1)));
    for (int p = 1; p <= max_exp[k]; ++p)
      powers[k].push_back((powers[k].back() * images[k]).truncated(t));
  }
  Series<M> result(vars, t);
  for (const auto& [e, c] : s.terms()) {
    Series<M> term = Series<M>::constant(vars, c, t);
    for (std::size_t k = 0; k < N; ++k)
      if (e[k] > 0) term = (term * powers[k][static_cast<std::size_t>(e[k])]).truncated(t);
    result += term;
  }
  return result.truncated(t);
}

/// Same-ring substitution of named variables; unnamed variables map to themselves.
template <std::size_t N>
Series<N> substitute(const Series<N>& s, const std::map<std::string, Series<N>>& assignments) {
  std::array<Series<N>, N> images;
  for (std::size_t k = 0; k < N; ++k) {
    auto it = assignments.find(s.vars()[k]);
    images[k] = it != assignments.end() ? it->second : Series<N>::variable(s.vars(), k);
  }
  for (const auto& [name, g] : assignments) {
    s.var_index(name);
    s.check_vars(g);
  }
  return compose(s, images);
}

/// Equality of the coefficients both series know.
template <std::size_t N>
bool agree(const Series<N>& a, const Series<N>& b) {
  if (a.vars() != b.vars()) return false;
  int t = std::min(a.trunc(), b.trunc());
  return a.truncated(t).terms() == b.truncated(t).terms();
}

}  // namespace septool
