#include "septool/upoly.hpp"

#include <algorithm>

#include "septool/error.hpp"

namespace septool {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  return (i < 0 || i > degree()) ? Rational(0) : c_[static_cast<std::size_t>(i)];
}

Rational UPoly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = lead().inverse();
  return inv * *this;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + Rational(-1) * b; }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly operator*(const Rational& k, const UPoly& a) {
  std::vector<Rational> r = a.c_;
  for (auto& c : r) c *= k;
  return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> r = a.c_;
  int db = b.degree();
  std::vector<Rational> q(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)));
  for (int i = a.degree(); i >= db; --i) {
    const Rational& top = r[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    Rational f = top / b.lead();
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly UPoly::exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) fail(Errc::NotDivisible, "polynomial division leaves a remainder");
  return q;
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<UPoly> squarefree_factors(const UPoly& p) {
  std::vector<UPoly> out;
  if (p.degree() <= 0) return out;
  UPoly dp = p.derivative();
  UPoly a = UPoly::gcd(p, dp);
  UPoly b = UPoly::exact_div(p, a);
  UPoly c = UPoly::exact_div(dp, a);
  UPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UPoly g = UPoly::gcd(b, d);
    out.push_back(g);
    b = UPoly::exact_div(b, g);
    c = UPoly::exact_div(d, g);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() <= 0) out.pop_back();
  return out;
}

namespace {

std::vector<UPoly> sturm_chain(const UPoly& p) {
  std::vector<UPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    auto r = UPoly::divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(Rational(-1) * r);
  }
  return chain;
}

int sign_changes(const std::vector<UPoly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Primitive integer leading coefficient: a rational root p/q has q dividing it.
mpz_class integer_lead(const UPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class v = (c * Rational(l)).num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  mpz_class lead = (p.lead() * Rational(l)).num() / g;
  return abs(lead);
}

}  // namespace

int sturm_count(const UPoly& squarefree, const Rational& a, const Rational& b) {
  auto chain = sturm_chain(squarefree);
  return sign_changes(chain, a) - sign_changes(chain, b);
}

std::vector<RealRoot> real_roots(const UPoly& p, const Rational& width) {
  std::vector<RealRoot> roots;
  if (p.degree() <= 0) return roots;
  auto chain = sturm_chain(p);
  auto count = [&](const Rational& a, const Rational& b) {
    return sign_changes(chain, a) - sign_changes(chain, b);
  };
  Rational bound(1);
  for (int i = 0; i < p.degree(); ++i) bound = std::max(bound, Rational(1) + (p.coeff(i) / p.lead()).abs());
  const Rational lead_den(integer_lead(p));

  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int n = count(a, b);
    if (n == 0) continue;
    if (n > 1) {
      Rational mid = (a + b) / Rational(2);
      stack.emplace_back(a, mid);
      stack.emplace_back(mid, b);
      continue;
    }
    RealRoot root;
    if (p.eval(b).is_zero()) {
      root.rational = true;
      root.value = b;
      roots.push_back(root);
      continue;
    }
    Rational lo = a, hi = b;
    // Narrow until the open interval holds at most one candidate k/lead_den.
    bool found = false;
    while (true) {
      if ((hi - lo) * lead_den < Rational(1)) {
        mpz_class k;
        Rational scaled = lo * lead_den;
        mpz_fdiv_q(k.get_mpz_t(), scaled.num().get_mpz_t(), scaled.den().get_mpz_t());
        Rational cand = Rational(mpz_class(k + 1)) / lead_den;
        if (cand > lo && cand < hi && p.eval(cand).is_zero()) {
          root.rational = true;
          root.value = cand;
          found = true;
        }
        break;
      }
      Rational mid = (lo + hi) / Rational(2);
      if (p.eval(mid).is_zero()) {
        root.rational = true;
        root.value = mid;
        found = true;
        break;
      }
      if (count(lo, mid) == 1) hi = mid; else lo = mid;
    }
    if (!found) {
      while (hi - lo > width) {
        Rational mid = (lo + hi) / Rational(2);
        if (count(lo, mid) == 1) hi = mid; else lo = mid;
      }
      root.lo = lo;
      root.hi = hi;
    }
    roots.push_back(root);
  }
  std::sort(roots.begin(), roots.end(), [](const RealRoot& l, const RealRoot& r) {
    const Rational& lv = l.rational ? l.value : l.lo;
    const Rational& rv = r.rational ? r.value : r.lo;
    return lv < rv;
  });
  return roots;
}

UPoly poly_determinant(std::vector<std::vector<UPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UPoly({Rational(1)});
  int sign = 1;
  UPoly prev({Rational(1)});
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return {};
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = UPoly::exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = UPoly();
    }
    prev = m[k][k];
  }
  return sign < 0 ? Rational(-1) * m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace septool
