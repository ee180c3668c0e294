#include "septool/rational.hpp"

#include <cmath>

#include "septool/error.hpp"

namespace septool {

Rational::Rational(long num, long den) {
  if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num) : q_(num) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  mpz_class num, den = 1;
  auto bad = [&] { fail(Errc::ParseError, "malformed rational '" + s + "'"); };
  std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
  if (!ns.empty() && ns[0] == '+') ns.erase(0, 1);
  if (ns.empty() || num.set_str(ns, 10) != 0) bad();
  if (slash != std::string::npos) {
    std::string ds = s.substr(slash + 1);
    if (ds.empty() || ds[0] == '-' || ds[0] == '+' || den.set_str(ds, 10) != 0) bad();
  }
  return Rational(num, den);
}

Rational Rational::abs() const {
  Rational r;
  r.q_ = ::abs(q_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  Rational r;
  r.q_ = 1 / q_;
  return r;
}

Rational Rational::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
  return Rational(n, d);
}

double Rational::log_abs() const {
  if (is_zero()) return -HUGE_VAL;
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, q_.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, q_.get_den_mpz_t());
  return std::log(std::fabs(mn)) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(Errc::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  r.q_ = -a.q_;
  return r;
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (q.sign() < 0) return false;
  mpz_class n = q.num(), d = q.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  return true;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

}  // namespace septool
