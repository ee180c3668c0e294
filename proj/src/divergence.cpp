#include "septool/divergence.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace septool {

namespace {

struct Point {
  int n;
  double log_c;
};

std::vector<Point> window_points(const Series1& c, const Window& w, int& first, int& last) {
  if (w.first < 0 || w.last < w.first) fail(Errc::InvalidArgument, "bad coefficient window");
  first = w.first;
  last = w.last;
  if (!c.exact()) last = std::min(last, c.trunc() - 1);
  std::vector<Point> pts;
  for (int n = std::max(first, 1); n <= last; ++n) {
    Rational v = c.coeff({n});
    if (!v.is_zero()) pts.push_back({n, v.log_abs()});
  }
  return pts;
}

void need(const std::vector<Point>& pts, int min_points) {
  if (static_cast<int>(pts.size()) < min_points)
    fail(Errc::InsufficientData, "need at least " + std::to_string(min_points) + " nonzero coefficients in the window, have " +
                                     std::to_string(pts.size()));
}

// Average growth from the first point: the late slopes may not exceed the early ones by more than log 2.
bool geometric_bound(const std::vector<Point>& pts) {
  if (pts.size() < 3) return false;
  const std::size_t half = pts.size() / 2;
  double early = -std::numeric_limits<double>::infinity(), late = early;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    double q = (pts[i].log_c - pts[0].log_c) / (pts[i].n - pts[0].n);
    (i <= half ? early : late) = std::max(i <= half ? early : late, q);
  }
  return late <= early + std::log(2.0);
}

}  // namespace

std::string verdict_name(GevreyVerdict v) {
  switch (v) {
    case GevreyVerdict::Divergent: return "divergent-Gevrey-like";
    case GevreyVerdict::ConvergentLike: return "convergent-like";
    case GevreyVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string verdict_name(ElizarovVerdict v) {
  switch (v) {
    case ElizarovVerdict::Nonzero: return "nonzero";
    case ElizarovVerdict::Zero: return "zero";
    case ElizarovVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

GevreyReport gevrey_fit(const Series1& coeffs, const Window& window, const GevreyThresholds& th) {
  GevreyReport rep;
  auto pts = window_points(coeffs, window, rep.first, rep.last);
  need(pts, th.min_points);
  const auto m = static_cast<Eigen::Index>(pts.size());
  Eigen::MatrixXd design(m, 3);
  Eigen::VectorXd rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double n = pts[static_cast<std::size_t>(i)].n;
    design(i, 0) = n;
    design(i, 1) = n * std::log(n) - n;
    design(i, 2) = 1.0;
    rhs(i) = pts[static_cast<std::size_t>(i)].log_c;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::VectorXd sol = svd.solve(rhs);
  const auto& sv = svd.singularValues();
  rep.condition = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : std::numeric_limits<double>::infinity();
  rep.log_a = sol(0);
  rep.s_hat = sol(1);
  rep.constant = sol(2);
  rep.residual = std::sqrt((design * sol - rhs).squaredNorm() / static_cast<double>(m));
  rep.points = static_cast<int>(m);
  rep.geometric_bound = geometric_bound(pts);
  if (rep.s_hat >= th.divergent_s && rep.residual <= th.max_residual)
    rep.verdict = GevreyVerdict::Divergent;
  else if (rep.s_hat < th.convergent_s && rep.geometric_bound)
    rep.verdict = GevreyVerdict::ConvergentLike;
  return rep;
}

std::string gevrey_csv(const Series1& coeffs, const Window& window) {
  int first = 0, last = 0;
  std::ostringstream os;
  os << "n,log_abs_c\n";
  os.precision(15);
  for (const auto& p : window_points(coeffs, window, first, last)) os << p.n << ',' << p.log_c << '\n';
  return os.str();
}

BorelReport borel_radius(const Series1& coeffs, const Window& window) {
  int first = 0, last = 0;
  auto pts = window_points(coeffs, window, first, last);
  need(pts, 12);
  // log R_n = -(log|c_n| - log n!)/n
  std::vector<double> log_r;
  for (const auto& p : pts) log_r.push_back(-(p.log_c - std::lgamma(p.n + 1.0)) / p.n);
  BorelReport rep;
  rep.points = static_cast<int>(pts.size());
  const std::size_t q = std::max<std::size_t>(1, log_r.size() / 4);
  double head = 0, tail = 0;
  for (std::size_t i = 0; i < q; ++i) {
    head += log_r[i];
    tail += log_r[log_r.size() - 1 - i];
  }
  if ((tail - head) / static_cast<double>(q) > std::log(1.5)) {
    rep.entire = true;
    rep.radius = std::numeric_limits<double>::infinity();
    return rep;
  }
  double limsup = -std::numeric_limits<double>::infinity();
  for (std::size_t i = log_r.size() / 2; i < log_r.size(); ++i) limsup = std::max(limsup, -log_r[i]);
  rep.radius = std::exp(-limsup);
  return rep;
}

Series1 elizarov_coeffs(const Series1& alpha, int n) {
  check_family_parameter(alpha, "alpha");
  if (n < 2) fail(Errc::InvalidArgument, "need N >= 2");
  const Series1::Vars z{"z"};
  Series1 a = alpha.with_vars(z);
  Series1::Terms neg;
  for (const auto& [e, c] : a.terms()) neg[e] = (e[0] % 2 == 0) ? -c : c;  // -alpha(-z)
  Series1 num(z, neg, a.trunc());
  Series1 one_minus = Series1::constant(z, Rational(1)) - Series1::variable(z, 0);
  return divide_exact(num, one_minus, n + 1).truncated(n + 1);
}

ElizarovResult elizarov_derivative(const Series1& alpha, int n) {
  ElizarovResult r;
  r.n = alpha.exact() ? n : std::min(n, alpha.trunc() - 1);
  if (r.n < 2) fail(Errc::TruncationTooSmall, "alpha must be known through degree 2");
  r.c = elizarov_coeffs(alpha, r.n + 1);
  Rational s(0);
  for (int k = 2; k <= r.n; ++k) {
    s -= r.c.coeff({k}) * Rational(k) / factorial(static_cast<unsigned>(k + 1));
    r.partial_sums.push_back(s);
  }
  if (alpha.exact() && alpha.degree() <= r.n) {
    // c_k = c_{n+1} for k > n, and sum_{k>n} k/(k+1)! = 1/(n+1)!.
    r.limit = s - r.c.coeff({r.n + 1}) / factorial(static_cast<unsigned>(r.n + 1));
    r.tail_bound = Rational(0);
    r.verdict = r.limit->is_zero() ? ElizarovVerdict::Zero : ElizarovVerdict::Nonzero;
    return r;
  }
  // |c_k| <= m g^(k-n) past the window, and k/(k+1)! <= 1/k!.
  Rational m(0), g(1);
  for (int k = 2; k <= r.n; ++k) m = std::max(m, r.c.coeff({k}).abs());
  for (int k = std::max(3, r.n / 2); k <= r.n; ++k) {
    Rational prev = r.c.coeff({k - 1}), cur = r.c.coeff({k});
    if (!prev.is_zero()) g = std::max(g, (cur / prev).abs());
  }
  const Rational n2(r.n + 2);
  if (g >= n2) {
    r.verdict = ElizarovVerdict::Inconclusive;
    return r;
  }
  r.tail_bound = m * g / factorial(static_cast<unsigned>(r.n + 1)) / (Rational(1) - g / n2);
  if (m.is_zero())
    r.verdict = ElizarovVerdict::Zero;
  else if (s.abs() > r.tail_bound)
    r.verdict = ElizarovVerdict::Nonzero;
  return r;
}

CrossCheck divergence_cross_check(const Series1& alpha, const Rational& delta, int n, const Window& window) {
  if (delta.sign() < 0) fail(Errc::InvalidArgument, "delta must be non-negative");
  CrossCheck out;
  out.delta = delta;
  out.order = n;
  Series1 scaled = delta * alpha.with_vars({"z"});
  check_family_parameter(scaled, "delta*alpha");
  PlanarField xi = xi_field(scaled, n + 1);
  out.separatrix = graph_separatrix(xi, Direction::horizontal_slope(Rational(0)), n + 1);
  if (out.separatrix.is_zero()) {
    out.gevrey.identically_zero = true;
    out.gevrey.first = window.first;
    out.gevrey.last = window.last;
    out.gevrey.geometric_bound = true;
    out.gevrey.verdict = GevreyVerdict::ConvergentLike;
  } else {
    Window w = window;
    w.last = std::min(w.last, n);
    out.gevrey = gevrey_fit(out.separatrix, w);
  }
  out.elizarov = elizarov_derivative(delta.is_zero() ? Series1(Series1::Vars{"z"}) : alpha, n);
  out.agree = (out.gevrey.verdict == GevreyVerdict::Divergent && out.elizarov.verdict == ElizarovVerdict::Nonzero) ||
              (out.gevrey.verdict == GevreyVerdict::ConvergentLike && out.elizarov.verdict == ElizarovVerdict::Zero);
  return out;
}

}  // namespace septool
