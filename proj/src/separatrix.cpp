#include "septool/separatrix.hpp"

#include <sstream>

namespace septool {

namespace {

const Series1::Vars kT{"t"};

Series2 swap_vars(const Series2& s) {
  Series2::Terms out;
  for (const auto& [e, c] : s.terms()) out[{e[1], e[0]}] = c;
  return Series2({s.vars()[1], s.vars()[0]}, std::move(out), s.trunc());
}

bool is_identity(const Series1& s) { return s.exact() && s == Series1::variable(s.vars(), 0); }

Direction tangent_of(const std::array<Series1, 2>& g) {
  int k = std::min(g[0].order(), g[1].order());
  if (k >= std::min(g[0].trunc(), g[1].trunc()))
    fail(Errc::TruncationTooSmall, "curve has no known leading term");
  Rational c1 = g[0].coeff({k}), c2 = g[1].coeff({k});
  if (c1.is_zero()) return Direction::vertical();
  return Direction::horizontal_slope(c2 / c1);
}

}  // namespace

std::string form_name(CurveForm f) {
  switch (f) {
    case CurveForm::GraphY: return "graph-y";
    case CurveForm::GraphX: return "graph-x";
    case CurveForm::Parametrized: return "parametrized";
  }
  return "?";
}

std::string role_name(Role r) {
  switch (r) {
    case Role::Strong: return "strong";
    case Role::Weak: return "weak";
    case Role::Eigendirection: return "eigendirection";
    case Role::DivisorContained: return "divisor-contained";
  }
  return "?";
}

std::string uniqueness_name(Uniqueness u) {
  switch (u) {
    case Uniqueness::None: return "none";
    case Uniqueness::Unique: return "unique";
    case Uniqueness::Multiple: return "multiple";
    case Uniqueness::Conditional: return "conditional";
  }
  return "?";
}

Series1 FormalCurve::graph() const {
  switch (form) {
    case CurveForm::GraphY: return param[1].with_vars({vars[0]});
    case CurveForm::GraphX: return param[0].with_vars({vars[1]});
    case CurveForm::Parametrized: break;
  }
  fail(Errc::InvalidArgument, "curve is not a graph");
}

std::string FormalCurve::describe() const {
  std::ostringstream os;
  switch (form) {
    case CurveForm::GraphY: os << vars[1] << " = " << graph().to_string(); break;
    case CurveForm::GraphX: os << vars[0] << " = " << graph().to_string(); break;
    case CurveForm::Parametrized:
      os << "(" << vars[0] << ", " << vars[1] << ") = (" << param[0].to_string() << ", " << param[1].to_string()
         << ")";
      break;
  }
  return os.str();
}

Series1 graph_separatrix(const PlanarField& f, const Direction& dir, int order) {
  if (order < 2) fail(Errc::TruncationTooSmall, "graph separatrix needs order >= 2");
  if (dir.kind == Direction::Kind::Irrational)
    fail(Errc::NotPrepared, "irrational direction; no rational graph normalization");
  const bool vertical = dir.kind == Direction::Kind::Vertical;
  const PlanarField g = vertical ? planar(swap_vars(f[1]), swap_vars(f[0])) : f;
  const Rational c = vertical ? Rational(0) : dir.slope;

  const LinearPart lp = linear_part(g);
  const Rational lambda = lp.m[0][0] + lp.m[0][1] * c;
  if (lp.m[1][0] + lp.m[1][1] * c != lambda * c)
    fail(Errc::NotPrepared, "direction " + dir.describe() + " is not an eigendirection");
  const Rational mu = lp.trace - lambda;

  const int t = std::min(order, g.trunc());
  const Series1::Vars v{g.vars()[0]};
  const Series1 x = Series1::variable(v, 0);
  Series1::Terms coeffs;
  if (!c.is_zero()) coeffs[{1}] = c;
  for (int n = 2; n < t; ++n) {
    // s known below n, with s_n = 0; the residual's x^n coefficient is affine in s_n.
    Series1 s(v, coeffs, n + 1);
    std::array<Series1, 2> images{x, s};
    Series1 residual = compose(g[1], images) - derive(s, std::size_t{0}) * compose(g[0], images);
    Rational r = residual.coeff({n});
    Rational multiplier = mu - Rational(n) * lambda;
    if (multiplier.is_zero())
      fail(Errc::ResonanceError, "multiplier of the degree-" + std::to_string(n) + " coefficient vanishes");
    Rational sn = -r / multiplier;
    if (!sn.is_zero()) coeffs[{n}] = sn;
  }
  return Series1(v, std::move(coeffs), t);
}

Invariance verify_invariance(const PlanarField& f, const std::array<Series1, 2>& curve, int order) {
  std::array<Series1, 2> g{curve[0].truncated(order), curve[1].truncated(order)};
  g[0].check_vars(g[1]);
  Series1 a = compose(f[0], g), b = compose(f[1], g);
  Series1 d1 = derive(g[0], std::size_t{0}), d2 = derive(g[1], std::size_t{0});
  if (d1.is_zero() && d2.is_zero()) fail(Errc::DegenerateCurve, "both curve derivatives vanish");
  // Divide by the derivative of lower order.
  const bool first = !d1.is_zero() && (d2.is_zero() || d1.order() <= d2.order());
  const Series1& num = first ? a : b;
  const Series1& den = first ? d1 : d2;
  const Series1& other_val = first ? b : a;
  const Series1& other_der = first ? d2 : d1;
  Invariance out;
  try {
    out.h = divide_exact(num, den, order);
    out.residual = other_val - out.h * other_der;
  } catch (const Error& e) {
    if (e.code() != Errc::NotDivisible && e.code() != Errc::TruncationTooSmall) throw;
    out.divided = false;
    out.h = Series1(g[0].vars(), 1);
    out.residual = a * d2 - b * d1;
  }
  out.h_nonzero = !out.h.is_zero();
  return out;
}

Invariance verify_invariance(const PlanarField& f, const FormalCurve& curve, int order) {
  return verify_invariance(f, curve.param, order);
}

std::array<Series1, 2> blow_down(const std::array<Series1, 2>& curve, const BlowupChart& step) {
  const Series1& u = curve[0];
  const Series1& v = curve[1];
  const Series1 c = Series1::constant(u.vars(), step.center);
  if (step.kind == ChartKind::X) return {u, u * (v + c)};
  return {(u + c) * v, v};
}

SeparatrixReport separatrix_search(const PlanarField& f, int order, int max_depth) {
  SeparatrixReport rep;
  rep.tree = seidenberg_reduce(f, {max_depth, 0});
  const auto& nodes = rep.tree.nodes;
  for (const auto& node : nodes) {
    for (const auto& d : node.deferred)
      rep.unresolved.push_back("node " + std::to_string(node.id) + ": irrational direction " + d.describe() +
                               " not pursued");
    if (node.leaf == LeafKind::Dicritical)
      rep.unresolved.push_back("node " + std::to_string(node.id) + ": dicritical, separatrices not enumerated");
    if (node.leaf == LeafKind::DepthCapped)
      rep.unresolved.push_back("node " + std::to_string(node.id) + ": depth cap reached");
    if (node.leaf != LeafKind::Simple && node.leaf != LeafKind::SaddleNode) continue;

    std::vector<int> path;
    for (int id = node.id; id >= 0; id = nodes[static_cast<std::size_t>(id)].parent) path.insert(path.begin(), id);
    std::vector<BlowupChart> chain;
    for (int id : path)
      if (nodes[static_cast<std::size_t>(id)].step) chain.push_back(*nodes[static_cast<std::size_t>(id)].step);

    for (const auto& ed : rational_eigendirections(*node.classification.linear)) {
      Series1 s = graph_separatrix(node.field, ed.direction, order).with_vars(kT);
      Series1 t = Series1::variable(kT, 0);
      std::array<Series1, 2> cur = ed.direction.kind == Direction::Kind::Vertical ? std::array<Series1, 2>{s, t}
                                                                                  : std::array<Series1, 2>{t, s};
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) cur = blow_down(cur, *it);

      FormalCurve curve;
      curve.vars = f.vars();
      curve.param = cur;
      curve.chain = chain;
      curve.node_path = path;
      if (node.leaf == LeafKind::SaddleNode)
        curve.role = ed.eigenvalue.is_zero() ? Role::Weak : Role::Strong;
      if (cur[0].is_zero() && cur[1].is_zero()) {
        curve.role = Role::DivisorContained;
        rep.divisor_contained.push_back(std::move(curve));
        continue;
      }
      if (is_identity(cur[0])) curve.form = CurveForm::GraphY;
      else if (is_identity(cur[1])) curve.form = CurveForm::GraphX;
      curve.tangent = tangent_of(cur);
      Invariance inv = verify_invariance(f, curve, std::min(cur[0].trunc(), cur[1].trunc()));
      if (!inv.residual.is_zero())
        fail(Errc::NotPrepared, "blown-down curve fails the invariance check: " + inv.residual.to_string());
      curve.valid_order = inv.residual.trunc();
      rep.curves.push_back(std::move(curve));
    }
  }
  const std::size_t n = rep.curves.size();
  if (n >= 2) rep.uniqueness = Uniqueness::Multiple;
  else if (!rep.unresolved.empty()) rep.uniqueness = Uniqueness::Conditional;
  else rep.uniqueness = n == 1 ? Uniqueness::Unique : Uniqueness::None;
  return rep;
}

FiberSeparatrixReport fiber_separatrices(const Field3& f, std::size_t k, int order, int max_depth) {
  FiberSeparatrixReport out;
  out.fiber = f.vars()[k] + " = 0";
  out.restricted = restrict_to_fiber(f, k);
  out.planar = separatrix_search(out.restricted, order, max_depth);
  for (const auto& c : out.planar.curves) {
    std::array<Series1, 3> lifted;
    std::size_t slot = 0;
    for (std::size_t i = 0; i < 3; ++i) lifted[i] = i == k ? Series1(kT, kExact) : c.param[slot++];
    out.lifted.push_back(std::move(lifted));
  }
  return out;
}

FiberSeparatrixReport separatrices_of_X_a(const Series1& a, int order, int max_depth) {
  return fiber_separatrices(xa_field(a), 2, order, max_depth);
}

}  // namespace septool
