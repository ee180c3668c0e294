#include "septool/blowup.hpp"

#include <cctype>
#include <functional>

namespace septool {

namespace {

// y -> y1 -> y2 ...
std::string next_name(const std::string& v) {
  std::size_t i = v.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(v[i - 1]))) --i;
  if (i == v.size()) return v + "1";
  return v.substr(0, i) + std::to_string(std::stoi(v.substr(i)) + 1);
}

int field_order(const PlanarField& f) {
  if (f[0].is_zero() && f[1].is_zero() && f.exact())
    fail(Errc::InvalidArgument, "cannot blow up the zero field");
  int nu = std::min(f[0].order(), f[1].order());
  if (nu >= f.trunc())
    fail(Errc::TruncationTooSmall, "truncation too small to determine the multiplicity");
  return nu;
}

}  // namespace

std::string chart_name(ChartKind kind) { return kind == ChartKind::X ? "x-chart" : "y-chart"; }

std::string leaf_name(LeafKind kind) {
  switch (kind) {
    case LeafKind::None: return "interior";
    case LeafKind::NonSingular: return "nonsingular";
    case LeafKind::Simple: return "simple";
    case LeafKind::SaddleNode: return "saddle-node";
    case LeafKind::Complex: return "complex-eigenvalues";
    case LeafKind::Dicritical: return "dicritical";
    case LeafKind::DepthCapped: return "depth-capped";
  }
  return "?";
}

BlowupResult blowup_point(const PlanarField& f, ChartKind kind) {
  if (!f.singular_at_origin()) fail(Errc::NotSingular, "blow-up center is not a singular point");
  const int nu = field_order(f);
  const auto& old = f.vars();
  // d = divisor variable index in the new chart, o = the other one.
  const std::size_t d = kind == ChartKind::X ? 0 : 1;
  const std::size_t o = 1 - d;
  Series2::Vars vars = old;
  vars[o] = next_name(old[o]);
  Series2 div_var = Series2::variable(vars, d);
  Series2 slope_var = Series2::variable(vars, o);

  std::array<Series2, 2> images;
  images[d] = div_var;
  images[o] = div_var * slope_var;
  Series2 pd = compose(f[d], images);
  Series2 po = compose(f[o], images);
  Series2::Exp unit_div{};
  unit_div[d] = 1;
  // slope' = (o' - slope * d') / divisor
  Series2 slope_dot = divide_by_monomial(po - slope_var * pd, unit_div);

  Series2::Exp power{};
  power[d] = nu - 1;
  std::array<Series2, 2> comps;
  comps[d] = divide_by_monomial(pd, power);
  comps[o] = divide_by_monomial(slope_dot, power);
  return {PlanarField(comps), nu - 1};
}

PlanarField translate(const PlanarField& f, const Rational& px, const Rational& py) {
  if (px.is_zero() && py.is_zero()) return f;
  const auto& v = f.vars();
  std::array<Series2, 2> images{Series2::variable(v, 0) + Series2::constant(v, px),
                                Series2::variable(v, 1) + Series2::constant(v, py)};
  return PlanarField({compose(f[0], images), compose(f[1], images)});
}

PlanarField blowup_along(const PlanarField& f, const Direction& dir, BlowupChart* step) {
  BlowupChart chart;
  PlanarField out;
  switch (dir.kind) {
    case Direction::Kind::Slope: {
      auto r = blowup_point(f, ChartKind::X);
      chart = {ChartKind::X, dir.slope, r.multiplicity};
      out = translate(r.field, Rational(0), dir.slope);
      break;
    }
    case Direction::Kind::Vertical: {
      auto r = blowup_point(f, ChartKind::Y);
      chart = {ChartKind::Y, Rational(0), r.multiplicity};
      out = r.field;
      break;
    }
    case Direction::Kind::Irrational:
      fail(Errc::InvalidArgument, "blow-up along an irrational direction is not supported");
  }
  if (step) *step = chart;
  return out;
}

std::vector<const ReductionNode*> ReductionTree::leaves() const {
  std::vector<const ReductionNode*> out;
  for (const auto& n : nodes)
    if (n.leaf != LeafKind::None) out.push_back(&n);
  return out;
}

ReductionTree seidenberg_reduce(const PlanarField& f, const ReduceOptions& options) {
  if (options.max_depth < 1) fail(Errc::InvalidArgument, "max_depth must be >= 1");
  if (!f.singular_at_origin()) fail(Errc::NotSingular, "field does not vanish at the origin");
  ReductionTree tree;

  std::function<void(int, int)> expand = [&](int id, int pursuit) {
    auto add_child = [&](const Direction& dir, bool weak) {
      BlowupChart step;
      PlanarField child_field = blowup_along(tree.nodes[static_cast<std::size_t>(id)].field, dir, &step);
      ReductionNode child;
      child.id = static_cast<int>(tree.nodes.size());
      child.parent = id;
      child.depth = tree.nodes[static_cast<std::size_t>(id)].depth + 1;
      child.step = step;
      child.field = std::move(child_field);
      child.weak_pursuit = weak;
      tree.nodes.push_back(std::move(child));
      tree.nodes[static_cast<std::size_t>(id)].children.push_back(tree.nodes.back().id);
      return tree.nodes.back().id;
    };

    auto& node = tree.nodes[static_cast<std::size_t>(id)];
    node.classification = classify_singularity(node.field);
    switch (node.classification.tag) {
      case SingularityTag::NonSingular: node.leaf = LeafKind::NonSingular; return;
      case SingularityTag::SimpleTwoSeparatrix: node.leaf = LeafKind::Simple; return;
      case SingularityTag::ComplexEigenvalues: node.leaf = LeafKind::Complex; return;
      case SingularityTag::SaddleNode: {
        node.leaf = LeafKind::SaddleNode;
        if (pursuit <= 0 || node.depth >= options.max_depth) return;
        for (const auto& ed : rational_eigendirections(*node.classification.linear)) {
          if (!ed.eigenvalue.is_zero()) continue;
          int child = add_child(ed.direction, true);
          expand(child, pursuit - 1);
          break;
        }
        return;
      }
      case SingularityTag::ResonantOrDegenerate: break;
    }
    if (node.depth >= options.max_depth) {
      node.leaf = LeafKind::DepthCapped;
      return;
    }
    try {
      node.cone = tangent_cone(node.field);
    } catch (const Error& e) {
      if (e.code() != Errc::IdenticallyZeroCone) throw;
      node.leaf = LeafKind::Dicritical;
      return;
    }
    const auto dirs = node.cone->directions;
    for (const auto& dir : dirs) {
      if (dir.kind == Direction::Kind::Irrational) {
        tree.nodes[static_cast<std::size_t>(id)].deferred.push_back(dir);
        continue;
      }
      int child = add_child(dir, false);
      expand(child, pursuit);
    }
  };

  ReductionNode root;
  root.field = f;
  tree.nodes.push_back(std::move(root));
  expand(0, options.weak_pursuit);
  return tree;
}

PlanarField second_transform_Ya(const Series1& a, int order) {
  PlanarField ya = ya_field(a);
  TangentCone cone = tangent_cone(ya);
  if (cone.directions.size() != 1)
    fail(Errc::HypothesisViolated, "tangent cone of Y_a must have a single real direction");
  PlanarField first = blowup_along(ya, cone.directions.front());
  auto cls = classify_singularity(first);
  if (cls.tag != SingularityTag::SaddleNode)
    fail(Errc::HypothesisViolated, "first transform of Y_a is not a saddle-node");
  for (const auto& ed : rational_eigendirections(*cls.linear))
    if (ed.eigenvalue.is_zero()) return blowup_along(first, ed.direction).truncated(order);
  fail(Errc::HypothesisViolated, "no weak direction at the first saddle-node");
}

PlanarField second_transform_closed_form(const Series1& a, int order) {
  check_family_parameter(a, "a");
  const Series2::Vars v{"x", "y2"};
  Series2 x = Series2::variable(v, 0), y2 = Series2::variable(v, 1);
  Series2 one = Series2::constant(v, Rational(1));
  Series2 u = one + y2 * y2;
  Series2 a2 = compose(a.with_vars({"x"}), std::array<Series2, 1>{x});
  return planar(x * x * x * u, -(y2 * (one + Rational(2) * x * x * u)) + a2 * u).truncated(order);
}

PlanarField ramify_to_xi(const PlanarField& second, const Series1& alpha, int order) {
  const auto& v = second.vars();
  const int cap = 2 * order + 2;
  Series2 w = Series2::variable(v, 1);
  Series2 unit = Series2::constant(v, Rational(1)) + w * w;
  Series2 a = divide_exact(second[0], unit, cap);
  Series2 b = divide_exact(second[1], unit, cap);
  Series2 zdot = Rational(4) * multiply_by_monomial(a, {1, 0});  // dz = 4x dx

  const Series2::Vars out_vars{"z", "w"};
  auto pushforward = [&](const Series2& s) {
    Series2::Terms terms;
    for (const auto& [e, c] : s.terms()) {
      if (e[0] % 2 != 0)
        fail(Errc::HypothesisViolated, "field is not even in " + v[0] + "; a(x) is not alpha(2x^2)");
      terms[{e[0] / 2, e[1]}] = c / Rational(2).pow(static_cast<unsigned>(e[0] / 2));
    }
    int t = s.exact() ? kExact : (s.trunc() + 1) / 2;
    return Series2(out_vars, std::move(terms), t);
  };
  PlanarField xi = PlanarField({pushforward(zdot), pushforward(b)}).truncated(order);

  Series2::Terms free_terms;
  for (const auto& [e, c] : xi[1].terms())
    if (e[1] == 0) free_terms[e] = c;
  Series2 w_free(out_vars, free_terms, xi.trunc());
  Series2 alpha2 = compose(alpha.with_vars({"z"}), std::array<Series2, 1>{Series2::variable(out_vars, 0)});
  if (!agree(w_free, alpha2))
    fail(Errc::HypothesisViolated, "w-free part " + w_free.to_string() + " differs from alpha(z)");
  return xi;
}

Series1 ramification_pullback(const Series1& alpha) {
  Series1 two_x2 = Series1::monomial({"x"}, {2}, Rational(2));
  return compose(alpha, std::array<Series1, 1>{two_x2});
}

}  // namespace septool
