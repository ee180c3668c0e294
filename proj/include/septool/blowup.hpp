#pragma once

#include <optional>
#include <string>
#include <vector>

#include "septool/field.hpp"

namespace septool {

/// x-directional chart: (x, y1) with y = x*y1. y-directional: (x1, y) with x = x1*y.
enum class ChartKind { X, Y };

std::string chart_name(ChartKind kind);

/// One blow-up followed by recentering at a point of the exceptional divisor.
/// The center is the divisor coordinate (y1 = c in the x-chart, x1 = c in the y-chart).
struct BlowupChart {
  ChartKind kind = ChartKind::X;
  Rational center;
  int multiplicity = 0;  // power of the divisor variable divided out
};

struct BlowupResult {
  PlanarField field;
  int multiplicity = 0;
};

/// Strict transform in a directional chart. The pulled-back field
/// (A', (B' - y1 A')/x) is divided by x^(nu-1), nu the order of F at 0; for
/// non-dicritical F this is the largest common power of the divisor equation.
BlowupResult blowup_point(const PlanarField& f, ChartKind kind);

/// Recenters at (px, py): x -> x + px, y -> y + py.
PlanarField translate(const PlanarField& f, const Rational& px, const Rational& py);

enum class LeafKind {
  None,  // interior node
  NonSingular,
  Simple,
  SaddleNode,
  Complex,
  Dicritical,
  DepthCapped,
};

std::string leaf_name(LeafKind kind);

struct ReductionNode {
  int id = 0;
  int parent = -1;
  int depth = 0;
  std::optional<BlowupChart> step;  // how this node was reached from its parent
  PlanarField field;
  SingularityClass classification;
  std::optional<TangentCone> cone;
  LeafKind leaf = LeafKind::None;
  bool weak_pursuit = false;            // expanded along a saddle-node weak direction
  std::vector<Direction> deferred;      // irrational directions, not pursued
  std::vector<int> children;
};

struct ReductionTree {
  std::vector<ReductionNode> nodes;  // nodes[0] is the root
  const ReductionNode& root() const { return nodes.front(); }
  std::vector<const ReductionNode*> leaves() const;
};

struct ReduceOptions {
  int max_depth = 8;
  /// Extra blow-ups along the weak direction of saddle-node leaves.
  int weak_pursuit = 0;
};

ReductionTree seidenberg_reduce(const PlanarField& f, const ReduceOptions& options = {});

/// Blow-up at a point of the divisor in a direction, returning the recentered field.
PlanarField blowup_along(const PlanarField& f, const Direction& dir, BlowupChart* step = nullptr);

/// Two x-directional blow-ups of Y_a at the origin, known below `order`.
PlanarField second_transform_Ya(const Series1& a, int order);

/// The second transform written in closed form over (x, y2):
/// x^3 (1 + y2^2) d/dx + (-y2 (1 + 2 x^2 (1 + y2^2)) + a(x) (1 + y2^2)) d/dy2.
PlanarField second_transform_closed_form(const Series1& a, int order);

/// Divides by the unit 1 + w^2 and pushes forward by z = 2x^2 (with dz = 4x dx);
/// checks that the w-free part of the result equals alpha(z).
PlanarField ramify_to_xi(const PlanarField& second, const Series1& alpha, int order);

/// a(x) = alpha(2 x^2).
Series1 ramification_pullback(const Series1& alpha);

}  // namespace septool
