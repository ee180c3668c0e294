#pragma once

#include <array>
#include <string>
#include <vector>

#include "septool/blowup.hpp"

namespace septool {

enum class CurveForm { GraphY, GraphX, Parametrized };  // y = s(x), x = s(y), (g1(t), g2(t))
enum class Role { Strong, Weak, Eigendirection, DivisorContained };
enum class Uniqueness { None, Unique, Multiple, Conditional };

std::string form_name(CurveForm f);
std::string role_name(Role r);
std::string uniqueness_name(Uniqueness u);

struct FormalCurve {
  CurveForm form = CurveForm::Parametrized;
  std::array<std::string, 2> vars{"x", "y"};  // coordinates of the field the curve lives in
  std::array<Series1, 2> param;   // (g1(t), g2(t)) in the coordinates of the field it lives in
  std::vector<BlowupChart> chain;  // blow-ups from the original field down to the leaf
  std::vector<int> node_path;      // reduction-tree node ids, root first
  Direction tangent;
  Role role = Role::Eigendirection;
  int valid_order = 0;  // invariance residual known (and zero) below this order

  /// The graph series for GraphY / GraphX forms, in the independent variable.
  Series1 graph() const;
  std::string describe() const;
};

struct Invariance {
  Series1 h;         // X(g(t)) = h(t) g'(t)
  Series1 residual;  // zero up to its truncation iff invariant
  bool h_nonzero = false;
  bool divided = true;  // false when h could not be computed; residual is then the cross product
};

/// Graph solution y = s(x) (or x = s(y) for a vertical direction) tangent to
/// an eigendirection of the linear part, known below min(order, F.trunc).
/// Each coefficient s_n has multiplier mu - n*lambda, lambda the eigenvalue of
/// the chosen direction.
Series1 graph_separatrix(const PlanarField& f, const Direction& dir, int order);

/// Compute h = A(g)/g1' (or B(g)/g2') by exact division and the residual
/// B(g) - h g2' (or A(g) - h g1').
Invariance verify_invariance(const PlanarField& f, const std::array<Series1, 2>& curve, int order);
Invariance verify_invariance(const PlanarField& f, const FormalCurve& curve, int order);

/// Image of a curve in the chart of `step` under the blow-down map.
std::array<Series1, 2> blow_down(const std::array<Series1, 2>& curve, const BlowupChart& step);

struct SeparatrixReport {
  ReductionTree tree;
  std::vector<FormalCurve> curves;             // in original coordinates
  std::vector<FormalCurve> divisor_contained;  // leaf curves inside the exceptional divisor
  std::vector<std::string> unresolved;         // deferred, dicritical and depth-capped branches
  Uniqueness uniqueness = Uniqueness::None;
};

SeparatrixReport separatrix_search(const PlanarField& f, int order, int max_depth = 8);

struct FiberSeparatrixReport {
  std::string fiber;  // e.g. "z = 0"
  PlanarField restricted;
  SeparatrixReport planar;
  std::vector<std::array<Series1, 3>> lifted;
};

/// Separatrices of a 3D field inside the invariant fiber {x_k = 0}.
FiberSeparatrixReport fiber_separatrices(const Field3& f, std::size_t k, int order, int max_depth = 8);
FiberSeparatrixReport separatrices_of_X_a(const Series1& a, int order, int max_depth = 8);

}  // namespace septool
