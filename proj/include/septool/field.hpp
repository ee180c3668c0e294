#pragma once

// Vector fields as tuples of truncated series, with the local invariants used
// by the reduction and separatrix machinery: linear part, singularity type,
// tangent cone, first-integral residuals and isolatedness witnesses.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "septool/series.hpp"
#include "septool/upoly.hpp"

namespace septool {

/// Vector field sum_i F_i d/dx_i; all components share variables and, after
/// construction, truncation order.
template <std::size_t N>
class VectorField {
 public:
  using Vars = typename Series<N>::Vars;

  VectorField() = default;
  explicit VectorField(std::array<Series<N>, N> components) : c_(std::move(components)) {
    int t = kExact;
    for (const auto& s : c_) {
      c_[0].check_vars(s);
      t = std::min(t, s.trunc());
    }
    for (auto& s : c_) s = s.truncated(t);
  }

  const Series<N>& operator[](std::size_t i) const { return c_[i]; }
  const std::array<Series<N>, N>& components() const { return c_; }
  const Vars& vars() const { return c_[0].vars(); }
  int trunc() const { return c_[0].trunc(); }
  bool exact() const { return trunc() == kExact; }

  bool singular_at_origin() const {
    for (const auto& s : c_)
      if (s.terms().count(typename Series<N>::Exp{})) return false;
    return true;
  }

  VectorField truncated(int t) const {
    auto c = c_;
    for (auto& s : c) s = s.truncated(t);
    return VectorField(c);
  }

  friend bool operator==(const VectorField& a, const VectorField& b) = default;

 private:
  std::array<Series<N>, N> c_;
};

using PlanarField = VectorField<2>;
using Field3 = VectorField<3>;

inline PlanarField planar(Series2 a, Series2 b) { return PlanarField({std::move(a), std::move(b)}); }

/// Jacobian of a planar field at the origin with derived invariants.
struct LinearPart {
  std::array<std::array<Rational, 2>, 2> m;
  Rational trace, det, discriminant;

  static LinearPart of_matrix(const std::array<std::array<Rational, 2>, 2>& m);
  bool is_zero() const;
};

enum class SingularityTag {
  NonSingular,
  SimpleTwoSeparatrix,
  SaddleNode,
  ComplexEigenvalues,
  ResonantOrDegenerate,
};

std::string tag_name(SingularityTag tag);

struct SingularityClass {
  SingularityTag tag = SingularityTag::NonSingular;
  std::optional<LinearPart> linear;
  /// Both eigenvalues when the discriminant is a rational square.
  std::optional<std::array<Rational, 2>> eigenvalues;
};

/// Real tangent direction of a homogeneous form in the (x, y) plane.
struct Direction {
  enum class Kind { Slope, Vertical, Irrational };
  Kind kind = Kind::Slope;
  Rational slope;   // y = slope * x (Slope)
  Rational lo, hi;  // isolating interval of the slope (Irrational)
  int multiplicity = 1;

  static Direction horizontal_slope(const Rational& s, int mult = 1) {
    Direction d;
    d.slope = s;
    d.multiplicity = mult;
    return d;
  }
  static Direction vertical(int mult = 1) {
    Direction d;
    d.kind = Kind::Vertical;
    d.multiplicity = mult;
    return d;
  }
  std::string describe() const;
  friend bool operator==(const Direction&, const Direction&) = default;
};

struct TangentCone {
  Series2 polynomial;  // homogeneous, exact
  int degree = 0;
  std::vector<Direction> directions;
  bool has_complex_factor = false;
};

LinearPart linear_part(const PlanarField& f);
SingularityClass classify_singularity(const PlanarField& f);

/// Lowest homogeneous part of y*A - x*B with (A, B) cut at their joint order.
/// Throws IdenticallyZeroCone for dicritical jets.
TangentCone tangent_cone(const PlanarField& f);

/// Real directions of a homogeneous binary form, with multiplicities.
std::vector<Direction> real_directions(const Series2& homogeneous, bool* complex_factor = nullptr);

/// Real eigen-directions of a linear part with their eigenvalues, when both
/// are rational (an eigenvalue of a rational matrix has a rational eigenvector).
struct EigenDirection {
  Direction direction;
  Rational eigenvalue;
};
std::vector<EigenDirection> rational_eigendirections(const LinearPart& lp);

/// df(F) = sum_i dF/dx_i * F_i.
template <std::size_t N>
Series<N> check_first_integral(const Series<N>& f, const VectorField<N>& field) {
  f.check_vars(field[0]);
  Series<N> acc(f.vars(), kExact);
  for (std::size_t i = 0; i < N; ++i) acc += derive(f, i) * field[i];
  return acc;
}

enum class Isolation { Yes, No, Unknown };
std::string isolation_name(Isolation v);

struct IsolationWitness {
  Isolation verdict = Isolation::Unknown;
  std::string certificate;
};

IsolationWitness isolated_singularity_witness(const PlanarField& f);
IsolationWitness isolated_singularity_witness(const Field3& f);

/// Positive-definite by structure: every monomial has only even exponents and
/// a positive coefficient, and each variable appears as a pure power.
template <std::size_t N>
bool structurally_positive_definite(const Series<N>& s) {
  if (!s.exact() || s.is_zero()) return false;
  std::array<bool, N> pure{};
  for (const auto& [e, c] : s.terms()) {
    if (c.sign() <= 0) return false;
    int nonzero = 0;
    for (std::size_t i = 0; i < N; ++i) {
      if (e[i] % 2 != 0) return false;
      if (e[i] > 0) ++nonzero;
    }
    if (Series<N>::degree_of(e) == 0) return false;
    if (nonzero == 1)
      for (std::size_t i = 0; i < N; ++i)
        if (e[i] > 0) pure[i] = true;
  }
  for (bool p : pure)
    if (!p) return false;
  return true;
}

/// Restriction of a 3D field to the fiber {x_k = 0}; requires F_k == 0 there.
PlanarField restrict_to_fiber(const Field3& f, std::size_t k);

/// Res_y(A, B) as a polynomial in x, for exact planar polynomials.
UPoly resultant_in(const Series2& a, const Series2& b, std::size_t eliminated);

// Fields from the worked example and standard test fields.

/// Throws HypothesisViolated unless a(0) = a'(0) = 0.
void check_family_parameter(const Series1& a, const std::string& what);

/// Y_a = (y^2 + x^4) d/dx + (-x y + x^3 a(x) + (a(x)/x) y^2) d/dy over (x, y).
PlanarField ya_field(const Series1& a);
/// X_a = Y_a + z^2 d/dx over (x, y, z).
Field3 xa_field(const Series1& a);
/// xi_alpha = z^2 d/dz + (-w(1+z) + w^3/(1+w^2) + alpha(z)) d/dw, known below `order`.
PlanarField xi_field(const Series1& alpha, int order);
/// N = z^2 d/dz - w(1+z) d/dw.
PlanarField saddle_node_normal_form();
PlanarField center_field();

}  // namespace septool
