#include "septool/field.hpp"

#include <algorithm>
#include <sstream>

namespace septool {

namespace {

using Exp2 = Series2::Exp;

Rational lin_coeff(const Series2& s, int i, int j) {
  if (s.trunc() < 2) fail(Errc::TruncationTooSmall, "linear part needs truncation >= 2");
  return s.coeff(Exp2{i, j});
}

}  // namespace

std::string tag_name(SingularityTag tag) {
  switch (tag) {
    case SingularityTag::NonSingular: return "NonSingular";
    case SingularityTag::SimpleTwoSeparatrix: return "SimpleTwoSeparatrix";
    case SingularityTag::SaddleNode: return "SaddleNode";
    case SingularityTag::ComplexEigenvalues: return "ComplexEigenvalues";
    case SingularityTag::ResonantOrDegenerate: return "ResonantOrDegenerate";
  }
  return "?";
}

std::string isolation_name(Isolation v) {
  switch (v) {
    case Isolation::Yes: return "yes";
    case Isolation::No: return "no";
    case Isolation::Unknown: return "unknown";
  }
  return "?";
}

std::string Direction::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Slope:
      if (slope.is_zero()) os << "y = 0";
      else if (slope == Rational(1)) os << "y = x";
      else if (slope == Rational(-1)) os << "y = -x";
      else os << "y = " << slope.str() << "*x";
      break;
    case Kind::Vertical: os << "x = 0"; break;
    case Kind::Irrational: os << "y = t*x, t in (" << lo.str() << ", " << hi.str() << ")"; break;
  }
  if (multiplicity > 1) os << " (multiplicity " << multiplicity << ")";
  return os.str();
}

LinearPart LinearPart::of_matrix(const std::array<std::array<Rational, 2>, 2>& m) {
  LinearPart lp;
  lp.m = m;
  lp.trace = m[0][0] + m[1][1];
  lp.det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  lp.discriminant = lp.trace * lp.trace - Rational(4) * lp.det;
  return lp;
}

bool LinearPart::is_zero() const {
  for (const auto& row : m)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

LinearPart linear_part(const PlanarField& f) {
  if (!f.singular_at_origin()) fail(Errc::NotSingular, "field does not vanish at the origin");
  const auto& a = f[0];
  const auto& b = f[1];
  return LinearPart::of_matrix(
      {{{lin_coeff(a, 1, 0), lin_coeff(a, 0, 1)}, {lin_coeff(b, 1, 0), lin_coeff(b, 0, 1)}}});
}

// Resonance check: if trace != 0 and the eigenvalue ratio is a rational q != -1,
// both eigenvalues are rational (mu = trace / (1 + q)). So with det > 0 (same
// signs) a positive rational ratio occurs exactly when the discriminant is a
// rational square; with det < 0 the ratio is negative.
SingularityClass classify_singularity(const PlanarField& f) {
  SingularityClass out;
  if (!f.singular_at_origin()) return out;
  LinearPart lp = linear_part(f);
  out.linear = lp;
  Rational root;
  if (rational_sqrt(lp.discriminant, root)) {
    out.eigenvalues = std::array<Rational, 2>{(lp.trace + root) / Rational(2),
                                              (lp.trace - root) / Rational(2)};
  }
  if (lp.trace.is_zero() && lp.det.is_zero()) {
    out.tag = SingularityTag::ResonantOrDegenerate;
  } else if (lp.discriminant.sign() < 0) {
    out.tag = SingularityTag::ComplexEigenvalues;
  } else if (lp.det.is_zero()) {
    out.tag = SingularityTag::SaddleNode;
  } else if (lp.det.sign() < 0) {
    out.tag = SingularityTag::SimpleTwoSeparatrix;
  } else if (out.eigenvalues) {
    out.tag = SingularityTag::ResonantOrDegenerate;
  } else {
    out.tag = SingularityTag::SimpleTwoSeparatrix;
  }
  return out;
}

std::vector<EigenDirection> rational_eigendirections(const LinearPart& lp) {
  std::vector<EigenDirection> out;
  Rational root;
  if (!rational_sqrt(lp.discriminant, root)) return out;
  std::vector<Rational> values{(lp.trace + root) / Rational(2)};
  if (!root.is_zero()) values.push_back((lp.trace - root) / Rational(2));
  for (const auto& lambda : values) {
    Rational a = lp.m[0][0] - lambda, b = lp.m[0][1];
    Rational c = lp.m[1][0], d = lp.m[1][1] - lambda;
    if (a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero()) {
      out.push_back({Direction::horizontal_slope(Rational(0)), lambda});
      out.push_back({Direction::vertical(), lambda});
      continue;
    }
    // Kernel of the nonzero row (p, q) is spanned by (-q, p).
    Rational p = a, q = b;
    if (p.is_zero() && q.is_zero()) {
      p = c;
      q = d;
    }
    if (q.is_zero())
      out.push_back({Direction::vertical(), lambda});
    else
      out.push_back({Direction::horizontal_slope(-p / q), lambda});
  }
  return out;
}

std::vector<Direction> real_directions(const Series2& h, bool* complex_factor) {
  const int m = h.degree();
  std::vector<Direction> dirs;
  int vertical = h.order_in(0);
  std::vector<Rational> coeffs(static_cast<std::size_t>(m) + 1);
  for (const auto& [e, c] : h.terms()) coeffs[static_cast<std::size_t>(e[1])] += c;
  UPoly p(coeffs);
  int real_count = vertical;
  auto factors = squarefree_factors(p);
  const Rational width(1, 1L << 30);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    int mult = static_cast<int>(i) + 1;
    for (const auto& r : real_roots(factors[i], width)) {
      Direction d;
      d.multiplicity = mult;
      if (r.rational) {
        d.slope = r.value;
      } else {
        d.kind = Direction::Kind::Irrational;
        d.lo = r.lo;
        d.hi = r.hi;
      }
      dirs.push_back(d);
      real_count += mult;
    }
  }
  std::sort(dirs.begin(), dirs.end(), [](const Direction& l, const Direction& r) {
    const Rational& lv = l.kind == Direction::Kind::Slope ? l.slope : l.lo;
    const Rational& rv = r.kind == Direction::Kind::Slope ? r.slope : r.lo;
    return lv < rv;
  });
  if (vertical > 0) dirs.push_back(Direction::vertical(vertical));
  if (complex_factor) *complex_factor = real_count < m;
  return dirs;
}

TangentCone tangent_cone(const PlanarField& f) {
  if (!f.singular_at_origin()) fail(Errc::NotSingular, "field does not vanish at the origin");
  const auto& a = f[0];
  const auto& b = f[1];
  if (a.is_zero() && b.is_zero()) {
    if (f.exact()) fail(Errc::IdenticallyZeroCone, "zero field");
    fail(Errc::TruncationTooSmall, "no known terms to determine the tangent cone");
  }
  int nu = std::min(a.order(), b.order());
  if (nu >= f.trunc()) fail(Errc::TruncationTooSmall, "order of the field exceeds its truncation");
  const Series2 x = Series2::variable(a.vars(), 0);
  const Series2 y = Series2::variable(a.vars(), 1);
  TangentCone cone;
  cone.polynomial = y * a.homogeneous_part(nu) - x * b.homogeneous_part(nu);
  if (cone.polynomial.is_zero())
    fail(Errc::IdenticallyZeroCone, "y*A - x*B vanishes at the leading order (dicritical)");
  cone.degree = nu + 1;
  cone.directions = real_directions(cone.polynomial, &cone.has_complex_factor);
  return cone;
}

UPoly resultant_in(const Series2& a, const Series2& b, std::size_t eliminated) {
  if (!a.exact() || !b.exact()) fail(Errc::InvalidArgument, "resultant needs polynomial inputs");
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t kept = 1 - eliminated;
  auto coeffs = [&](const Series2& s) {
    std::vector<std::vector<Rational>> dense(static_cast<std::size_t>(s.degree_in(eliminated)) + 1);
    for (const auto& [e, c] : s.terms()) {
      auto& row = dense[static_cast<std::size_t>(e[eliminated])];
      if (row.size() <= static_cast<std::size_t>(e[kept])) row.resize(static_cast<std::size_t>(e[kept]) + 1);
      row[static_cast<std::size_t>(e[kept])] = c;
    }
    std::vector<UPoly> out;
    for (auto& r : dense) out.emplace_back(r);
    return out;  // out[i] multiplies (eliminated var)^i
  };
  auto pa = coeffs(a), pb = coeffs(b);
  const int m = static_cast<int>(pa.size()) - 1, n = static_cast<int>(pb.size()) - 1;
  const int size = m + n;
  if (size == 0) return UPoly({Rational(1)});
  std::vector<std::vector<UPoly>> syl(static_cast<std::size_t>(size), std::vector<UPoly>(static_cast<std::size_t>(size)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = pa[static_cast<std::size_t>(m - i)];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) syl[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = pb[static_cast<std::size_t>(n - i)];
  return poly_determinant(std::move(syl));
}

IsolationWitness isolated_singularity_witness(const PlanarField& f) {
  if (!f.singular_at_origin()) return {Isolation::Unknown, "origin is not a singular point"};
  if (f.trunc() >= 2) {
    LinearPart lp = linear_part(f);
    if (!lp.det.is_zero())
      return {Isolation::Yes, "nondegenerate linear part (det = " + lp.det.str() + ")"};
  }
  for (std::size_t i = 0; i < 2; ++i)
    if (structurally_positive_definite(f[i]))
      return {Isolation::Yes, "component " + std::to_string(i) + " = " + f[i].to_string() +
                                  " is positive definite (even monomials, positive coefficients)"};
  if (!f.exact()) return {Isolation::Unknown, "truncated components admit no algebraic certificate"};
  if (f[0].is_zero() || f[1].is_zero())
    return {Isolation::No, "a component vanishes identically; the singular set is a curve"};
  UPoly ry = resultant_in(f[0], f[1], 1);
  UPoly rx = resultant_in(f[0], f[1], 0);
  if (ry.is_zero() || rx.is_zero())
    return {Isolation::No, "components share a non-constant common factor (vanishing resultant)"};
  std::ostringstream os;
  os << "Res_" << f.vars()[1] << " has degree " << ry.degree() << " and Res_" << f.vars()[0]
     << " has degree " << rx.degree() << "; both nonzero, so the common zeros are finite";
  return {Isolation::Yes, os.str()};
}

IsolationWitness isolated_singularity_witness(const Field3& f) {
  if (!f.singular_at_origin()) return {Isolation::Unknown, "origin is not a singular point"};
  for (std::size_t i = 0; i < 3; ++i)
    if (structurally_positive_definite(f[i]))
      return {Isolation::Yes, "component " + f.vars()[i] + " coefficient " + f[i].to_string() +
                                  " is positive definite off the origin"};
  return {Isolation::Unknown, "no positive-definite component; no 3D certificate attempted"};
}

PlanarField restrict_to_fiber(const Field3& f, std::size_t k) {
  Series2::Vars vars;
  std::array<Series2, 3> images;
  std::size_t slot = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != k) vars[slot++] = f.vars()[i];
  slot = 0;
  for (std::size_t i = 0; i < 3; ++i)
    images[i] = i == k ? Series2(vars, kExact) : Series2::variable(vars, slot++);
  if (!compose(f[k], images).is_zero())
    fail(Errc::HypothesisViolated, "fiber " + f.vars()[k] + " = 0 is not invariant");
  std::array<Series2, 2> comps;
  slot = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != k) comps[slot++] = compose(f[i], images);
  return PlanarField(comps);
}

void check_family_parameter(const Series1& a, const std::string& what) {
  if (a.trunc() < 2)
    fail(Errc::HypothesisViolated, what + ": truncation too small to check the hypothesis");
  if (!a.coeff({0}).is_zero() || !a.coeff({1}).is_zero())
    fail(Errc::HypothesisViolated,
         what + " must satisfy " + what + "(0) = " + what + "'(0) = 0, got " + a.to_string());
}

PlanarField ya_field(const Series1& a) {
  check_family_parameter(a, "a");
  const Series2::Vars v{"x", "y"};
  Series2 x = Series2::variable(v, 0), y = Series2::variable(v, 1);
  Series2 a2 = compose(a, std::array<Series2, 1>{x});
  Series2 a_over_x = divide_by_monomial(a2, {1, 0});
  Series2 x3 = Series2::monomial(v, {3, 0}, Rational(1));
  Series2 A = y * y + Series2::monomial(v, {4, 0}, Rational(1));
  Series2 B = -(x * y) + x3 * a2 + a_over_x * y * y;
  return planar(A, B);
}

Field3 xa_field(const Series1& a) {
  PlanarField ya = ya_field(a);
  const Series3::Vars v{"x", "y", "z"};
  std::array<Series3, 2> images{Series3::variable(v, 0), Series3::variable(v, 1)};
  Series3 z = Series3::variable(v, 2);
  return Field3({compose(ya[0], images) + z * z, compose(ya[1], images), Series3(v, kExact)});
}

PlanarField xi_field(const Series1& alpha, int order) {
  const Series2::Vars v{"z", "w"};
  Series2 z = Series2::variable(v, 0), w = Series2::variable(v, 1);
  Series2 one = Series2::constant(v, Rational(1));
  Series2 unit_inv = invert_unit(one + w * w, order);
  Series2 B = -(w * (one + z)) + w * w * w * unit_inv + compose(alpha, std::array<Series2, 1>{z});
  return planar(z * z, B).truncated(order);
}

PlanarField saddle_node_normal_form() {
  const Series2::Vars v{"z", "w"};
  Series2 z = Series2::variable(v, 0), w = Series2::variable(v, 1);
  return planar(z * z, -(w * (Series2::constant(v, Rational(1)) + z)));
}

PlanarField center_field() {
  const Series2::Vars v{"x", "y"};
  return planar(-Series2::variable(v, 1), Series2::variable(v, 0));
}

}  // namespace septool
