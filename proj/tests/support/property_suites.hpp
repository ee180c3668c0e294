#pragma once

// Randomized law checks shared by the unit tests and the acceptance runner.

#include <sstream>
#include <string>

#include "septool/blowup.hpp"
#include "support/random.hpp"

namespace septool::testing {

struct SuiteResult {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0; }
  SuiteResult& operator+=(const SuiteResult& o) {
    if (failures == 0 && o.failures > 0) first_failure = o.first_failure;
    cases += o.cases;
    failures += o.failures;
    return *this;
  }
};

inline SuiteResult series_ring_laws(Gen& g, int n) {
  SuiteResult r;
  for (int i = 0; i < n; ++i) {
    int t = g.integer(3, 9);
    Series2 a = g.series2(8, g.coin() ? kExact : t), b = g.series2(8, t + 1), c = g.series2(8, g.integer(2, 9));
    bool ok = ((a + b) + c) == (a + (b + c)) && agree(a * (b + c), a * b + a * c) && (a * b) == (b * a) &&
              agree((a * b) * c, a * (b * c));
    r.record(ok, "ring law, a = " + a.to_string());
  }
  return r;
}

inline SuiteResult series_inverse_laws(Gen& g, int n) {
  SuiteResult r;
  for (int i = 0; i < n; ++i) {
    Series2 u = g.unit2(5, g.coin() ? kExact : g.integer(2, 10));
    Series2 v = invert_unit(u, 12);
    Series2 one = Series2::constant(u.vars(), Rational(1));
    r.record(agree(u * v, one) && agree(v * u, one) && (u * v).trunc() >= std::min(u.trunc(), 12),
             "inverse, u = " + u.to_string());
  }
  return r;
}

inline SuiteResult series_division_roundtrip(Gen& g, int n) {
  SuiteResult r;
  for (int i = 0; i < n; ++i) {
    Series2 a = g.series2(6, g.coin() ? kExact : g.integer(4, 10));
    Series2 b = g.series2(4, kExact, 0.5);
    if (b.is_zero()) b = Series2::variable(b.vars(), 0);
    Series2 q = divide_exact(a * b, b, 14);
    r.record(agree(q, a), "division round trip, a = " + a.to_string() + ", b = " + b.to_string());
  }
  return r;
}

inline SuiteResult series_composition_law(Gen& g, int n) {
  SuiteResult r;
  const Series1::Vars z{"z"};
  for (int i = 0; i < n; ++i) {
    Series1 s = g.series<1>(z, 7, g.coin() ? kExact : 8);
    Series1 gg = g.series<1>(z, 4, g.coin() ? kExact : 6, 0.6, 1);
    Series1 h = g.series<1>(z, 4, g.coin() ? kExact : 6, 0.6, 1);
    if (gg.is_zero()) gg = Series1::variable(z, 0);
    if (h.is_zero()) h = Series1::variable(z, 0);
    using A = std::array<Series1, 1>;
    Series1 lhs = compose(compose(s, A{gg}), A{h});
    Series1 rhs = compose(s, A{compose(gg, A{h})});
    r.record(agree(lhs, rhs), "composition law, s = " + s.to_string());
  }
  return r;
}

/// c x1^i y^j -> c x^j y1^(j + D - i): the image under x1 = 1/y1, y = x y1,
/// multiplied by y1^D.
inline Series2 to_x_chart(const Series2& s, const Series2::Vars& vars, int d) {
  Series2::Terms out;
  for (const auto& [e, c] : s.terms()) out[{e[1], e[1] + d - e[0]}] += c;
  return Series2(vars, std::move(out), kExact);
}

/// Both directional charts of a random quadratic field describe the same
/// foliation on their overlap.
inline SuiteResult chart_coherence(Gen& g, int n) {
  SuiteResult r;
  while (r.cases < n) {
    Series2 a = g.series2(2, kExact, 0.6, 1), b = g.series2(2, kExact, 0.6, 1);
    if (a.is_zero() && b.is_zero()) continue;
    PlanarField f = planar(a, b);
    PlanarField fx = blowup_point(f, ChartKind::X).field;
    PlanarField fy = blowup_point(f, ChartKind::Y).field;
    const auto& v = fx.vars();
    int d = std::max({fy[0].degree_in(0), fy[1].degree_in(0), 0});
    Series2 a2 = to_x_chart(fy[0], v, d), b2 = to_x_chart(fy[1], v, d);
    Series2 x = Series2::variable(v, 0), y1 = Series2::variable(v, 1);
    // Pushforward of the x-chart field: (-B1 / y1^2, y1 A1 + x B1).
    Series2 cross = -(fx[1] * b2) - y1 * y1 * (y1 * fx[0] + x * fx[1]) * a2;
    r.record(cross.is_zero(), "chart coherence, F = (" + a.to_string() + ", " + b.to_string() + ")");
  }
  return r;
}

/// Random linear part of a prescribed kind plus quadratic terms.
inline PlanarField random_singular_field(Gen& g, int kind) {
  const Series2::Vars v{"x", "y"};
  Series2 x = Series2::variable(v, 0), y = Series2::variable(v, 1);
  Rational t, d;
  switch (kind % 6) {
    case 0: {  // saddle, rational eigenvalues
      Rational l = g.nonzero_rational(), m = g.nonzero_rational();
      if (l.sign() == m.sign()) m = -m;
      t = l + m, d = l * m;
      break;
    }
    case 1: {  // saddle-node
      t = g.nonzero_rational(), d = 0;
      break;
    }
    case 2: {  // resonant node p:q
      Rational l(g.integer(1, 4)), m(g.integer(1, 4));
      Rational s = g.nonzero_rational();
      t = s * (l + m), d = s * s * l * m;
      break;
    }
    case 3:  // complex
      t = g.rational(), d = t * t / Rational(4) + g.nonzero_rational().abs();
      break;
    case 4:  // irrational node (discriminant 2 k^2)
    {
      Rational k = g.nonzero_rational();
      t = g.nonzero_rational();
      d = (t * t - Rational(2) * k * k) / Rational(4);
      break;
    }
    default:  // nilpotent or zero linear part
      t = 0, d = 0;
      break;
  }
  Series2 q1 = g.series2(2, kExact, 0.5, 2), q2 = g.series2(2, kExact, 0.5, 2);
  if (kind % 6 == 5 && g.coin()) return planar(y + q1, q2);
  // companion matrix [[0, -d], [1, t]]
  return planar(-d * y + q1, x + t * y + q2);
}

inline SuiteResult classifier_conjugation(Gen& g, int n) {
  SuiteResult r;
  for (int i = 0; i < n; ++i) {
    PlanarField f = random_singular_field(g, i);
    auto m = g.invertible_matrix();
    PlanarField h = conjugate(f, m);
    auto before = classify_singularity(f).tag, after = classify_singularity(h).tag;
    r.record(before == after, "conjugation changed " + tag_name(before) + " into " + tag_name(after));
  }
  return r;
}

}  // namespace septool::testing
