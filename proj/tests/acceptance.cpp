// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "septool/divergence.hpp"
#include "septool/index.hpp"
#include "support/property_suites.hpp"

using namespace septool;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.ok && secs >= limit_s) {
    out.ok = false;
    out.note = "exceeded " + std::to_string(limit_s) + " s";
  }
  if (!out.ok) ++failures;
  std::printf("%s %2d  %-28s %8.3f s%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs, out.note.empty() ? "" : "  ",
              out.note.c_str());
}

const Series2::Vars xy{"x", "y"};

// Hand transcription of the second strict transform of Y_a.
PlanarField hand_second_transform(const Series1& a, int order) {
  const Series2::Vars v{"x", "y2"};
  Series2 x = Series2::variable(v, 0), y2 = Series2::variable(v, 1), one = Series2::constant(v, Rational(1));
  Series2 u = one + y2 * y2;
  Series2 ax = compose(a, std::array<Series2, 1>{x});
  return planar(x * x * x * u, -(y2 * (one + Rational(2) * x * x * u)) + ax * u).truncated(order);
}

}  // namespace

int main() {
  criterion(1, "golden blow-up match", 1.0, [](Outcome& o) {
    for (const auto& a : {Series1({"x"}), series1("x", {0, 0, 1}), series1("x", {0, 0, 1, 1})})
      o.require(second_transform_Ya(a, 12) == hand_second_transform(a, 12), "mismatch for a = " + a.to_string());
  });

  criterion(2, "xi_alpha match", 1.0, [](Outcome& o) {
    for (const auto& alpha : {Series1({"z"}), series1("z", {0, 0, 1}), series1("z", {0, 0, 0, 1})}) {
      PlanarField xi = ramify_to_xi(second_transform_Ya(ramification_pullback(alpha), 34), alpha, 16);
      o.require(xi.trunc() == 16 && xi == xi_field(alpha, 16), "mismatch for alpha = " + alpha.to_string());
    }
  });

  criterion(3, "tangent cone of Y_a", 1.0, [](Outcome& o) {
    testing::Gen g(301);
    Series2 x = Series2::variable(xy, 0), y = Series2::variable(xy, 1);
    for (int i = 0; i < 10; ++i) {
      Series1 a = g.admissible_a();
      TangentCone c = tangent_cone(ya_field(a));
      o.require(c.polynomial == y * y * y + x * x * y, "cone " + c.polynomial.to_string());
      o.require(c.directions.size() == 1 && c.directions[0] == Direction::horizontal_slope(Rational(0)),
                "directions for a = " + a.to_string());
      o.require(c.has_complex_factor, "complex factor y^2 + x^2 not reported");
    }
  });

  criterion(4, "unique formal separatrix", 10.0, [](Outcome& o) {
    testing::Gen g(404);
    for (int i = 0; i < 10; ++i) {
      Series1 a = g.admissible_a();
      PlanarField f = ya_field(a);
      SeparatrixReport r = separatrix_search(f, kDefaultOrder);
      o.require(r.uniqueness == Uniqueness::Unique && r.curves.size() == 1, "not unique for a = " + a.to_string());
      if (r.curves.size() != 1) continue;
      const FormalCurve& c = r.curves[0];
      o.require(c.tangent == Direction::horizontal_slope(Rational(0)), "tangent " + c.tangent.describe());
      Invariance inv = verify_invariance(f, c, c.valid_order);
      o.require(inv.residual.is_zero() && inv.h_nonzero, "invariance residual " + inv.residual.to_string());
      o.require(c.valid_order >= 10, "guaranteed order only " + std::to_string(c.valid_order));
    }
  });

  criterion(5, "saddle-node chain p1, p2", 1.0, [](Outcome& o) {
    for (const auto& a : {Series1({"x"}), series1("x", {0, 0, 1}), series1("x", {0, 0, 3, -1})}) {
      ReductionTree t = seidenberg_reduce(ya_field(a), ReduceOptions{8, 1});
      o.require(t.nodes.size() == 3, "unexpected tree size");
      if (t.nodes.size() < 3) continue;
      o.require(t.nodes[1].classification.tag == SingularityTag::SaddleNode, "p1 is " + tag_name(t.nodes[1].classification.tag));
      o.require(t.nodes[2].classification.tag == SingularityTag::SaddleNode, "p2 is " + tag_name(t.nodes[2].classification.tag));
    }
  });

  criterion(6, "Euler oracle", 1.0, [](Outcome& o) {
    const Series2::Vars zw{"z", "w"};
    Series2 z = Series2::variable(zw, 0), w = Series2::variable(zw, 1);
    Series1 s = graph_separatrix(planar(z * z, -w + z), Direction::horizontal_slope(Rational(1)), 21);
    Rational expect(1);
    for (int n = 1; n <= 20; ++n) {
      o.require(s.coeff({n}) == expect, "s_" + std::to_string(n) + " = " + s.coeff({n}).str());
      expect = -Rational(n) * expect;
    }
  });

  criterion(7, "Elizarov exactness", 1.0, [](Outcome& o) {
    Series1 z2 = series1("z", {0, 0, 1});
    for (int n = 2; n <= 20; ++n) {
      ElizarovResult r = elizarov_derivative(z2, n);
      o.require(r.last() == Rational(1, 2) - Rational(1) / factorial(static_cast<unsigned>(n + 1)),
                "S_" + std::to_string(n) + " = " + r.last().str());
      o.require(r.limit && *r.limit == Rational(1, 2), "limit");
      o.require(r.verdict == ElizarovVerdict::Nonzero, "verdict");
    }
  });

  criterion(8, "divergence cross-check", 30.0, [](Outcome& o) {
    CrossCheck c = divergence_cross_check(series1("z", {0, 0, 1}), Rational(1, 10), 40);
    o.require(c.gevrey.s_hat >= 0.7 && c.gevrey.s_hat <= 1.3, "s_hat = " + std::to_string(c.gevrey.s_hat));
    o.require(c.gevrey.verdict == GevreyVerdict::Divergent, "Gevrey verdict " + verdict_name(c.gevrey.verdict));
    o.require(c.elizarov.verdict == ElizarovVerdict::Nonzero, "Elizarov verdict " + verdict_name(c.elizarov.verdict));
    o.require(c.agree, "verdicts disagree");
  });

  criterion(9, "convergent control", 1.0, [](Outcome& o) {
    CrossCheck c = divergence_cross_check(Series1({"z"}), Rational(1, 10), 40);
    o.require(c.separatrix.is_zero(), "separatrix " + c.separatrix.to_string());
    o.require(c.gevrey.verdict == GevreyVerdict::ConvergentLike, "Gevrey verdict " + verdict_name(c.gevrey.verdict));
    for (const auto& s : c.elizarov.partial_sums) o.require(s.is_zero(), "nonzero partial sum");
    o.require(c.elizarov.verdict == ElizarovVerdict::Zero, "Elizarov verdict");
    o.require(c.agree, "verdicts disagree");
  });

  criterion(10, "index suite", 10.0, [](Outcome& o) {
    Series2 x = Series2::variable(xy, 0), y = Series2::variable(xy, 1);
    const Rational tol(1, 1000000);
    IndexReport c = winding_index(planar(-y, x), Rational(1), tol);
    o.require(c.index == 1 && c.certified, "center");
    IndexReport s = winding_index(planar(x, -y), Rational(1), tol);
    o.require(s.index == -1 && s.certified, "saddle");
    testing::Gen g(1010);
    int done = 0;
    while (done < 100) {
      auto m = g.invertible_matrix();
      Rational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
      if (det.abs() < Rational(1, 4)) continue;
      IndexReport r = winding_index(planar(m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y), Rational(1), tol);
      o.require(r.certified && r.index == det.sign(), "linear field with det " + det.str());
      ++done;
    }
    o.require(index_from_tangencies(2, 0) == 2, "tangency formula");
    o.require(bendixson_index(0, 4) == -1, "Bendixson formula");
  });

  criterion(11, "first integrals", 1.0, [](Outcome& o) {
    for (const auto& a : {Series1({"x"}), series1("x", {0, 0, 1}), series1("x", {0, 0, 2, 0, -5})}) {
      Field3 xa = xa_field(a);
      Series3 r = check_first_integral(Series3::variable(xa.vars(), 2), xa).truncated(kDefaultOrder);
      o.require(r.is_zero() && r.trunc() == kDefaultOrder, "z on X_a: " + r.to_string());
    }
    Series2 x = Series2::variable(xy, 0), y = Series2::variable(xy, 1);
    Series2 r = check_first_integral(x * x + y * y, center_field()).truncated(kDefaultOrder);
    o.require(r.is_zero() && r.trunc() == kDefaultOrder, "x^2 + y^2 on the center: " + r.to_string());
  });

  criterion(12, "property suites", 60.0, [](Outcome& o) {
    testing::Gen g(1212);
    testing::SuiteResult series;
    series += testing::series_ring_laws(g, 100);
    series += testing::series_inverse_laws(g, 80);
    series += testing::series_division_roundtrip(g, 60);
    series += testing::series_composition_law(g, 80);
    o.require(series.cases >= 300, "only " + std::to_string(series.cases) + " series cases");
    o.require(series.ok(), series.first_failure);
    testing::SuiteResult charts = testing::chart_coherence(g, 20);
    o.require(charts.cases == 20 && charts.ok(), charts.first_failure);
    testing::SuiteResult conj = testing::classifier_conjugation(g, 50);
    o.require(conj.cases == 50 && conj.ok(), conj.first_failure);
  });

  std::printf("%s: %d of 12 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
