#include "septool/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace septool {

Json to_json(const Rational& q) { return q.str(); }

Json approx(double v) {
  Json value;
  if (std::isfinite(v)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    value = std::strtod(buf, nullptr);
  } else {
    value = std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  }
  return {{"approximate", true}, {"value", value}};
}

Json to_json(const Direction& d) {
  Json j{{"text", d.describe()}, {"multiplicity", d.multiplicity}};
  switch (d.kind) {
    case Direction::Kind::Slope:
      j["kind"] = "slope";
      j["slope"] = to_json(d.slope);
      break;
    case Direction::Kind::Vertical: j["kind"] = "vertical"; break;
    case Direction::Kind::Irrational:
      j["kind"] = "irrational";
      j["slope_interval"] = Json::array({to_json(d.lo), to_json(d.hi)});
      break;
  }
  return j;
}

Json to_json(const SingularityClass& c) {
  Json j{{"tag", tag_name(c.tag)}};
  if (c.linear) {
    const auto& m = c.linear->m;
    j["linear_part"] = Json::array({Json::array({to_json(m[0][0]), to_json(m[0][1])}),
                                    Json::array({to_json(m[1][0]), to_json(m[1][1])})});
    j["trace"] = to_json(c.linear->trace);
    j["det"] = to_json(c.linear->det);
  }
  if (c.eigenvalues) j["eigenvalues"] = Json::array({to_json((*c.eigenvalues)[0]), to_json((*c.eigenvalues)[1])});
  return j;
}

Json to_json(const TangentCone& c) {
  Json dirs = Json::array();
  for (const auto& d : c.directions) dirs.push_back(to_json(d));
  return {{"polynomial", c.polynomial.to_string()},
          {"degree", c.degree},
          {"directions", dirs},
          {"complex_factor", c.has_complex_factor}};
}

namespace {
Json to_json(const BlowupChart& s) {
  return {{"chart", chart_name(s.kind)}, {"center", to_json(s.center)}, {"multiplicity", s.multiplicity}};
}
}  // namespace

Json to_json(const ReductionTree& t) {
  Json nodes = Json::array();
  for (const auto& n : t.nodes) {
    Json j{{"id", n.id},
           {"parent", n.parent},
           {"depth", n.depth},
           {"field", to_json(n.field)},
           {"classification", to_json(n.classification)},
           {"leaf", leaf_name(n.leaf)},
           {"weak_pursuit", n.weak_pursuit},
           {"children", n.children}};
    if (n.step) j["step"] = to_json(*n.step);
    if (n.cone) j["tangent_cone"] = to_json(*n.cone);
    Json deferred = Json::array();
    for (const auto& d : n.deferred) deferred.push_back(to_json(d));
    j["deferred"] = deferred;
    nodes.push_back(j);
  }
  return {{"nodes", nodes}, {"leaves", static_cast<int>(t.leaves().size())}};
}

Json to_json(const FormalCurve& c) {
  Json chain = Json::array();
  for (const auto& s : c.chain) chain.push_back(to_json(s));
  return {{"form", form_name(c.form)},
          {"vars", Json::array({c.vars[0], c.vars[1]})},
          {"parametrization", {to_json(c.param[0]), to_json(c.param[1])}},
          {"description", c.describe()},
          {"tangent", to_json(c.tangent)},
          {"role", role_name(c.role)},
          {"valid_order", c.valid_order},
          {"chain", chain},
          {"node_path", c.node_path}};
}

Json to_json(const SeparatrixReport& r) {
  Json curves = Json::array(), inside = Json::array();
  for (const auto& c : r.curves) curves.push_back(to_json(c));
  for (const auto& c : r.divisor_contained) inside.push_back(to_json(c));
  return {{"tree", to_json(r.tree)},
          {"curves", curves},
          {"divisor_contained", inside},
          {"unresolved", r.unresolved},
          {"uniqueness", uniqueness_name(r.uniqueness)}};
}

Json to_json(const IndexReport& r) {
  Json j{{"index", r.index},
         {"method", method_name(r.method)},
         {"radius", to_json(r.radius)},
         {"samples", r.samples},
         {"certified", r.certified},
         {"min_norm_bound", to_json(r.min_norm_bound)},
         {"attempts", r.attempts}};
  if (!r.caveat.empty()) j["caveat"] = r.caveat;
  return j;
}

Json to_json(const GevreyReport& r) {
  return {{"s_hat", approx(r.s_hat)},
          {"log_A", approx(r.log_a)},
          {"constant", approx(r.constant)},
          {"residual", approx(r.residual)},
          {"condition", approx(r.condition)},
          {"window", {r.first, r.last}},
          {"points", r.points},
          {"geometric_bound", r.geometric_bound},
          {"identically_zero", r.identically_zero},
          {"verdict", verdict_name(r.verdict)}};
}

Json to_json(const BorelReport& r) {
  return {{"radius", approx(r.radius)}, {"entire", r.entire}, {"points", r.points}};
}

Json to_json(const ElizarovResult& r) {
  Json sums = Json::object();
  for (std::size_t i = 0; i < r.partial_sums.size(); ++i) sums[std::to_string(i + 2)] = to_json(r.partial_sums[i]);
  Json j{{"coefficients", to_json(r.c)},
         {"n", r.n},
         {"partial_sums", sums},
         {"tail_bound", to_json(r.tail_bound)},
         {"verdict", verdict_name(r.verdict)}};
  j["limit"] = r.limit ? to_json(*r.limit) : Json(nullptr);
  return j;
}

Json to_json(const CrossCheck& r) {
  return {{"delta", to_json(r.delta)},
          {"order", r.order},
          {"separatrix", to_json(r.separatrix)},
          {"gevrey", to_json(r.gevrey)},
          {"elizarov", to_json(r.elizarov)},
          {"agree", r.agree}};
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    fail(Errc::InvalidArgument, "sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

StageError::StageError(std::string stage, const Error& e)
    : Error(e.code(), stage + ": " + e.message()), stage_(std::move(stage)) {}

int exit_code_for(const std::string& stage, Errc code) {
  switch (code) {
    case Errc::ParseError: return 2;
    case Errc::NotDivisible: return stage == "parse" ? 2 : 1;
    case Errc::HypothesisViolated: return 3;
    case Errc::ZeroOnCircle:
    case Errc::NoStabilization:
    case Errc::TruncationTooCoarse:
    case Errc::InsufficientData: return 4;
    default: return 1;
  }
}

namespace {

Json options_json(const PipelineOptions& o) {
  return {{"trunc", o.trunc},        {"alpha", o.alpha},         {"delta", to_json(o.delta)},
          {"radius", to_json(o.radius)}, {"tolerance", to_json(o.tolerance)}, {"depth", o.depth},
          {"pursue_weak", o.pursue_weak}};
}

Json header(const std::string& command, const std::string& document, const PipelineOptions& o) {
  const Json opts = options_json(o);
  return {{"schema", kSchemaVersion},
          {"tool", kToolVersion},
          {"command", command},
          {"inputs", {{"sha256", sha256_hex(command + "\n" + opts.dump() + "\n" + document)}, {"options", opts}}}};
}

template <class Fn>
auto stage(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(name, e);
  }
}

Json document_json(const FieldDocument& doc) {
  Json series = Json::object();
  for (const auto& [name, s] : doc.series) series[name] = to_json(s);
  Json field = std::visit(
      [](const auto& f) -> Json {
        if constexpr (std::is_same_v<std::decay_t<decltype(f)>, std::monostate>)
          return nullptr;
        else
          return to_json(f);
      },
      doc.field);
  return {{"name", doc.name},         {"vars", doc.vars},    {"trunc", doc.trunc},
          {"family", family_name(doc.family)}, {"series", series}, {"field", field}};
}

Series1 alpha_from(const PipelineOptions& o, const char* fallback) {
  return parse_series(o.alpha.empty() ? fallback : o.alpha, "z");
}

RunResult worked_example(const PipelineOptions& o, Json& rep) {
  RunResult out;
  const int n = o.trunc > 0 ? o.trunc : 40;
  Json checks = Json::object();
  Json st = Json::object();
  const Series1 alpha = stage("alpha", [&] { return alpha_from(o, "z^2"); });
  const Series1 a = stage("family", [&] {
    check_family_parameter(alpha, "alpha");
    return ramification_pullback(alpha);
  });
  const PlanarField ya = stage("family", [&] { return ya_field(a); });
  st["alpha"] = to_json(alpha);
  st["a"] = to_json(a);
  st["Ya"] = to_json(ya);

  const Series2::Vars xy{"x", "y"};
  const Series2 x = Series2::variable(xy, 0), y = Series2::variable(xy, 1);
  stage("tangent-cone", [&] {
    TangentCone cone = tangent_cone(ya);
    st["tangent_cone"] = to_json(cone);
    checks["tangent_cone_is_y3_plus_x2y"] =
        cone.polynomial == y * y * y + x * x * y && cone.directions.size() == 1 &&
        cone.directions[0] == Direction::horizontal_slope(Rational(0), 1);
    return 0;
  });
  stage("first-blowup", [&] {
    PlanarField p1 = blowup_along(ya, Direction::horizontal_slope(Rational(0)));
    auto cls = classify_singularity(p1);
    st["p1"] = {{"field", to_json(p1)}, {"classification", to_json(cls)}};
    checks["saddle_node_at_p1"] = cls.tag == SingularityTag::SaddleNode;
    return 0;
  });
  stage("second-blowup", [&] {
    PlanarField p2 = second_transform_Ya(a, 12);
    auto cls = classify_singularity(p2);
    st["p2"] = {{"field", to_json(p2)}, {"classification", to_json(cls)}};
    checks["saddle_node_at_p2"] = cls.tag == SingularityTag::SaddleNode;
    checks["second_transform_matches_closed_form"] = p2 == second_transform_closed_form(a, 12);
    return 0;
  });
  stage("ramification", [&] {
    PlanarField xi = ramify_to_xi(second_transform_Ya(a, 34), alpha, 16);
    st["xi"] = to_json(xi);
    checks["xi_matches_closed_form"] = xi == xi_field(alpha, 16);
    return 0;
  });
  stage("separatrix", [&] {
    SeparatrixReport sr = separatrix_search(ya, n, o.depth);
    st["separatrix"] = to_json(sr);
    bool tangent_ok = sr.curves.size() == 1 && sr.curves[0].tangent == Direction::horizontal_slope(Rational(0), 1);
    checks["unique_formal_separatrix"] = sr.uniqueness == Uniqueness::Unique && tangent_ok;
    return 0;
  });
  stage("first-integral", [&] {
    Field3 xa = xa_field(a);
    Series3 z = Series3::variable(xa.vars(), 2);
    Series3 r = check_first_integral(z, xa).truncated(kDefaultOrder);
    st["first_integral_residual"] = to_json(r);
    checks["z_is_first_integral_of_Xa"] = r.is_zero();
    return 0;
  });
  stage("elizarov", [&] {
    ElizarovResult er = elizarov_derivative(alpha, n);
    st["elizarov"] = to_json(er);
    checks["elizarov_nonzero"] = er.verdict == ElizarovVerdict::Nonzero;
    return 0;
  });
  stage("divergence", [&] {
    CrossCheck cc = divergence_cross_check(alpha, o.delta, n);
    st["cross_check"] = to_json(cc);
    checks["gevrey_divergent"] = cc.gevrey.verdict == GevreyVerdict::Divergent;
    checks["verdicts_agree"] = cc.agree;
    if (o.want_csv && !cc.separatrix.is_zero()) out.csv = gevrey_csv(cc.separatrix, {10, n});
    return 0;
  });
  for (const auto& [k, v] : checks.items()) out.checks_passed = out.checks_passed && v.get<bool>();
  rep["order"] = n;
  rep["stages"] = st;
  rep["checks"] = checks;
  rep["checks_passed"] = out.checks_passed;
  return out;
}

}  // namespace

Json error_report(const std::string& command, const std::string& document, const PipelineOptions& options,
                  const StageError& e) {
  Json rep = header(command, document, options);
  rep["error"] = {{"stage", e.stage()}, {"code", std::string(errc_name(e.code()))}, {"message", e.what()}};
  rep["exit_code"] = exit_code_for(e.stage(), e.code());
  return rep;
}

RunResult run_pipeline(const std::string& command, const std::string& document, const PipelineOptions& o) {
  static const std::vector<std::string> known{"reduce", "separatrix", "index", "diverge", "check-integral",
                                              "paper-example"};
  if (std::find(known.begin(), known.end(), command) == known.end())
    throw StageError("command", Error(Errc::InvalidArgument, "unknown command '" + command + "'"));
  Json rep = header(command, document, o);
  if (command == "paper-example") {
    RunResult r = worked_example(o, rep);
    r.report = std::move(rep);
    return r;
  }

  RunResult out;
  const FieldDocument doc = stage("parse", [&] { return parse_document(document, o.trunc); });
  rep["document"] = document_json(doc);
  stage("hypothesis", [&] {
    check_family(doc);
    return 0;
  });
  const int order = doc.trunc;

  if (command == "reduce") {
    ReductionTree t = stage("reduce", [&] {
      return seidenberg_reduce(doc.planar_field(), ReduceOptions{o.depth, o.pursue_weak});
    });
    rep["result"] = to_json(t);
  } else if (command == "separatrix") {
    if (doc.planar()) {
      rep["result"] = stage("separatrix", [&] { return to_json(separatrix_search(doc.planar_field(), order, o.depth)); });
    } else {
      FiberSeparatrixReport fr = stage("separatrix", [&] { return fiber_separatrices(doc.field3(), 2, order, o.depth); });
      Json lifted = Json::array();
      for (const auto& c : fr.lifted) lifted.push_back({to_json(c[0]), to_json(c[1]), to_json(c[2])});
      rep["result"] = {{"fiber", fr.fiber}, {"restricted", to_json(fr.restricted)}, {"planar", to_json(fr.planar)},
                       {"lifted", lifted}};
    }
  } else if (command == "index") {
    const PlanarField& f = stage("index", [&]() -> const PlanarField& { return doc.planar_field(); });
    Json r = Json::object();
    r["isolation"] = stage("isolation", [&] {
      auto w = isolated_singularity_witness(f);
      return Json{{"verdict", isolation_name(w.verdict)}, {"certificate", w.certificate}};
    });
    WindingOptions wo;
    wo.keep_samples = o.want_csv;
    IndexReport ir = stage("winding", [&] { return winding_index(f, o.radius, o.tolerance, wo); });
    r["winding"] = to_json(ir);
    r["stabilized"] = stage("stabilization", [&] { return to_json(radius_stabilized_index(f, o.tolerance, o.radius)); });
    if (o.want_csv) out.csv = samples_csv(ir);
    rep["result"] = r;
  } else if (command == "diverge") {
    Series1 alpha = stage("alpha", [&] {
      if (!o.alpha.empty()) return parse_series(o.alpha, "z");
      if (doc.family == Family::Xi) return doc.family_series().with_vars({"z"});
      fail(Errc::InvalidArgument, "diverge needs --alpha or a document with 'family xi <series>'");
    });
    CrossCheck cc = stage("divergence", [&] { return divergence_cross_check(alpha, o.delta, order); });
    Json r{{"cross_check", to_json(cc)}};
    if (!cc.separatrix.is_zero())
      r["borel"] = stage("borel", [&] { return to_json(borel_radius(cc.separatrix, {10, order})); });
    if (o.want_csv && !cc.separatrix.is_zero()) out.csv = gevrey_csv(cc.separatrix, {10, order});
    rep["result"] = r;
  } else if (command == "check-integral") {
    if (doc.integrals.empty())
      throw StageError("parse", Error(Errc::ParseError, "document declares no 'integral' line"));
    Json r = Json::object();
    for (const auto& [name, g] : doc.integrals) {
      r[name] = stage("check-integral", [&] {
        return std::visit(
            [&](const auto& s) -> Json {
              using S = std::decay_t<decltype(s)>;
              Json j;
              if constexpr (std::is_same_v<S, Series2>) {
                auto res = check_first_integral(s, doc.planar_field()).truncated(order);
                j = {{"integral", s.to_string()}, {"residual", to_json(res)}, {"zero", res.is_zero()}};
              } else {
                auto res = check_first_integral(s, doc.field3()).truncated(order);
                j = {{"integral", s.to_string()}, {"residual", to_json(res)}, {"zero", res.is_zero()}};
              }
              return j;
            },
            g);
      });
    }
    rep["result"] = r;
  }
  out.report = std::move(rep);
  return out;
}

}  // namespace septool
