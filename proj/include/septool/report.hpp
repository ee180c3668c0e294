#pragma once

#include <json.hpp>
#include <string>

#include "septool/divergence.hpp"
#include "septool/dsl.hpp"
#include "septool/index.hpp"

namespace septool {

inline constexpr const char* kToolVersion = "septool 0.1.0";
inline constexpr const char* kSchemaVersion = "septool-report/1";

using Json = nlohmann::json;

/// Exact rationals as "p/q" strings.
Json to_json(const Rational& q);
/// {"approximate": true, "value": v rounded to 15 significant digits}.
Json approx(double v);

template <std::size_t N>
Json to_json(const Series<N>& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({{"exponent", Json(std::vector<int>(e.begin(), e.end()))}, {"coefficient", to_json(c)}});
  return {{"vars", Json(std::vector<std::string>(s.vars().begin(), s.vars().end()))},
          {"trunc", s.exact() ? Json("exact") : Json(s.trunc())},
          {"text", s.to_string()},
          {"terms", terms}};
}

template <std::size_t N>
Json to_json(const VectorField<N>& f) {
  Json comps = Json::array();
  for (std::size_t i = 0; i < N; ++i) comps.push_back(f[i].to_string());
  return {{"vars", Json(std::vector<std::string>(f.vars().begin(), f.vars().end()))},
          {"trunc", f.exact() ? Json("exact") : Json(f.trunc())},
          {"components", comps}};
}

Json to_json(const Direction& d);
Json to_json(const SingularityClass& c);
Json to_json(const TangentCone& c);
Json to_json(const ReductionTree& t);
Json to_json(const FormalCurve& c);
Json to_json(const SeparatrixReport& r);
Json to_json(const IndexReport& r);
Json to_json(const GevreyReport& r);
Json to_json(const BorelReport& r);
Json to_json(const ElizarovResult& r);
Json to_json(const CrossCheck& r);

/// Hex SHA-256.
std::string sha256_hex(const std::string& data);

struct PipelineOptions {
  int trunc = 0;  // 0: the document's value
  std::string alpha;  // series in z; empty: command default
  Rational delta{1, 10};
  Rational radius{1, 4};
  Rational tolerance{1, 1000000000};
  int depth = 8;
  int pursue_weak = 0;
  bool want_csv = false;
};

/// An error tagged with the pipeline stage that raised it.
class StageError : public Error {
 public:
  StageError(std::string stage, const Error& e);
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

struct RunResult {
  Json report;
  std::string csv;
  bool checks_passed = true;  // golden checks of the worked example
};

/// Runs a command on a document (may be empty for the worked example). Errors are
/// rethrown as StageError.
RunResult run_pipeline(const std::string& command, const std::string& document, const PipelineOptions& options);

/// Report for a failed run, with the same header fields as a successful one.
Json error_report(const std::string& command, const std::string& document, const PipelineOptions& options,
                  const StageError& e);

/// 0 ok, 2 parse, 3 hypothesis, 4 numeric certification, 1 otherwise.
int exit_code_for(const std::string& stage, Errc code);

}  // namespace septool
