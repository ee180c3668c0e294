#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "septool/report.hpp"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw septool::Error(septool::Errc::ParseError, "cannot read '" + path + "'");
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw septool::Error(septool::Errc::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

septool::Rational rational_flag(const std::string& name, const std::string& text) {
  try {
    return septool::Rational::parse(text);
  } catch (const septool::Error&) {
    throw CLI::ValidationError(name, "expected a rational p/q, got '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace septool;
  CLI::App app{"Formal separatrices, blow-ups, indices and divergence diagnostics for planar vector fields"};
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string command, file, json_path, csv_path, delta = "1/10", radius = "1/4", tolerance = "1/1000000000";
  PipelineOptions opt;
  app.add_option("command", command, "reduce | separatrix | index | diverge | check-integral | paper-example | render")
      ->required()
      ->check(CLI::IsMember({"reduce", "separatrix", "index", "diverge", "check-integral", "paper-example", "render"}));
  app.add_option("file", file, "field document ('-' for stdin); optional for paper-example");
  app.add_option("--trunc", opt.trunc, "working truncation order (overrides the document)")->check(CLI::Range(2, 400));
  app.add_option("--json", json_path, "write the JSON report here instead of stdout");
  app.add_option("--csv", csv_path, "write plot data (index samples or log|c_n|) here");
  app.add_option("--alpha", opt.alpha, "series alpha(z), e.g. 'z^2 + z^3'");
  app.add_option("--delta", delta, "scale delta for xi_{delta alpha}");
  app.add_option("--radius", radius, "circle radius for index");
  app.add_option("--tolerance", tolerance, "certification tolerance");
  app.add_option("--depth", opt.depth, "maximum blow-up depth")->check(CLI::Range(1, 64));
  app.add_option("--pursue-weak", opt.pursue_weak, "extra blow-ups along saddle-node weak directions")
      ->check(CLI::Range(0, 16));

  try {
    app.parse(argc, argv);
    opt.delta = rational_flag("--delta", delta);
    opt.radius = rational_flag("--radius", radius);
    opt.tolerance = rational_flag("--tolerance", tolerance);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  opt.want_csv = !csv_path.empty();

  std::string document;
  try {
    if (file.empty() && command != "paper-example") throw Error(Errc::ParseError, command + " needs a field document");
    if (!file.empty()) document = read_input(file);
  } catch (const Error& e) {
    std::cerr << "septool: " << e.what() << '\n';
    return 2;
  }

  if (command == "render") {
    try {
      std::cout << render_document(parse_document(document, opt.trunc));
      return 0;
    } catch (const Error& e) {
      std::cerr << "septool: parse: " << e.what() << '\n';
      return exit_code_for("parse", e.code());
    }
  }

  Json report;
  int rc = 0;
  std::string csv;
  try {
    RunResult r = run_pipeline(command, document, opt);
    report = std::move(r.report);
    csv = std::move(r.csv);
    if (!r.checks_passed) rc = 1;
  } catch (const StageError& e) {
    report = error_report(command, document, opt, e);
    rc = exit_code_for(e.stage(), e.code());
    std::cerr << "septool: " << e.what() << '\n';
  }

  try {
    const std::string text = report.dump(2) + "\n";
    if (json_path.empty())
      std::cout << text;
    else
      write_file(json_path, text);
    if (!csv_path.empty() && rc == 0) write_file(csv_path, csv);
  } catch (const Error& e) {
    std::cerr << "septool: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
