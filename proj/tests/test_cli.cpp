#include <sys/wait.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "septool/report.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SEPTOOL_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string field(const char* name) { return std::string(SEPTOOL_FIELDS_DIR "/") + name; }
std::string data(const char* name) { return std::string(SEPTOOL_TEST_DATA_DIR "/") + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  fs::path d = fs::temp_directory_path() / ("septool_cli_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("exit code contract") {
  CHECK(run("index " + field("center.field")).code == 0);
  CHECK(run("index " + data("syntax_error.field")).code == 2);
  CHECK(run("index " + data("not_divisible.field")).code == 2);
  CHECK(run("separatrix " + data("bad_parameter.field")).code == 3);
  CHECK(run("diverge " + field("xi.field") + " --trunc 12").code == 4);
  CHECK(run("diverge " + field("center.field")).code == 1);
  CHECK(run("no-such-command x").code == 2);
  CHECK(run("index " + field("center.field") + " --radius banana").code == 2);
  CHECK(run("index /nonexistent/file.field").code == 2);
  CHECK(run("index").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("--version").out.find("septool 0.1.0") != std::string::npos);
}

TEST_CASE("errors still produce a JSON report") {
  Run r = run("separatrix " + data("bad_parameter.field"));
  auto j = septool::Json::parse(r.out);
  CHECK(j["error"]["code"] == "HypothesisViolated");
  CHECK(j["error"]["stage"] == "hypothesis");
  CHECK(j["exit_code"] == 3);
}

TEST_CASE("byte-identical reports") {
  fs::path dir = scratch();
  for (const char* args : {"paper-example --trunc 40", "reduce FIELD/ya.field", "index FIELD/ya.field --csv CSV",
                           "diverge FIELD/xi.field --trunc 40 --csv CSV"}) {
    std::string a = args;
    for (auto pos = a.find("FIELD"); pos != std::string::npos; pos = a.find("FIELD"))
      a.replace(pos, 5, SEPTOOL_FIELDS_DIR);
    std::string csv1 = (dir / "1.csv").string(), csv2 = (dir / "2.csv").string();
    std::string a1 = a, a2 = a;
    if (auto pos = a.find("CSV"); pos != std::string::npos) {
      a1.replace(pos, 3, csv1);
      a2.replace(pos, 3, csv2);
    }
    CAPTURE(a);
    REQUIRE(run(a1 + " --json " + (dir / "1.json").string()).code == 0);
    REQUIRE(run(a2 + " --json " + (dir / "2.json").string()).code == 0);
    CHECK(slurp(dir / "1.json") == slurp(dir / "2.json"));
    CHECK_FALSE(slurp(dir / "1.json").empty());
    if (a.find("CSV") != std::string::npos) {
      CHECK(slurp(csv1) == slurp(csv2));
      CHECK(slurp(csv1).size() > 20);
    }
  }
  fs::remove_all(dir);
}

TEST_CASE("render round-trips through the CLI") {
  fs::path dir = scratch();
  for (const char* name : {"ya.field", "xa.field", "xi.field", "center.field", "saddle.field", "euler.field"}) {
    CAPTURE(name);
    Run first = run("render " + field(name));
    REQUIRE(first.code == 0);
    { std::ofstream(dir / "r.field") << first.out; }
    Run second = run("render " + (dir / "r.field").string());
    CHECK(second.code == 0);
    CHECK(second.out == first.out);
  }
  fs::remove_all(dir);
}

TEST_CASE("worked example through the CLI") {
  Run r = run("paper-example --alpha 'z^2' --trunc 40");
  REQUIRE(r.code == 0);
  auto j = septool::Json::parse(r.out);
  CHECK(j["checks_passed"] == true);
  CHECK(j["stages"]["elizarov"]["limit"] == "1/2");
  CHECK(run("check-integral " + field("xa.field")).out.find("\"zero\": true") != std::string::npos);
  auto idx = septool::Json::parse(run("index " + field("center.field")).out);
  CHECK(idx["result"]["winding"]["index"] == 1);
}
