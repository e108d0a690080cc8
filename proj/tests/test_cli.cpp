#include "cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cmm;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "cmm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string without_timing(const std::string& json_lines) {
  std::string out;
  for (const auto& line : lines(json_lines)) {
    auto r = parse_report_json(line);
    r.elapsed_ms = 0;
    out += r.to_json() + "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("mpoly") {
  auto r = run({"mpoly", "--n", "2", "--k", "1", "--lambda", "1", "--expand"});
  CHECK(r.code == 0);
  CHECK(r.out == "P[1/2,-1/2] = m[1/2,-1/2]\n  numerator: (1)*e[1/2,-1/2] + (1)*e[-1/2,1/2]\n  denominator: 1\n");
  r = run({"mpoly", "--n", "2", "--k", "2", "--lambda", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "P[0,0] = m[0,0]\n");
  r = run({"mpoly", "--n", "3", "--k", "2", "--lambda", "1,1", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("lambda":"[1,0,-1]")") != std::string::npos);
  CHECK(run({"mpoly", "--n", "2", "--lambda", "-1"}).code == 2);
  CHECK(run({"mpoly", "--n", "2", "--lambda", "1,1"}).code == 2);
  CHECK(run({"mpoly", "--n", "2", "--lambda", "x"}).code == 2);
  CHECK(run({"mpoly", "--n", "2"}).code == 2);
}

TEST_CASE("norm") {
  auto r = run({"norm", "--n", "2", "--k", "1", "--lambda", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "direct:  1\nformula: 1\nagree:   true\n");
  r = run({"norm", "--n", "2", "--k", "2", "--lambda", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "direct:  q^-4 + q^-2 + 1\nformula: q^-4 + q^-2 + 1\nagree:   true\n");
  r = run({"norm", "--n", "3", "--k", "2", "--lambda", "1,0", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(parse_report_json(lines(r.out).at(0)).passed);
  CHECK(run({"norm", "--n", "1", "--lambda", "0"}).code == 2);
}

TEST_CASE("check exit codes") {
  CHECK(run({"check", "eq1", "--n", "2", "--k", "1", "--max-coeff", "2"}).code == 0);
  CHECK(run({"check", "eq5", "--order", "20"}).code == 0);
  CHECK(run({"check", "prop1", "--n", "2", "--order", "-1"}).code == 2);
  CHECK(run({"check", "prop1", "--n", "2", "--order", "1/0"}).code == 2);
  CHECK(run({"check", "eq9"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"check", "eq1", "--format", "xml"}).code == 2);
  CHECK(run({"check", "eq1", "--threads", "0"}).code == 2);
  CHECK(run({"check", "eq5", "--n", "3"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const auto failing = run({"check", "gauss-eval", "--n", "2", "--lambda", "3", "--order", "1"});
  CHECK(failing.code == 1);
  CHECK(failing.out.find("FAIL gauss-eval") != std::string::npos);
}

TEST_CASE("check single instances and small grids") {
  auto r = run({"check", "eq8", "--n", "3", "--k", "1", "--lambda", "1,0", "--mu", "0,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1 checks, 1 passed, 0 failed") != std::string::npos);
  r = run({"check", "symmetry", "--n", "2", "--k", "2", "--max-coeff", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("9 checks, 9 passed") != std::string::npos);
  r = run({"check", "norms", "--n", "2", "--max-coeff", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("12 checks, 12 passed") != std::string::npos);
  r = run({"check", "prop1", "--n", "3", "--order", "6"});
  CHECK(r.code == 0);
  r = run({"check", "gauss-eval", "--n", "3"});
  CHECK(r.code == 0);
  r = run({"check", "eq7", "--n", "3", "--k", "2", "--max-coeff", "1"});
  CHECK(r.code == 0);
}

TEST_CASE("json output round-trips") {
  for (const char* id : {"eq1", "eq5", "prop1", "eq7", "gauss-eval"}) {
    CAPTURE(id);
    const auto r = run({"check", id, "--n", "2", "--k", "2", "--max-coeff", "1", "--format", "json"});
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    CHECK(!ls.empty());
    for (const auto& line : ls) {
      const auto report = parse_report_json(line);
      CHECK(report.to_json() == line);
      CHECK(line.find(R"("difference":"0")") != std::string::npos);
    }
  }
}

TEST_CASE("output does not depend on the thread count") {
  const std::vector<std::string> base{"check", "all", "--n", "2", "--k", "2", "--max-coeff", "2", "--order", "40",
                                      "--format", "json"};
  std::string reference;
  for (const char* threads : {"1", "2", "4"}) {
    auto args = base;
    args.push_back("--threads");
    args.push_back(threads);
    const auto r = run(args);
    CHECK(r.code == 0);
    const std::string stable = without_timing(r.out);
    if (reference.empty()) reference = stable;
    CHECK(stable == reference);
  }
}

TEST_CASE("thread count from the environment, flag wins") {
  setenv("CMM_THREADS", "banana", 1);
  CHECK(run({"check", "eq5", "--order", "4"}).code == 2);
  CHECK(run({"check", "eq5", "--order", "4", "--threads", "2"}).code == 0);
  setenv("CMM_THREADS", "3", 1);
  CHECK(run({"check", "eq5", "--order", "4"}).code == 0);
  unsetenv("CMM_THREADS");
}

TEST_CASE("--out writes the report file") {
  const auto path = std::filesystem::temp_directory_path() / "cmm_cli_test_out.jsonl";
  std::filesystem::remove(path);
  const auto r = run({"check", "eq5", "--order", "6", "--format", "json", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(parse_report_json(line).passed);
  std::filesystem::remove(path);
  CHECK(run({"check", "eq5", "--out", "/nonexistent-dir/x.txt"}).code == 2);
}
