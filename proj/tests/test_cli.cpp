// CLI front door: parsing, exit codes, deterministic output.
#include <doctest.h>

#include "comb/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {
struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::vector<const char*> argv;
  argv.push_back("combwalk");
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = comb::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("exact subcommand prints the rational and its log") {
  RunResult r = run_cli({"exact", "0", "1", "--axis", "y"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 4) == "3/8\n");
  CHECK(r.out.find("log -9.80829253011726") != std::string::npos);
}

TEST_CASE("exact output is byte-deterministic") {
  RunResult a = run_cli({"exact", "3", "9", "--axis", "x"});
  RunResult b = run_cli({"exact", "3", "9", "--axis", "x"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("asym subcommand reports regime and log value") {
  RunResult r = run_cli({"asym", "0", "100", "--axis", "x"});
  CHECK(r.code == 0);
  CHECK(r.out.find("regime X_TINY") != std::string::npos);
  // sqrt(2)/Gamma(1/4) * 100^{-3/4}
  CHECK(r.out.find("value 1.2334851426950202e-02") != std::string::npos);
}

TEST_CASE("series subcommand dumps rational coefficients") {
  RunResult r = run_cli({"series", "1", "3", "--axis", "y"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 0\n") == 0);
  CHECK(r.out.find("1 1/4") != std::string::npos);
}

TEST_CASE("compare emits the fixed csv schema") {
  RunResult r = run_cli({"compare", "--axis", "y", "--n", "200,400", "--xi", "0.3,0.5"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("axis,n,k,xi,exact_log,estimate_log,rel_error,regime,oracle\n", 0) == 0);
  int lines = 0;
  for (char ch : r.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 5);
  RunResult j = run_cli({"compare", "--axis", "y", "--n", "200", "--xi", "0.5", "--format",
                         "json"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"exact_log\"") != std::string::npos);
}

TEST_CASE("validation failures exit with code 2") {
  CHECK(run_cli({"asym", "99", "100", "--axis", "y"}).code == 2);        // xi > 1-c
  CHECK(run_cli({"exact", "0", "1", "--axis", "q"}).code == 2);          // bad axis
  CHECK(run_cli({"compare", "--axis", "y", "--format", "xml"}).code == 2);
  CHECK(run_cli({"--alpha", "0.4", "asym", "1", "100", "--axis", "y"}).code == 2);
  CHECK(run_cli({"nonsense"}).code == 2);
}

TEST_CASE("infeasible requests exit with code 3") {
  CHECK(run_cli({"exact", "0", "400", "--axis", "y"}).code == 3);  // beyond the DP cap
}

TEST_CASE("config file supplies defaults, flags win") {
  std::string cfg_path = "/tmp/combwalk_test_config.ini";
  {
    std::ofstream f(cfg_path);
    f << "exact-cap=4\n";
  }
  // Config cap makes n = 5 infeasible...
  CHECK(run_cli({"--config", cfg_path, "exact", "0", "5", "--axis", "y"}).code == 3);
  // ...unless the flag overrides it.
  CHECK(run_cli({"--config", cfg_path, "--exact-cap", "300", "exact", "0", "5", "--axis",
                 "y"}).code == 0);
}

TEST_CASE("green subcommand evaluates the comb recursion") {
  RunResult r = run_cli({"green", "--re", "0.5", "--im", "0", "--d", "2"});
  CHECK(r.code == 0);
  // G_2(0.5) = G(0.25) = 1.1547005383792515...e+00 region; just check shape.
  CHECK(r.out.find("e+00 0.0000000000000000e+00") != std::string::npos);
  CHECK(run_cli({"green", "--re", "1.5", "--im", "0", "--d", "2"}).code == 2);  // on the cut
}

TEST_CASE("saddle subcommand prints the closed-form data") {
  RunResult r = run_cli({"saddle", "0.5", "--axis", "y"});
  CHECK(r.code == 0);
  CHECK(r.out.find("z0 7.5000000000000000e-01") != std::string::npos);
  CHECK(r.out.find("residual") != std::string::npos);
}

TEST_CASE("contour subcommand reports the split") {
  RunResult r = run_cli({"contour", "--kind", "hybrid", "--xi", "0.2", "--k", "20", "--n",
                         "100", "--axis", "y"});
  CHECK(r.code == 0);
  CHECK(r.out.find("part_a") != std::string::npos);
  CHECK(r.out.find("total") != std::string::npos);
}
