#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = "cli_capture.tmp";
  const std::string cmd =
      std::string("\"") + WIGNERD_CLI_PATH + "\" " + args + " > " + out_path +
      " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream is(out_path);
  std::stringstream ss;
  ss << is.rdbuf();
  int code = -1;
  if (WIFEXITED(status)) code = WEXITSTATUS(status);
  return RunResult{code, ss.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::string first_line(const std::string& s) {
  return s.substr(0, s.find('\n'));
}

}  // namespace

TEST_CASE("element subcommand") {
  const auto r = run_cli("element --two-j 1 --two-m 1 --two-n 1 --theta 1.0");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.output) == "two_j,two_m,two_n,theta,value");
  // cos(0.5) = 0.87758256189...
  CHECK(r.output.find("8.775825618903") != std::string::npos);
}

TEST_CASE("derivative subcommand with pi fraction") {
  const auto r = run_cli(
      "derivative --two-j 1 --two-m 1 --two-n 1 --theta-pi 1/2 --order 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("order") != std::string::npos);
  // -sin(pi/4)/2 = -0.35355339059...
  CHECK(r.output.find("-3.5355339059") != std::string::npos);
}

TEST_CASE("table is byte-identical across invocations and exec modes") {
  const auto r1 = run_cli("table --two-j 15 --theta-pi 1/3 --out t1.csv");
  const auto r2 = run_cli("table --two-j 15 --theta-pi 1/3 --out t2.csv");
  const auto r3 = run_cli("table --two-j 15 --theta-pi 1/3 --serial --out t3.csv");
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  CHECK(r3.exit_code == 0);
  const std::string a = slurp("t1.csv");
  CHECK(!a.empty());
  CHECK(a == slurp("t2.csv"));
  CHECK(a == slurp("t3.csv"));
}

TEST_CASE("fourier emits one row per eigenvalue") {
  const auto r = run_cli("fourier --two-j 2 --two-m 2 --two-n -2");
  CHECK(r.exit_code == 0);
  int lines = 0;
  for (char c : r.output)
    if (c == '\n') ++lines;
  CHECK(lines == 4);  // header + 3 rows
}

TEST_CASE("boundary map and fisher") {
  const auto rb = run_cli("boundary --two-j 8 --theta-pi 1/4");
  CHECK(rb.exit_code == 0);
  CHECK(first_line(rb.output) == "two_m,two_n,inside,abs_d");

  const auto rf = run_cli("fisher --two-j 40 --theta-pi 1/4");
  CHECK(rf.exit_code == 0);
  // last CSV field of the data row is F, expected 2j = 40
  const std::string data = rf.output.substr(rf.output.find('\n') + 1);
  const double f = std::stod(data.substr(data.rfind(',') + 1));
  CHECK(f == doctest::Approx(40.0).epsilon(1e-8));
}

TEST_CASE("error sweep -> fit pipeline") {
  const auto rs = run_cli(
      "error-sweep --two-j 10 --two-j 20 --two-j 24 --two-j 30 --two-j 40 "
      "--budget 60 --precision-bits 256 --out sweep_pipe.csv");
  REQUIRE(rs.exit_code == 0);
  const auto rf = run_cli("fit --in sweep_pipe.csv");
  CHECK(rf.exit_code == 0);
  CHECK(first_line(rf.output) == "a,b,rms_residual");

  SUBCASE("sweep output is deterministic") {
    const auto again = run_cli(
        "error-sweep --two-j 10 --two-j 20 --two-j 24 --two-j 30 --two-j 40 "
        "--budget 60 --precision-bits 256 --out sweep_pipe2.csv");
    REQUIRE(again.exit_code == 0);
    CHECK(slurp("sweep_pipe.csv") == slurp("sweep_pipe2.csv"));
  }

  SUBCASE("fit needs five distinct j") {
    const auto r1 = run_cli(
        "error-sweep --two-j 10 --budget 20 --precision-bits 256 "
        "--out sweep_single.csv");
    REQUIRE(r1.exit_code == 0);
    const auto bad = run_cli("fit --in sweep_single.csv");
    CHECK(bad.exit_code == 2);
  }
}

TEST_CASE("json output carries meta and data") {
  const auto r = run_cli(
      "element --two-j 2 --two-m 0 --two-n 0 --theta-pi 1/2 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"meta\"") != std::string::npos);
  CHECK(r.output.find("\"command\": \"element\"") != std::string::npos);
  CHECK(r.output.find("\"data\"") != std::string::npos);
  CHECK(r.output.find("\"tool\": \"wignerd\"") != std::string::npos);
}

TEST_CASE("oracle subcommand") {
  const auto r = run_cli(
      "oracle --kind edge --two-j 200 --two-m -200 --theta-pi 1/6 "
      "--precision-bits 512");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("3.974") != std::string::npos);
  CHECK(r.output.find("e-118") != std::string::npos);

  const auto rf = run_cli(
      "oracle --kind fourier --two-j 1 --two-m 1 --two-n 1 --two-mu 1");
  CHECK(rf.exit_code == 0);
  CHECK(rf.output.find("1/2") != std::string::npos);
}

TEST_CASE("exit codes") {
  SUBCASE("parity error -> 2") {
    const auto r = run_cli("element --two-j 1 --two-m 0 --two-n 1 --theta 0.5");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("missing angle -> 2") {
    const auto r = run_cli("element --two-j 1 --two-m 1 --two-n 1");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("unknown option -> 2") {
    const auto r = run_cli("element --two-j 1 --two-m 1 --two-n 1 --bogus 3");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("precision below floor -> 3") {
    const auto r = run_cli(
        "oracle --kind sum --two-j 200 --two-m 0 --two-n 0 --theta 0.5 "
        "--precision-bits 128");
    CHECK(r.exit_code == 3);
  }
  SUBCASE("help -> 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("--version").exit_code == 0);
  }
}
