#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = "cli_test_stdout.txt";
  const std::string cmd = std::string(GRIDGEO_CLI) + " " + args + " > " +
                          out_path + " 2> cli_test_stderr.txt";
  RunResult r;
  const int raw = std::system(cmd.c_str());
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream is(out_path, std::ios::binary);
  std::stringstream buf;
  buf << is.rdbuf();
  r.out = buf.str();
  return r;
}

}  // namespace

TEST_CASE("analyze-line emits an LR verdict with the published determinant") {
  const auto r = run_cli("analyze-line --r 0.08 --l 0.24 --omega pi --format json");
  CHECK(r.status == 0);
  CHECK(r.out.find("-207.78") != std::string::npos);
  CHECK(r.out.find("\"kind\": \"lr\"") != std::string::npos);
}

TEST_CASE("omega aliases") {
  const auto pi_run = run_cli("analyze-line --r 0.08 --l 0.24 --omega pi --format json");
  const auto dec_run =
      run_cli("analyze-line --r 0.08 --l 0.24 --omega 3.141592653589793 --format json");
  CHECK(pi_run.out == dec_run.out);
  const auto mains = run_cli("analyze-line --r 0.08 --l 0.24 --omega 2pi50 --format json");
  CHECK(mains.status == 0);
  CHECK(mains.out != pi_run.out);
}

TEST_CASE("sweep produces the CSV grid contract") {
  const auto r = run_cli("sweep --r 1e-6 --l 0.01:1:10 --c 0.01:1:10 --omega 1");
  CHECK(r.status == 0);
  size_t rows = 0;
  for (char c : r.out)
    if (c == '\n') ++rows;
  CHECK(rows == 101);  // header + 10x10
  CHECK(r.out.rfind("L,C,P2,det_g,R,", 0) == 0);
}

TEST_CASE("analyze-network consumes the bundled case file") {
  const auto r = run_cli(std::string("analyze-network --case ") +
                         GRIDGEO_DATA_DIR + "/five_bus_lr.json --format json");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"T7\"") != std::string::npos);
}

TEST_CASE("exit codes distinguish input and numerical failures") {
  CHECK(run_cli("analyze-line --r 0.1").status == 1);       // missing --l
  CHECK(run_cli("analyze-line --r 0.1 --l 0.1 --bogus 1").status == 1);
  CHECK(run_cli("nonsense").status == 1);
  CHECK(run_cli("analyze-line --r 0 --l 0").status == 2);   // singular input
  CHECK(run_cli("sweep --r 1 --l 0.1:1:5 --c 0:1:5").status == 1);
  CHECK(run_cli("analyze-line --r 0.1 --l 0.1 --omega -3").status == 1);
}

TEST_CASE("verify-paper subreports run end to end") {
  const auto t1 = run_cli("verify-paper --which table1 --omega pi");
  CHECK(t1.status == 0);
  CHECK(t1.out.find("[pass]") != std::string::npos);
  CHECK(t1.out.find("[flag]") != std::string::npos);
  const auto fl = run_cli("verify-paper --which flatness --omega 1");
  CHECK(fl.status == 0);
  const auto lim = run_cli("verify-paper --which limits --omega 1 --c 0.1");
  CHECK(lim.status == 0);
  CHECK(lim.out.find("convergence order") != std::string::npos);
}

TEST_CASE("output flag writes the same bytes as stdout") {
  const auto direct = run_cli("verify-paper --which table1 --omega pi");
  const auto to_file =
      run_cli("verify-paper --which table1 --omega pi --output cli_test_file.txt");
  CHECK(to_file.status == 0);
  CHECK(to_file.out.empty());
  std::ifstream is("cli_test_file.txt", std::ios::binary);
  std::stringstream buf;
  buf << is.rdbuf();
  CHECK(buf.str() == direct.out);
}
