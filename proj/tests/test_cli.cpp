#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "pathmat/generate.hpp"
#include "pathmat/graph6.hpp"

#ifndef PATHMAT_CLI_PATH
#error "PATHMAT_CLI_PATH must point at the built binary"
#endif

namespace {

struct CmdResult {
  int status;
  std::string out;
};

CmdResult run_cli(const std::string& args, const std::string& stdin_text = "") {
  char tmpl[] = "/tmp/pathmat_cli_XXXXXX";
  const int fd = mkstemp(tmpl);
  REQUIRE(fd >= 0);
  {
    std::ofstream f(tmpl);
    f << stdin_text;
  }
  close(fd);
  const std::string cmd =
      std::string(PATHMAT_CLI_PATH) + " " + args + " < " + tmpl + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  const int rc = pclose(pipe);
  std::remove(tmpl);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

}  // namespace

TEST_CASE("gen emits graph6", "[cli]") {
  const auto r = run_cli("gen --family cycle --n 4");
  REQUIRE(r.status == 0);
  CHECK(pathmat::parse_graph6(r.out) == pathmat::make_cycle(4));
}

TEST_CASE("gen pipes into matrix", "[cli]") {
  const auto gen = run_cli("gen --family cycle --n 4");
  REQUIRE(gen.status == 0);
  const auto mat = run_cli("matrix", gen.out);
  REQUIRE(mat.status == 0);
  CHECK(mat.out == "4\n0\t2\t2\t2\n2\t0\t2\t2\n2\t2\t0\t2\n2\t2\t2\t0\n");

  const auto js = run_cli("matrix --json", gen.out);
  REQUIRE(js.status == 0);
  CHECK(js.out == "{\"n\":4,\"p\":[0,2,2,2,2,0,2,2,2,2,0,2,2,2,2,0]}\n");
}

TEST_CASE("spectrum and energy outputs", "[cli]") {
  const std::string k4 = pathmat::write_graph6(pathmat::make_complete(4));
  const auto spec = run_cli("spectrum", k4 + "\n");
  REQUIRE(spec.status == 0);
  CHECK(spec.out ==
        "[9.000000000,-3.000000000,-3.000000000,-3.000000000]\n");

  const auto en = run_cli("energy", k4 + "\n");
  REQUIRE(en.status == 0);
  CHECK(en.out == "PE = 18.000000000\nrho = 9.000000000\n");
}

TEST_CASE("edge-list input is auto-detected", "[cli]") {
  const auto r = run_cli("spectrum", "3\n0 1\n1 2\n");
  REQUIRE(r.status == 0);
  CHECK(r.out == "[2.000000000,-1.000000000,-1.000000000]\n");
}

TEST_CASE("closed-form output", "[cli]") {
  const auto r = run_cli("closed-form --n 10 --k 3");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("PE = 20.000000000") != std::string::npos);
  CHECK(r.out.find("rho1 = 9.690415760") != std::string::npos);

  // k = n degenerates to the cycle spectrum
  const auto cyc = run_cli("closed-form --n 6 --k 6");
  REQUIRE(cyc.status == 0);
  CHECK(cyc.out.find("rho1 = 10.000000000") != std::string::npos);
  CHECK(cyc.out.find("rho2 = -2.000000000") != std::string::npos);
  CHECK(cyc.out.find("PE = 20.000000000") != std::string::npos);

  CHECK(run_cli("closed-form --n 6 --k 2").status == 2);
}

TEST_CASE("worker count does not change the output", "[cli]") {
  const auto gen = run_cli("gen --family unicyclic --n 14 --k 6 --shape random-tree --seed 5");
  REQUIRE(gen.status == 0);
  const auto one = run_cli("matrix --workers 1", gen.out);
  const auto eight = run_cli("matrix --workers 8", gen.out);
  CHECK(one.out == eight.out);
  const auto s1 = run_cli("spectrum --workers 1", gen.out);
  const auto s8 = run_cli("spectrum --workers 8", gen.out);
  CHECK(s1.out == s8.out);
}

TEST_CASE("verify runs and exits zero", "[cli]") {
  const auto r = run_cli("verify --corpus exhaustive:4 --checks T1,T2,T3,ORACLE");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("result: OK") != std::string::npos);

  const auto json = run_cli("verify --corpus unicyclic:nmax=9 --checks T4,L5 --format json");
  REQUIRE(json.status == 0);
  CHECK(json.out.find("\"ok\": true") != std::string::npos);
}

TEST_CASE("usage and input errors exit two", "[cli]") {
  CHECK(run_cli("matrix --format yaml", "A_\n").status == 2);
  CHECK(run_cli("gen --family lattice --n 4").status == 2);
  CHECK(run_cli("gen --family unicyclic --n 4 --k 9").status == 2);
  CHECK(run_cli("matrix", "A\x19\n").status == 2);  // malformed graph6
  CHECK(run_cli("verify --corpus exhaustive:9").status == 2);
  CHECK(run_cli("verify --corpus exhaustive:4 --checks T9").status == 2);
  CHECK(run_cli("nonsense").status == 2);
}

TEST_CASE("verify reads graph6 corpora from stdin", "[cli]") {
  const auto r = run_cli("verify --corpus stdin --checks T2,ORACLE", "A_\nBw\nDqK\n");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("result: OK") != std::string::npos);
}

TEST_CASE("graphs and corpora load from files", "[cli]") {
  char tmpl[] = "/tmp/pathmat_input_XXXXXX";
  const int fd = mkstemp(tmpl);
  REQUIRE(fd >= 0);
  {
    std::ofstream f(tmpl);
    f << pathmat::write_graph6(pathmat::make_cycle(4)) << "\n";
  }
  close(fd);

  const auto mat = run_cli(std::string("matrix ") + tmpl);
  REQUIRE(mat.status == 0);
  CHECK(mat.out.substr(0, 2) == "4\n");

  const auto ver = run_cli(std::string("verify --corpus file:") + tmpl + " --checks T2,ORACLE");
  REQUIRE(ver.status == 0);
  CHECK(ver.out.find("result: OK") != std::string::npos);
  std::remove(tmpl);

  CHECK(run_cli("matrix /no/such/file").status == 2);
}

TEST_CASE("gen piped into energy reproduces the closed form", "[cli]") {
  const auto gen = run_cli("gen --family unicyclic --n 10 --k 3 --shape pendant-star");
  REQUIRE(gen.status == 0);
  const auto en = run_cli("energy", gen.out);
  REQUIRE(en.status == 0);
  CHECK(en.out.find("PE = 20.000000000") != std::string::npos);

  const auto cf = run_cli("closed-form --n 10 --k 3");
  REQUIRE(cf.status == 0);
  CHECK(cf.out.find("PE = 20.000000000") != std::string::npos);
}
