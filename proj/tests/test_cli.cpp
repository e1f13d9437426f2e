#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef DELONEQ_BIN
#error "DELONEQ_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(DELONEQ_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_spec(const std::string& name, const std::string& json) {
  const std::string path = "/tmp/deloneq_test_" + name + ".json";
  std::ofstream f(path);
  f << json;
  return path;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("seq subcommand emits the expected values") {
  const std::string spec =
      write_spec("shift", R"({"family":"constant_shift","params":{"epsilon":0.5}})");
  const RunResult r = run("seq --spec " + spec + " --nmax 3");
  CHECK(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,x_n,alpha_n");
  std::getline(in, line);
  CHECK(line.substr(0, 4) == "0,0,");
  std::getline(in, line);
  CHECK(line.substr(0, 6) == "1,1.5,");
  CHECK(count_lines(r.out) == 5);  // header + 4 rows
}

TEST_CASE("mu output is deterministic across runs") {
  const std::string spec =
      write_spec("mu", R"({"family":"constant_shift","params":{"epsilon":0.1}})");
  const std::string args = "mu --spec " + spec + " --nmax 6 --tol 1e-9";
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("n,mu_n,abs_err,asymptote") == 0);
  CHECK(a.out.find("1.0686115873") != std::string::npos);  // mu_0
}

TEST_CASE("renorm and measures run end to end") {
  const std::string spec =
      write_spec("ren", R"({"family":"constant_shift","params":{"epsilon":0.1}})");
  const RunResult r = run("renorm --spec " + spec + " --nmax 5 --tol 1e-9");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n,x_n,xt_n,x_n_minus_xt_n") == 0);

  const RunResult m =
      run("measures --epsilon 0.1 --tmin 0 --tmax 5 --steps 6 --tol 1e-8");
  CHECK(m.exit_code == 0);
  CHECK(m.out.find("t,solved,nu") == 0);
  CHECK(m.out.find("\n0,0.9") != std::string::npos);  // solved density at t = 0
  CHECK(count_lines(m.out) == 7);
}

TEST_CASE("quantize, spectrum, stats, gha subcommands") {
  const std::string spec =
      write_spec("q", R"({"family":"constant_shift","params":{"epsilon":0.1}})");
  const RunResult q = run("quantize --spec " + spec + " --symbol one --dim 4 --tol 1e-9");
  CHECK(q.exit_code == 0);
  CHECK(q.out.find("n,np,re,im") == 0);
  CHECK(count_lines(q.out) == 17);  // header + 16 entries

  const RunResult sp = run("spectrum --spec " + spec + " --n 5 --tol 1e-9");
  CHECK(sp.exit_code == 0);
  CHECK(count_lines(sp.out) == 6);

  const RunResult st = run("stats --spec " + spec + " --mode poisson --t 2 --n 8");
  CHECK(st.exit_code == 0);
  CHECK(st.out.find("n,pmf") == 0);

  const std::string hom = write_spec(
      "hom", R"({"family":"homographic","params":{"a":0.1,"b":0,"c":1,"d":2.2}})");
  const RunResult g = run("gha --spec " + hom + " --nmax 5");
  CHECK(g.exit_code == 0);
  CHECK(g.out.find("n,alpha,gamma,delta") == 0);
}

TEST_CASE("figures: fig2 row count and svg format") {
  const RunResult f = run("figures fig2 --epsilon 0.1 --tol 1e-9");
  CHECK(f.exit_code == 0);
  CHECK(f.out.find("n,x_n_minus_xt_n") == 0);
  CHECK(count_lines(f.out) == 16);  // header + n = 0..14

  const RunResult s = run("figures fig2 --epsilon 0.1 --tol 1e-9 --format svg");
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("<svg") != std::string::npos);
  CHECK(s.out.find("</svg>") != std::string::npos);
}

TEST_CASE("output file option") {
  const std::string spec =
      write_spec("of", R"({"family":"naturals"})");
  const std::string out_path = "/tmp/deloneq_test_out.csv";
  std::remove(out_path.c_str());
  const RunResult r = run("seq --spec " + spec + " --nmax 2 --out " + out_path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out_path);
  REQUIRE(f.good());
  std::string line;
  std::getline(f, line);
  CHECK(line == "n,x_n,alpha_n");
}

TEST_CASE("error paths exit nonzero") {
  CHECK(run("seq --spec /nonexistent.json").exit_code == 1);
  const std::string bad = write_spec("bad", R"({"family":"no_such_family"})");
  CHECK(run("seq --spec " + bad).exit_code == 1);
  // GHA rejects the constant shift
  const std::string cs = write_spec("cs", R"({"family":"constant_shift","params":{"epsilon":0.1}})");
  CHECK(run("gha --spec " + cs + " --nmax 3").exit_code == 1);
  // unknown subcommand / missing required option are CLI parse errors
  CHECK(run("frobnicate").exit_code != 0);
  CHECK(run("mu").exit_code != 0);
}
