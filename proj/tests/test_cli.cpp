#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "ba/automata.hpp"

namespace {

struct RunResult {
  std::string out;
  int code = -1;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(BA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("decide prints the truth value and exits zero") {
  RunResult t = run("decide --base 2 'A x. V(x) <= x'");
  CHECK(t.out == "true\n");
  CHECK(t.code == 0);
  RunResult f = run("decide 'E x. S(x) = 0'");
  CHECK(f.out == "false\n");
  CHECK(f.code == 0);
}

TEST_CASE("open formulas and bad syntax map to exit codes") {
  CHECK(run("decide 'x = 0'").code == 3);
  CHECK(run("decide 'x = ('").code == 2);
  CHECK(run("frobnicate 'x = 0'").code == 2);
  CHECK(run("decide").code == 2);
}

TEST_CASE("count matches the documented example") {
  RunResult r = run("count --base 2 --digits 4 'V(x) = x & ! x = 0'");
  CHECK(r.out == "4\n");
  CHECK(r.code == 0);
}

TEST_CASE("solve lists assignments up to the limit") {
  CHECK(run("solve 'x + x = 4'").out == "x=2\n");
  CHECK(run("solve --limit 3 'x = x'").out == "x=0\nx=1\nx=2\n");
  CHECK(run("solve 'x < 0'").out.empty());
}

TEST_CASE("eval follows the oracle") {
  CHECK(run("eval --assign x=12 'V(x) <= x'").out == "true\n");
  CHECK(run("eval --assign x=7 'E z <= x. x = z + z'").out == "false\n");
  CHECK(run("eval --assign x=6 --bound 6 'E y. y + y = x'").out == "true\n");
  // unbounded quantifier without a bound is a precondition violation
  CHECK(run("eval --assign x=6 'E y. y + y = x'").code == 3);
  CHECK(run("eval --assign x=oops '0 = 0'").code == 2);
}

TEST_CASE("the base comes from BA_BASE unless a flag overrides it") {
  CHECK(run("decide 'E x. (V(x) = x & x = 8)'").out == "true\n");
  RunResult env = run("decide 'E x. (V(x) = x & x = 8)'");
  RunResult r3 = RunResult{};
  {
    std::string cmd = std::string("BA_BASE=3 ") + BA_CLI_PATH +
                      " decide 'E x. (V(x) = x & x = 8)' 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[256];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r3.out.append(buf, n);
    r3.code = WEXITSTATUS(pclose(pipe));
  }
  CHECK(env.out == "true\n");
  CHECK(r3.out == "false\n");
  CHECK(r3.code == 0);
}

TEST_CASE("formulas load from a file with @path") {
  std::string path = "cli_formula.txt";
  std::ofstream(path) << "A x. V(V(x)) = V(x)\n";
  CHECK(run("decide @" + path).out == "true\n");
  CHECK(run("decide @no_such_file.txt").code == 2);
  std::remove(path.c_str());
}

TEST_CASE("compile emits DOT by default and round-trips through JSON") {
  RunResult dot = run("compile 'x = 0'");
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph") != std::string::npos);
  RunResult js = run("compile --format json 'V(x) = y'");
  CHECK(js.code == 0);
  ba::Dfa a = ba::dfa_from_json(js.out);
  CHECK(a.arity == 2);
  CHECK(ba::is_total(a));
  // --out writes the same bytes to a file
  std::string path = "cli_compile.json";
  CHECK(run("compile --format json --out " + path + " 'V(x) = y'").code == 0);
  std::ifstream in(path);
  std::string file_body((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
  CHECK(file_body == js.out);
  std::remove(path.c_str());
}

TEST_CASE("wformula prints the run formula for an exported automaton") {
  std::string path = "cli_automaton.json";
  CHECK(run("compile --format json --out " + path + " 'x = 0'").code == 0);
  RunResult r = run("wformula --automaton " + path +
                    " --state 0 --vars x --dvar d");
  CHECK(r.code == 0);
  CHECK(r.out.find("V(d) = d") != std::string::npos);
  CHECK(r.out.find("_w0") != std::string::npos);
  CHECK(run("wformula --automaton " + path + " --state 99 --vars x").code ==
        3);
  std::remove(path.c_str());
}

TEST_CASE("check runs suites deterministically") {
  std::string args = "check --base 2 --bound 16 --random 5 --seed 42";
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("PASS add-comm") != std::string::npos);
  RunResult js = run(args + " --format json");
  CHECK(js.code == 0);
  CHECK(js.out.find("\"seed\": 42") != std::string::npos);
  CHECK(run("check --suite decide-corpus").code == 0);
  CHECK(run("check --suite closure --random 10").code == 0);
  CHECK(run("check --suite nonsense").code == 2);
}
