#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ba/automata.hpp"
#include "ba/compiler.hpp"
#include "ba/defn_formulas.hpp"
#include "ba/oracle.hpp"
#include "ba/syntax.hpp"
#include "ba/theory_suite.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCheckFailed = 4;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ba::FormulaPtr read_formula(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') text = slurp(arg.substr(1));
  return ba::parse(text);
}

ba::Assignment parse_assignment(const std::string& spec) {
  ba::Assignment a;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw CLI::ValidationError("--assign expects name=value pairs: " + item);
    std::string name = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    if (value.empty() ||
        value.find_first_not_of("0123456789") != std::string::npos)
      throw CLI::ValidationError("--assign value is not a natural: " + item);
    a[name] = ba::Nat(value);
  }
  return a;
}

std::vector<std::string> split_names(const std::string& spec) {
  std::vector<std::string> out;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty())
      throw CLI::ValidationError("empty variable name in list: " + spec);
    out.push_back(item);
  }
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw CLI::ValidationError("cannot write file: " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision procedures for base-k Buchi arithmetic"};
  app.require_subcommand(1);

  int k = 2;
  if (const char* env = std::getenv("BA_BASE")) {
    std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos ||
        std::stoi(s) < 2) {
      std::cerr << "error: BA_BASE must be an integer >= 2, got '" << s
                << "'\n";
      return kExitParse;
    }
    k = std::stoi(s);
  }
  app.add_option("--base,-b", k, "expansion base k (default from BA_BASE or 2)")
      ->check(CLI::Range(2, 64));

  std::string formula_arg;
  auto add_formula = [&](CLI::App* sub) {
    sub->add_option("formula", formula_arg,
                    "formula text, or @path to read it from a file")
        ->required();
  };

  auto* cmd_decide =
      app.add_subcommand("decide", "decide a sentence, printing true or false");
  add_formula(cmd_decide);

  std::size_t limit = 10;
  auto* cmd_solve =
      app.add_subcommand("solve", "enumerate satisfying assignments");
  add_formula(cmd_solve);
  cmd_solve->add_option("--limit", limit, "maximum number of solutions")
      ->check(CLI::PositiveNumber);

  int digits = 0;
  auto* cmd_count = app.add_subcommand(
      "count", "count solutions whose components have fewer than L digits");
  add_formula(cmd_count);
  cmd_count->add_option("--digits", digits, "digit bound L")
      ->required()
      ->check(CLI::NonNegativeNumber);

  std::string format = "dot";
  std::string out_path;
  auto* cmd_compile =
      app.add_subcommand("compile", "compile a formula to an automaton");
  add_formula(cmd_compile);
  cmd_compile->add_option("--format", format, "output format (dot or json)")
      ->check(CLI::IsMember({"dot", "json"}));
  cmd_compile->add_option("--out", out_path, "output file (default stdout)");

  std::string assign_spec;
  std::string bound_spec;
  auto* cmd_eval =
      app.add_subcommand("eval", "evaluate a formula under an assignment");
  add_formula(cmd_eval);
  cmd_eval->add_option("--assign", assign_spec,
                       "comma-separated name=value pairs, e.g. x=3,y=5");
  cmd_eval->add_option(
      "--bound", bound_spec,
      "range for unbounded quantifiers (sound only if a witness bound)");

  std::string automaton_path, dvar = "d", vars_spec;
  int state = 0;
  auto* cmd_wf = app.add_subcommand(
      "wformula", "print the run formula for a state of an automaton");
  cmd_wf->add_option("--automaton", automaton_path, "automaton JSON file")
      ->required();
  cmd_wf->add_option("--state", state, "state reached by the run")->required();
  cmd_wf->add_option("--vars", vars_spec, "comma-separated track variables")
      ->required();
  cmd_wf->add_option("--dvar", dvar, "power-of-k length variable (default d)");

  std::string suite = "axioms";
  std::string check_bound;
  int random_count = 100;
  std::uint64_t seed = 42;
  std::string check_format = "text";
  auto* cmd_check =
      app.add_subcommand("check", "run a verification suite and report");
  cmd_check->add_option("--suite", suite, "which suite (default axioms)")
      ->check(CLI::IsMember({"axioms", "lemmas", "closure", "decide-corpus"}));
  cmd_check->add_option("--bound", check_bound,
                        "exhaustive grid bound (default k^4)");
  cmd_check->add_option("--random", random_count,
                        "random samples per case (default 100)")
      ->check(CLI::NonNegativeNumber);
  cmd_check->add_option("--seed", seed, "random seed (default 42)");
  cmd_check->add_option("--format", check_format, "report format")
      ->check(CLI::IsMember({"text", "json"}));

  // let --base (and other globals) appear after the subcommand name
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (cmd_decide->parsed()) {
      std::cout << (ba::decide(read_formula(formula_arg), k) ? "true"
                                                             : "false")
                << "\n";
    } else if (cmd_solve->parsed()) {
      for (const ba::Assignment& a :
           ba::solve(read_formula(formula_arg), k, limit)) {
        if (a.empty()) {
          std::cout << "sat\n";
          continue;
        }
        bool first = true;
        for (const auto& [name, value] : a) {
          std::cout << (first ? "" : " ") << name << "=" << value.str();
          first = false;
        }
        std::cout << "\n";
      }
    } else if (cmd_count->parsed()) {
      std::cout << ba::count(read_formula(formula_arg), k, digits).str()
                << "\n";
    } else if (cmd_compile->parsed()) {
      ba::CompiledFormula c = ba::compile(read_formula(formula_arg), k);
      std::string body =
          format == "json" ? ba::to_json(c.dfa) + "\n" : ba::to_dot(c.dfa);
      write_output(out_path, body);
      std::cerr << "tracks:";
      for (int sym : c.context) std::cerr << " " << ba::symbol_name(sym);
      std::cerr << "\n";
    } else if (cmd_eval->parsed()) {
      ba::FormulaPtr f = read_formula(formula_arg);
      ba::Assignment a = parse_assignment(assign_spec);
      bool result;
      if (ba::is_delta0(f))
        result = ba::eval_delta0(f, a, k);
      else if (!bound_spec.empty())
        result = ba::eval_bounded(f, a, k, ba::Nat(bound_spec));
      else
        throw std::invalid_argument(
            "formula has unbounded quantifiers; pass --bound");
      std::cout << (result ? "true" : "false") << "\n";
    } else if (cmd_wf->parsed()) {
      ba::Nfa a = ba::nfa_from_json(slurp(automaton_path));
      std::vector<int> xs;
      for (const std::string& name : split_names(vars_spec))
        xs.push_back(ba::intern(name));
      std::cout << ba::print(ba::f_w(a, state, xs, ba::intern(dvar))) << "\n";
    } else if (cmd_check->parsed()) {
      ba::Nat bound =
          check_bound.empty() ? ba::pow_k(k, 4) : ba::Nat(check_bound);
      ba::CheckReport rep;
      if (suite == "axioms")
        rep = ba::run_suite(ba::axiom_suite(k), k, bound, random_count, seed);
      else if (suite == "lemmas")
        rep = ba::run_suite(ba::lemma_suites(k), k, bound, random_count, seed);
      else if (suite == "closure")
        rep = ba::closure_suite(k, random_count, 5, seed);
      else
        rep = ba::decide_suite();
      std::cout << (check_format == "json" ? ba::report_json(rep)
                                           : ba::report_text(rep));
      if (!rep.passed) return kExitCheckFailed;
    }
  } catch (const ba::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return 0;
}
