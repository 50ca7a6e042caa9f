// Batch CLI: load pivotal Hopf algebras, validate them, decompose modules,
// evaluate modified traces and expression strings, and run the check suites.
// JSON reports go to stdout; human-readable tables go to stderr with
// --pretty.  Exit codes: 0 success, 1 invalid input, 2 check failure,
// 3 unsatisfied precondition (e.g. module not in the ideal).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mtrace/checks.hpp"
#include "mtrace/dsl.hpp"
#include "mtrace/json_io.hpp"

using namespace mtrace;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitPrecondition = 3;

struct Options {
  std::vector<std::string> builtin;
  std::string path;
  unsigned long seed = 1;
  bool pretty = false;
  std::string sabotage;
};

HopfPtr resolve_algebra(const Options& opt) {
  HopfPtr h;
  if (!opt.builtin.empty()) {
    const std::string& name = opt.builtin[0];
    unsigned long arg =
        opt.builtin.size() > 1 ? std::stoul(opt.builtin[1]) : 0;
    if (name == "sweedler") {
      h = make_sweedler();
    } else if (name == "taft") {
      h = make_taft(arg ? arg : 3);
    } else if (name == "group_z") {
      h = make_group_algebra_zn(arg ? arg : 2);
    } else {
      throw SchemaError("unknown builtin '" + name +
                        "' (expected sweedler, taft, group_z)");
    }
  } else if (!opt.path.empty()) {
    std::ifstream in(opt.path);
    if (!in) throw SchemaError("cannot open " + opt.path);
    std::stringstream ss;
    ss << in.rdbuf();
    h = load_hopf(ss.str());
  } else {
    throw SchemaError("no algebra given: pass a JSON path or --builtin");
  }
  if (!opt.sabotage.empty()) {
    if (opt.sabotage != "pivot")
      throw SchemaError("unknown sabotage target '" + opt.sabotage + "'");
    auto broken = std::make_shared<HopfAlgebra>(*h);
    broken->pivot = broken->unit;  // deliberately wrong for testing suites
    h = broken;
  }
  return h;
}

ModulePtr lookup_module(const Corpus& corpus, const std::string& name) {
  for (const auto& [n, m] : corpus.registry)
    if (n == name) return m;
  throw SchemaError("unknown module '" + name +
                    "' (see `mtrace examples` for the registry)");
}

dsl::Env make_env(const Corpus& corpus, const TraceTuple* tuple) {
  dsl::Env env;
  for (const auto& [n, m] : corpus.registry) env.add_module(n, m);
  if (tuple) {
    env.add_module("P", tuple->P);
    env.add_module("a", tuple->alpha);
    env.add_module("b", tuple->beta);
    env.add_morphism("eta", tuple->eta, "a", "P");
    env.add_morphism("eps", tuple->eps, "P", "b");
  }
  return env;
}

json tuple_to_json(const TraceTuple& t) {
  return json{{"P", t.P->name},
              {"alpha", t.alpha->name},
              {"beta", t.beta->name},
              {"dim_P", t.P->dim},
              {"dim_end_P", t.p_report.dim_end},
              {"dim_rad_end_P", t.p_report.dim_rad},
              {"nilpotency_index", t.p_report.nilpotency_index}};
}

json results_to_json(const std::vector<CheckResult>& results) {
  json arr = json::array();
  for (const auto& r : results)
    arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  return arr;
}

void print_results_table(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    std::cerr << (r.pass ? "  ok  " : " FAIL ") << r.name
              << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
}

int cmd_validate(const Options& opt) {
  json report;
  try {
    auto h = resolve_algebra(opt);
    report["algebra"] = h->name;
    report["dim"] = h->dim;
    report["field"] = field_to_json(h->field);
    report["valid"] = true;
    std::cout << report.dump() << "\n";
    if (opt.pretty)
      std::cerr << "algebra '" << h->name << "' (dim " << h->dim
                << " over " << h->field.str() << "): all axioms hold\n";
    return kExitOk;
  } catch (const AxiomViolation& e) {
    report["valid"] = false;
    report["axiom"] = e.axiom;
    report["witness"] = e.witness;
    std::cout << report.dump() << "\n";
    std::cerr << "axiom violation: " << e.axiom << " at " << e.witness << "\n";
    return kExitInvalidInput;
  }
}

int cmd_decompose(const Options& opt, const std::string& module_name) {
  auto h = resolve_algebra(opt);
  auto corpus = standard_corpus(h, opt.seed);
  auto m = lookup_module(corpus, module_name);
  auto dec = decompose(m, opt.seed);
  json report;
  report["algebra"] = h->name;
  report["module"] = m->name;
  report["seed"] = opt.seed;
  json parts = json::array();
  for (const auto& s : dec.summands) {
    auto rep = abs_indec_report(s);
    parts.push_back({{"name", s->name},
                     {"dim", s->dim},
                     {"dim_end", rep.dim_end},
                     {"dim_rad", rep.dim_rad},
                     {"abs_indec", rep.is_abs_indec}});
  }
  report["summands"] = parts;
  std::cout << report.dump() << "\n";
  if (opt.pretty) {
    std::cerr << m->name << " = ";
    for (std::size_t i = 0; i < dec.summands.size(); ++i)
      std::cerr << (i ? " + " : "") << dec.summands[i]->name << " (dim "
                << dec.summands[i]->dim << ")";
    std::cerr << "\n";
  }
  return kExitOk;
}

int cmd_trace(const Options& opt, bool auto_cover,
              const std::vector<std::string>& tuple_names,
              const std::string& module_name, const std::string& expr,
              bool basis, const std::string& check) {
  auto h = resolve_algebra(opt);
  auto corpus = standard_corpus(h, opt.seed);
  TraceTuple tuple;
  if (auto_cover || tuple_names.empty()) {
    tuple = projective_trace_tuple(h, opt.seed);
  } else {
    if (tuple_names.size() != 3)
      throw SchemaError("--tuple wants: P alpha beta (registry names)");
    tuple = make_trace_tuple(lookup_module(corpus, tuple_names[0]),
                             lookup_module(corpus, tuple_names[1]),
                             lookup_module(corpus, tuple_names[2]));
  }
  auto v = lookup_module(corpus, module_name);
  auto witness = ideal_member(tuple, v);
  json report;
  report["algebra"] = h->name;
  report["tuple"] = tuple_to_json(tuple);
  report["module"] = v->name;
  report["seed"] = opt.seed;
  report["in_I_alpha"] = witness.in_I_alpha();
  report["in_I_beta"] = witness.in_I_beta();
  if (!witness.in_ideal()) {
    report["error"] = "NotInIdeal";
    std::cout << report.dump() << "\n";
    std::cerr << "module '" << v->name << "' is not in the ideal of ("
              << tuple.P->name << "," << tuple.alpha->name << ","
              << tuple.beta->name << ")\n";
    return kExitPrecondition;
  }

  auto env = make_env(corpus, &tuple);
  auto av = tensor(tuple.alpha, v);
  auto bv = tensor(tuple.beta, v);
  if (basis) {
    auto basis_homs = hom_space(av, bv);
    json vals = json::array();
    bool all_checks_ok = true;
    for (const auto& f : basis_homs) {
      auto rep = mtrace_eval(tuple, witness, f);
      vals.push_back(scalar_to_json(rep.value));
      for (const auto& [k, okay] : rep.checks) all_checks_ok &= okay;
    }
    report["basis_dim"] = basis_homs.size();
    report["basis_values"] = vals;
    report["checks_ok"] = all_checks_ok;
  } else if (!expr.empty()) {
    Morphism f = dsl::eval_str(expr, env, h);
    if (f.mat.rows() != bv->dim || f.mat.cols() != av->dim)
      throw ShapeMismatch("--expr must evaluate to alpha(x)V -> beta(x)V");
    auto rep = mtrace_eval(tuple, witness,
                           Morphism{av, bv, f.mat});
    report["expr"] = expr;
    report["value"] = scalar_to_json(rep.value);
    report["via_s"] = scalar_to_json(rep.via_s);
    report["via_t"] = scalar_to_json(rep.via_t);
    json checks;
    for (const auto& [k, okay] : rep.checks) checks[k] = okay;
    report["checks"] = checks;
  } else if (check.empty()) {
    throw SchemaError("pass --basis, --expr, or --check");
  }

  int code = kExitOk;
  if (!check.empty()) {
    auto results = run_suite(corpus, check == "all" ? "mtrace" : check,
                             opt.seed, 10);
    report["checks_suite"] = results_to_json(results);
    for (const auto& r : results)
      if (!r.pass) code = kExitCheckFailed;
    if (opt.pretty) print_results_table(results);
  }
  std::cout << report.dump() << "\n";
  return code;
}

int cmd_check(const Options& opt, const std::string& suite, std::size_t n) {
  auto h = resolve_algebra(opt);
  auto corpus = standard_corpus(h, opt.seed);
  std::vector<CheckResult> results;
  try {
    results = run_suite(corpus, suite, opt.seed, n);
  } catch (const AxiomViolation& e) {
    results.push_back({"suite", false, e.what()});
  }
  json report;
  report["algebra"] = h->name;
  report["suite"] = suite;
  report["seed"] = opt.seed;
  report["n"] = n;
  report["results"] = results_to_json(results);
  bool all = true;
  for (const auto& r : results) all &= r.pass;
  report["pass"] = all;
  std::cout << report.dump() << "\n";
  if (opt.pretty) print_results_table(results);
  return all ? kExitOk : kExitCheckFailed;
}

int cmd_eval(const Options& opt, const std::string& expr) {
  auto h = resolve_algebra(opt);
  auto corpus = standard_corpus(h, opt.seed);
  TraceTuple tuple = projective_trace_tuple(h, opt.seed);
  auto env = make_env(corpus, &tuple);
  auto ast = dsl::parse_morphism(expr);
  auto ty = dsl::typecheck(ast, env);
  Morphism m = dsl::eval(ast, env, h);
  json report;
  report["algebra"] = h->name;
  report["expr"] = dsl::print(ast);
  report["dom"] = dsl::to_string(ty.dom);
  report["cod"] = dsl::to_string(ty.cod);
  report["rows"] = m.mat.rows();
  report["cols"] = m.mat.cols();
  report["matrix"] = matrix_to_json(m.mat);
  std::cout << report.dump() << "\n";
  if (opt.pretty)
    std::cerr << dsl::print(ast) << " : " << dsl::to_string(ty.dom) << " -> "
              << dsl::to_string(ty.cod) << "\n" << m.mat.str() << "\n";
  return kExitOk;
}

int cmd_examples(const Options& opt) {
  json report;
  json builtins = json::array();
  builtins.push_back({{"name", "sweedler"},
                      {"dim", 4},
                      {"field", "Q"},
                      {"modules", {"triv", "sigma", "P0", "P1", "reg",
                                   "alpha"}}});
  builtins.push_back({{"name", "taft n"},
                      {"dim", "n^2"},
                      {"field", "Q(zeta_n)"},
                      {"modules", {"triv", "P0", "...", "reg", "alpha"}}});
  builtins.push_back({{"name", "group_z n"},
                      {"dim", "n"},
                      {"field", "Q (n <= 2) or Q(zeta_n)"},
                      {"modules", {"triv", "P0", "...", "reg", "alpha"}}});
  report["builtins"] = builtins;
  if (!opt.builtin.empty() || !opt.path.empty()) {
    auto h = resolve_algebra(opt);
    auto corpus = standard_corpus(h, opt.seed);
    json regs = json::array();
    for (const auto& [n, m] : corpus.registry)
      regs.push_back({{"name", n}, {"dim", m->dim}});
    report["algebra"] = h->name;
    report["registry"] = regs;
    report["document"] = json::parse(hopf_to_json(*h));
  }
  std::cout << report.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modified traces on module categories of pivotal Hopf algebras"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env_seed = std::getenv("MTRACE_SEED"))
    opt.seed = std::stoul(env_seed);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--builtin", opt.builtin,
                    "builtin algebra: sweedler | taft N | group_z N")
        ->expected(1, 2);
    cmd->add_option("path", opt.path, "Hopf algebra JSON document");
    cmd->add_option("--seed", opt.seed, "random seed (default MTRACE_SEED or 1)");
    cmd->add_flag("--pretty", opt.pretty, "human-readable tables on stderr");
    cmd->add_option("--sabotage", opt.sabotage,
                    "deliberately corrupt a structure (target: pivot)");
  };

  auto* validate = app.add_subcommand("validate", "load and validate an algebra");
  add_common(validate);

  auto* decomp = app.add_subcommand("decompose", "indecomposable summands");
  add_common(decomp);
  std::string module_name = "reg";
  decomp->add_option("--module", module_name, "registry module name");

  auto* trace = app.add_subcommand("trace", "evaluate the modified trace");
  add_common(trace);
  bool auto_cover = false;
  std::vector<std::string> tuple_names;
  std::string trace_module = "P0", expr, check_suite;
  bool basis = false;
  trace->add_flag("--auto-proj-cover", auto_cover,
                  "tuple from the projective cover of the unit");
  trace->add_option("--tuple", tuple_names,
                    "tuple as three registry names: P alpha beta")
      ->expected(3);
  trace->add_option("--module", trace_module, "the object V");
  trace->add_option("--expr", expr, "morphism expression alpha(x)V -> beta(x)V");
  trace->add_flag("--basis", basis, "trace of every hom-space basis element");
  trace->add_option("--check", check_suite, "also run a suite (all|mtrace)");

  auto* check = app.add_subcommand("check", "run executable invariant suites");
  add_common(check);
  std::string suite = "all";
  std::size_t n = 25;
  check->add_option("--suite", suite, "pivotal | mtrace | cy | all");
  check->add_option("--n", n, "samples per randomized invariant");

  auto* eval = app.add_subcommand("eval", "evaluate an expression to a matrix");
  add_common(eval);
  std::string eval_expr;
  eval->add_option("--expr", eval_expr, "morphism expression")->required();

  auto* examples = app.add_subcommand("examples", "builtins and registry");
  add_common(examples);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(opt);
    if (decomp->parsed()) return cmd_decompose(opt, module_name);
    if (trace->parsed())
      return cmd_trace(opt, auto_cover, tuple_names, trace_module, expr, basis,
                       check_suite);
    if (check->parsed()) return cmd_check(opt, suite, n);
    if (eval->parsed()) return cmd_eval(opt, eval_expr);
    if (examples->parsed()) return cmd_examples(opt);
  } catch (const NotInIdeal& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const HomNotLine& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NotAbsIndec& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NotAbsIrred& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const UnsupportedCharacteristic& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NotSplit& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const AxiomViolation& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
