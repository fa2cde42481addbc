#include "budgetagg_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "budgetagg/axioms.hpp"
#include "budgetagg/errors.hpp"
#include "budgetagg/integral_phantoms.hpp"
#include "budgetagg/json_io.hpp"
#include "budgetagg/phantom_system.hpp"
#include "budgetagg/satgen.hpp"
#include "budgetagg/search.hpp"
#include "budgetagg_cli/mechanism_ids.hpp"
#include "budgetagg_cli/repro.hpp"

namespace budgetagg::cli {

namespace {

using nlohmann::json;

// Raised for problems with the input data (exit 1).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError(path + ": " + e.what());
  }
}

json parse_inline_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(what + ": " + e.what());
  }
}

// 1-based voter list
json voters_json(const std::vector<int>& voters) {
  json out = json::array();
  for (int v : voters) out.push_back(v + 1);
  return out;
}

json witness_json(const ManipulationWitness& w) {
  return {{"profile", to_json(w.profile)},
          {"voter", w.voter + 1},
          {"misreport", to_json(w.misreport)},
          {"honest_output", to_json(w.honest_output)},
          {"deviant_output", to_json(w.deviant_output)},
          {"gain", rat_to_json(w.gain)}};
}

void print(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

// --- aggregate -----------------------------------------------------------------

struct AggregateArgs {
  std::string mechanism;
  std::string profile;
};

int do_aggregate(const AggregateArgs& args, std::ostream& out) {
  const auto doc = read_json_file(args.profile);
  json result{{"mechanism", args.mechanism}};
  if (is_fractional_id(args.mechanism)) {
    const auto any = profile_from_json(doc);
    const auto p = std::holds_alternative<FractionalProfile>(any)
                       ? std::get<FractionalProfile>(any)
                       : to_fractional(std::get<IntegralProfile>(any));
    const auto& inst = p.instance();
    const auto system = args.mechanism == "im" ? independent_markets(inst.n(), inst.b())
                                               : utilitarian(inst.n(), inst.b());
    const auto e = evaluate_fractional(p, system);
    result["allocation"] = to_json(e.medians);
    result["t_star"] = rat_to_json(e.t_star);
  } else {
    const auto mech = integral_mechanism(args.mechanism);
    const auto p = integral_profile_from_json(doc);
    result["allocation"] = to_json(mech(p));
  }
  print(out, result);
  return kOk;
}

// --- apportion -----------------------------------------------------------------

struct ApportionArgs {
  std::string method;
  std::string allocation;
  std::string tiebreak = "index";
};

int do_apportion(const ApportionArgs& args, std::ostream& out) {
  const auto method = apportionment_method(args.method);
  const auto policy = tie_break_policy(args.tiebreak);
  const auto a = fractional_allocation_from_json(parse_inline_json(args.allocation, "--allocation"));
  const auto outcome = method(a);
  const auto tb = policy == TieBreakPolicy::ByAlternativeIndex ? TieBreak::by_alternative_index()
                  : policy == TieBreakPolicy::Lexicographic   ? TieBreak::lexicographic()
                                                              : TieBreak::by_larger_input(a);
  json members = json::array();
  for (const auto& x : outcome) members.push_back(to_json(x));
  print(out, {{"method", args.method},
              {"outcome", members},
              {"tiebreak", args.tiebreak},
              {"selected", to_json(tb.select(outcome))}});
  return kOk;
}

// --- check ---------------------------------------------------------------------

struct CheckArgs {
  std::string axiom;
  std::string profile;
  std::string allocation;
};

int do_check(const CheckArgs& args, std::ostream& out) {
  static const std::vector<std::string> known{"jr", "ejr-plus", "range-respect", "sm-quota"};
  if (std::find(known.begin(), known.end(), args.axiom) == known.end()) {
    throw UnknownId("unknown axiom '" + args.axiom + "'");
  }
  const auto p = integral_profile_from_json(read_json_file(args.profile));
  const auto a = integral_allocation_from_json(parse_inline_json(args.allocation, "--allocation"));
  json result{{"axiom", args.axiom}, {"allocation", to_json(a)}};
  bool satisfied = true;
  if (args.axiom == "jr") {
    if (auto v = check_jr(p, a)) {
      satisfied = false;
      result["witness"] = {{"alternative", v->alternative + 1}, {"voters", voters_json(v->voters)}};
    }
  } else if (args.axiom == "ejr-plus") {
    if (auto v = check_ejr_plus(p, a)) {
      satisfied = false;
      result["witness"] = {{"alternative", v->alternative + 1},
                           {"level", v->level},
                           {"voters", voters_json(v->voters)}};
    }
  } else if (args.axiom == "range-respect") {
    if (auto j = check_range_respect(p, a)) {
      satisfied = false;
      result["witness"] = {{"alternative", *j + 1}};
    }
  } else {
    const auto r = check_sm_quota_prop(p, a);
    result["applicable"] = r.applicable;
    if (r.violation) {
      satisfied = false;
      result["witness"] = {{"alternative", *r.violation + 1}};
    }
  }
  result["satisfied"] = satisfied;
  print(out, result);
  return satisfied ? kOk : kViolated;
}

// --- search --------------------------------------------------------------------

struct SearchArgs {
  std::string property;
  std::string mechanism;
  int n = 0;
  int m = 0;
  int b = 0;
  std::string profile;
  std::int64_t max_evals = kDefaultMaxEvals;
};

int do_search(const SearchArgs& args, std::ostream& out) {
  static const std::vector<std::string> known{"manipulation", "dictator", "onto", "anonymity"};
  if (std::find(known.begin(), known.end(), args.property) == known.end()) {
    throw UnknownId("unknown property '" + args.property + "'");
  }
  const auto mech = integral_mechanism(args.mechanism);
  json result{{"property", args.property}, {"mechanism", args.mechanism}};

  if (!args.profile.empty()) {
    if (args.property != "manipulation") throw UnknownId("--profile only applies to manipulation");
    const auto p = integral_profile_from_json(read_json_file(args.profile));
    const auto w = find_manipulation_at(mech, p);
    result["found"] = w.has_value();
    if (w) result["witness"] = witness_json(*w);
    print(out, result);
    return w ? kViolated : kOk;
  }
  if (args.n <= 0 || args.m <= 0 || args.b <= 0) throw UnknownId("--n, --m and --b are required");
  const Instance inst(args.n, args.m, args.b);
  result["instance"] = {{"n", inst.n()}, {"m", inst.m()}, {"b", inst.b()}};

  bool found = false;
  if (args.property == "manipulation") {
    if (auto w = find_manipulation(mech, inst, args.max_evals)) {
      found = true;
      result["witness"] = witness_json(*w);
    }
  } else if (args.property == "dictator") {
    if (auto i = find_dictator(mech, inst, args.max_evals)) {
      found = true;
      result["witness"] = {{"dictator", *i + 1}};
    }
  } else if (args.property == "onto") {
    if (auto missing = check_onto(mech, inst, args.max_evals)) {
      found = true;
      result["witness"] = {{"missing", to_json(*missing)}};
    }
  } else {
    if (auto pair = check_anonymous(mech, inst, args.max_evals)) {
      found = true;
      result["witness"] = {{"profile", to_json(pair->first)}, {"permuted", to_json(pair->second)}};
    }
  }
  result["found"] = found;
  print(out, result);
  return found ? kViolated : kOk;
}

// --- encode-sat ----------------------------------------------------------------

struct EncodeArgs {
  int n = 0;
  int m = 0;
  int b = 0;
  std::string axioms = "truthful,jr,anonymous";
  std::string out;
  bool comments = false;
  bool solve = false;
  std::string solver_cmd;
};

SatAxioms parse_axioms(const std::string& list) {
  SatAxioms ax{false, false, false};
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "truthful") ax.truthful = true;
    else if (item == "jr") ax.jr = true;
    else if (item == "anonymous") ax.anonymous = true;
    else if (!item.empty()) throw UnknownId("unknown axiom '" + item + "' in --axioms");
  }
  return ax;
}

int do_encode(const EncodeArgs& args, std::ostream& out) {
  const auto axioms = parse_axioms(args.axioms);
  if (args.solve && args.solver_cmd.empty()) throw UnknownId("--solve needs --solver-cmd");
  const Instance inst(args.n, args.m, args.b);
  const auto enc = encode(inst, axioms);
  {
    std::ofstream file(args.out, std::ios::binary);
    if (!file) throw DataError("cannot write " + args.out);
    file << emit_dimacs(enc.cnf, args.comments ? &enc.vars : nullptr);
  }
  json result{{"instance", {{"n", inst.n()}, {"m", inst.m()}, {"b", inst.b()}}},
              {"axioms", args.axioms},
              {"profiles", enc.vars.profiles().size()},
              {"variables", enc.cnf.num_vars},
              {"clauses", enc.cnf.clauses.size()},
              {"stats",
               {{"at_least_one", enc.cnf.stats.at_least_one},
                {"at_most_one", enc.cnf.stats.at_most_one},
                {"truthfulness", enc.cnf.stats.truthfulness},
                {"empty_domains", enc.cnf.stats.empty_domains}}},
              {"out", args.out}};
  int code = kOk;
  if (args.solve) {
    const auto solved = run_solver(args.solver_cmd, args.out);
    switch (solved.verdict) {
      case SatVerdict::Unsatisfiable:
        result["verdict"] = "UNSATISFIABLE";
        break;
      case SatVerdict::Unknown:
        result["verdict"] = "UNKNOWN";
        code = kDataError;
        break;
      case SatVerdict::Satisfiable: {
        result["verdict"] = "SATISFIABLE";
        const auto table = decode_model(solved.model, enc.vars);
        const auto report = verify_table(table, inst, axioms);
        result["table_verified"] = report.ok();
        json rows = json::array();
        for (const auto& [p, a] : table) {
          rows.push_back({{"profile", to_compact_string(p)}, {"allocation", to_compact_string(a)}});
        }
        result["table"] = rows;
        if (report.manipulation) result["witness"] = witness_json(*report.manipulation);
        if (!report.ok()) code = kViolated;
        break;
      }
    }
  }
  print(out, result);
  return code;
}

// --- repro ---------------------------------------------------------------------

int do_repro(const std::vector<std::string>& cases, bool all, std::ostream& out) {
  std::vector<std::string> names = all ? repro_case_names() : cases;
  if (names.empty()) throw UnknownId("repro needs --case NAME or --all");
  for (const auto& name : names) {
    const auto& known = repro_case_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw UnknownId("unknown repro case '" + name + "'");
    }
  }
  int failed = 0;
  for (const auto& name : names) {
    const auto r = run_repro_case(name);
    out << (r.passed ? "PASS " : "FAIL ") << r.name << "\n";
    for (const auto& line : r.lines) out << "  " << line << "\n";
    failed += !r.passed;
  }
  out << (names.size() - failed) << "/" << names.size() << " cases passed\n";
  return failed ? kViolated : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete budget aggregation: mechanisms, axiom checks, SAT encodings"};
  app.name("budgetagg");
  app.require_subcommand(1);

  AggregateArgs agg;
  auto* agg_cmd = app.add_subcommand("aggregate", "Run a mechanism on a profile file");
  agg_cmd->add_option("--mechanism", agg.mechanism,
                      "floor-im | floor-util | ceiling-im | im | utilitarian | constant | "
                      "first-vote | compose:<im|utilitarian>+<hamilton|quota|divisor:D>+"
                      "<index|larger-input|lex>")
      ->required();
  agg_cmd->add_option("--profile", agg.profile, "Profile JSON file")->required();

  ApportionArgs app_args;
  auto* app_cmd = app.add_subcommand("apportion", "Round a fractional allocation");
  app_cmd->add_option("--method", app_args.method, "hamilton | quota | divisor:D")->required();
  app_cmd->add_option("--allocation", app_args.allocation, "JSON array, e.g. [1,\"1/2\",\"1/2\"]")
      ->required();
  app_cmd->add_option("--tiebreak", app_args.tiebreak, "index | larger-input | lex")
      ->capture_default_str();

  CheckArgs chk;
  auto* chk_cmd = app.add_subcommand("check", "Check an axiom for a profile and allocation");
  chk_cmd->add_option("--axiom", chk.axiom, "jr | ejr-plus | range-respect | sm-quota")->required();
  chk_cmd->add_option("--profile", chk.profile, "Profile JSON file")->required();
  chk_cmd->add_option("--allocation", chk.allocation, "JSON array of integers")->required();

  SearchArgs srch;
  auto* srch_cmd = app.add_subcommand("search", "Exhaustive property search for a mechanism");
  srch_cmd->add_option("--property", srch.property, "manipulation | dictator | onto | anonymity")
      ->required();
  srch_cmd->add_option("--mechanism", srch.mechanism, "Integral mechanism id")->required();
  srch_cmd->add_option("--n", srch.n, "Voters");
  srch_cmd->add_option("--m", srch.m, "Alternatives");
  srch_cmd->add_option("--b", srch.b, "Budget");
  srch_cmd->add_option("--profile", srch.profile,
                       "Restrict a manipulation search to deviations from this profile");
  srch_cmd->add_option("--max-evals", srch.max_evals, "Enumeration budget")->capture_default_str();

  EncodeArgs enc;
  auto* enc_cmd = app.add_subcommand("encode-sat", "Write the impossibility CNF in DIMACS");
  enc_cmd->add_option("--n", enc.n, "Voters")->required();
  enc_cmd->add_option("--m", enc.m, "Alternatives")->required();
  enc_cmd->add_option("--b", enc.b, "Budget")->required();
  enc_cmd->add_option("--axioms", enc.axioms, "Comma list of truthful, jr, anonymous")
      ->capture_default_str();
  enc_cmd->add_option("--out", enc.out, "DIMACS output path")->required();
  enc_cmd->add_flag("--comments", enc.comments, "Emit 'c var' comment lines");
  enc_cmd->add_flag("--solve", enc.solve, "Run the solver and decode the result");
  enc_cmd->add_option("--solver-cmd", enc.solver_cmd,
                      "Solver command; the CNF path is appended as its last argument");

  std::vector<std::string> cases;
  bool all = false;
  auto* repro_cmd = app.add_subcommand("repro", "Re-run pinned counterexamples and tables");
  repro_cmd->add_option("--case", cases, "Case name (repeatable)");
  repro_cmd->add_flag("--all", all, "Run every case");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*agg_cmd) return do_aggregate(agg, out);
    if (*app_cmd) return do_apportion(app_args, out);
    if (*chk_cmd) return do_check(chk, out);
    if (*srch_cmd) return do_search(srch, out);
    if (*enc_cmd) return do_encode(enc, out);
    if (*repro_cmd) return do_repro(cases, all, out);
  } catch (const UnknownId& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UnsupportedParameter& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
  return kUsageError;
}

}  // namespace budgetagg::cli
