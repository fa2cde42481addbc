#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "budgetagg/search.hpp"

namespace budgetagg {

// Which axioms the formula asks for. Without anonymity every ordered profile
// gets its own variables; without JR each profile may take any allocation.
struct SatAxioms {
  bool truthful = true;
  bool jr = true;
  bool anonymous = true;
};

// One representative (votes sorted ascending) per permutation orbit, sorted.
std::vector<IntegralProfile> enumerate_canonical_profiles(const Instance& inst);

// Variables x_{P,a}: ids 1..V, grouped by profile in profile order, then by
// allocation ascending.
class VarMap {
 public:
  VarMap(std::vector<IntegralProfile> profiles, std::vector<std::vector<IntegralAllocation>> domains);

  int size() const { return total_; }
  const std::vector<IntegralProfile>& profiles() const { return profiles_; }
  const std::vector<IntegralAllocation>& domain(std::size_t profile_index) const {
    return domains_[profile_index];
  }
  int first_id(std::size_t profile_index) const { return offsets_[profile_index] + 1; }
  std::optional<std::size_t> profile_index(const IntegralProfile& p) const;

  // 0 when (p, a) has no variable.
  int id(const IntegralProfile& p, const IntegralAllocation& a) const;
  std::pair<const IntegralProfile&, const IntegralAllocation&> entry(int id) const;

 private:
  std::vector<IntegralProfile> profiles_;
  std::vector<std::vector<IntegralAllocation>> domains_;
  std::vector<int> offsets_;
  std::map<IntegralProfile, std::size_t> lookup_;
  int total_ = 0;
};

struct CnfStats {
  std::int64_t at_least_one = 0;
  std::int64_t at_most_one = 0;
  std::int64_t truthfulness = 0;
  std::int64_t empty_domains = 0;  // profiles with no admissible allocation
};

struct CnfInstance {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  CnfStats stats;
};

struct Encoding {
  CnfInstance cnf;
  VarMap vars;
  SatAxioms axioms;
  Instance instance;
};

// "There is a mechanism for `inst` with the selected axioms" as CNF.
Encoding encode(const Instance& inst, SatAxioms axioms = {});

// DIMACS text. With a VarMap, "c var <id> = <profile>|<allocation>" lines precede the header.
std::string emit_dimacs(const CnfInstance& cnf, const VarMap* comments = nullptr);

enum class SatVerdict { Satisfiable, Unsatisfiable, Unknown };

struct SolverResult {
  SatVerdict verdict = SatVerdict::Unknown;
  std::vector<int> model;  // literals from "v" lines, terminating 0 dropped
};

// SAT-competition output: "s SATISFIABLE" / "s UNSATISFIABLE" plus "v" lines.
SolverResult parse_solver_output(std::string_view text);

// Runs `command <cnf_path>` and parses its standard output.
SolverResult run_solver(const std::string& command, const std::string& cnf_path);

// Profile -> chosen allocation, keyed by canonical profiles (or all ordered
// profiles when the encoding dropped anonymity).
using MechanismTable = std::map<IntegralProfile, IntegralAllocation>;

// Throws InconsistentModel unless each profile has exactly one true variable.
MechanismTable decode_model(const std::vector<int>& model, const VarMap& vars);

struct TableReport {
  std::vector<IntegralProfile> missing;  // profiles without an entry
  std::vector<IntegralProfile> jr_failures;
  std::optional<ManipulationWitness> manipulation;
  bool ok() const { return missing.empty() && jr_failures.empty() && !manipulation; }
};

// Re-checks a table from scratch: totality, JR of every entry, truthfulness of
// every single-voter deviation (deviant profiles looked up after canonicalizing).
TableReport verify_table(const MechanismTable& table, const Instance& inst, SatAxioms axioms = {});

// Assignment of all V variables (positive or negative literals) induced by a table.
std::vector<int> table_to_assignment(const MechanismTable& table, const VarMap& vars);

bool satisfies(const CnfInstance& cnf, const std::vector<int>& assignment);

}  // namespace budgetagg
