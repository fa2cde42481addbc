#include "budgetagg/satgen.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <memory>
#include <sstream>
#include <unordered_set>

#include "budgetagg/axioms.hpp"
#include "budgetagg/errors.hpp"

namespace budgetagg {

std::vector<IntegralProfile> enumerate_canonical_profiles(const Instance& inst) {
  const auto all = enumerate_allocations(inst.m(), inst.b());
  std::vector<IntegralProfile> out;
  std::vector<std::size_t> idx(inst.n(), 0);
  while (true) {
    std::vector<IntegralAllocation> votes;
    votes.reserve(idx.size());
    for (auto k : idx) votes.push_back(all[k]);
    out.emplace_back(inst, std::move(votes));
    // next non-decreasing index tuple
    int pos = inst.n() - 1;
    while (pos >= 0 && idx[pos] + 1 == all.size()) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int q = pos + 1; q < inst.n(); ++q) idx[q] = idx[pos];
  }
  return out;
}

VarMap::VarMap(std::vector<IntegralProfile> profiles,
               std::vector<std::vector<IntegralAllocation>> domains)
    : profiles_(std::move(profiles)), domains_(std::move(domains)) {
  if (profiles_.size() != domains_.size()) throw InvalidInput("one domain per profile required");
  offsets_.reserve(profiles_.size());
  for (std::size_t k = 0; k < profiles_.size(); ++k) {
    offsets_.push_back(total_);
    total_ += static_cast<int>(domains_[k].size());
    lookup_.emplace(profiles_[k], k);
  }
}

std::optional<std::size_t> VarMap::profile_index(const IntegralProfile& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int VarMap::id(const IntegralProfile& p, const IntegralAllocation& a) const {
  const auto k = profile_index(p);
  if (!k) return 0;
  const auto& dom = domains_[*k];
  auto it = std::lower_bound(dom.begin(), dom.end(), a);
  if (it == dom.end() || *it != a) return 0;
  return offsets_[*k] + static_cast<int>(it - dom.begin()) + 1;
}

std::pair<const IntegralProfile&, const IntegralAllocation&> VarMap::entry(int id) const {
  if (id < 1 || id > total_) throw InvalidInput("variable " + std::to_string(id) + " out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), id - 1);
  const auto k = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  return {profiles_[k], domains_[k][id - 1 - offsets_[k]]};
}

namespace {

IntegralProfile key_of(const IntegralProfile& p, const SatAxioms& axioms) {
  return axioms.anonymous ? canonicalize(p) : p;
}

std::vector<IntegralProfile> profile_space(const Instance& inst, const SatAxioms& axioms) {
  if (axioms.anonymous) return enumerate_canonical_profiles(inst);
  std::vector<IntegralProfile> out;
  for_each_profile(inst, [&](const IntegralProfile& p) { out.push_back(p); });
  return out;
}

// Vote positions whose deviations are distinct up to the profile key.
std::vector<std::size_t> deviating_positions(const IntegralProfile& p, const SatAxioms& axioms) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (axioms.anonymous && i > 0 && p.vote(i) == p.vote(i - 1)) continue;
    out.push_back(i);
  }
  return out;
}

}  // namespace

Encoding encode(const Instance& inst, SatAxioms axioms) {
  auto profiles = profile_space(inst, axioms);
  const auto all = enumerate_allocations(inst.m(), inst.b());
  std::vector<std::vector<IntegralAllocation>> domains;
  domains.reserve(profiles.size());
  for (const auto& p : profiles) domains.push_back(axioms.jr ? jr_outcomes(p) : all);

  Encoding enc{CnfInstance{}, VarMap(std::move(profiles), std::move(domains)), axioms, inst};
  auto& cnf = enc.cnf;
  const auto& vars = enc.vars;
  cnf.num_vars = vars.size();

  const auto& ps = vars.profiles();
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const int first = vars.first_id(k);
    const int count = static_cast<int>(vars.domain(k).size());
    std::vector<int> alo;
    for (int v = 0; v < count; ++v) alo.push_back(first + v);
    if (alo.empty()) ++cnf.stats.empty_domains;
    cnf.clauses.push_back(std::move(alo));
    ++cnf.stats.at_least_one;
  }
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const int first = vars.first_id(k);
    const int count = static_cast<int>(vars.domain(k).size());
    for (int x = 0; x < count; ++x) {
      for (int y = x + 1; y < count; ++y) {
        cnf.clauses.push_back({-(first + x), -(first + y)});
        ++cnf.stats.at_most_one;
      }
    }
  }
  if (!axioms.truthful) return enc;

  std::unordered_set<std::uint64_t> seen;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const auto& p = ps[k];
    const auto& dom = vars.domain(k);
    const int first = vars.first_id(k);
    for (auto i : deviating_positions(p, axioms)) {
      const auto& truth = p.vote(i);
      for (const auto& lie : all) {
        if (lie == truth) continue;
        const auto k2 = *vars.profile_index(key_of(p.with_vote(i, lie), axioms));
        const auto& dom2 = vars.domain(k2);
        const int first2 = vars.first_id(k2);
        std::vector<int> far(dom2.size());
        for (std::size_t y = 0; y < dom2.size(); ++y) far[y] = l1_distance(truth, dom2[y]);
        for (std::size_t x = 0; x < dom.size(); ++x) {
          const int honest = l1_distance(truth, dom[x]);
          for (std::size_t y = 0; y < dom2.size(); ++y) {
            if (honest <= far[y]) continue;
            int u = first + static_cast<int>(x);
            int v = first2 + static_cast<int>(y);
            if (u > v) std::swap(u, v);
            const auto pair = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
            if (!seen.insert(pair).second) continue;
            cnf.clauses.push_back({-(first + static_cast<int>(x)), -(first2 + static_cast<int>(y))});
            ++cnf.stats.truthfulness;
          }
        }
      }
    }
  }
  return enc;
}

std::string emit_dimacs(const CnfInstance& cnf, const VarMap* comments) {
  std::string out;
  std::size_t literals = 0;
  for (const auto& c : cnf.clauses) literals += c.size() + 1;
  out.reserve(literals * 7 + 64);
  if (comments) {
    for (int v = 1; v <= comments->size(); ++v) {
      const auto [p, a] = comments->entry(v);
      out += "c var " + std::to_string(v) + " = " + to_compact_string(p) + "|" +
             to_compact_string(a) + "\n";
    }
  }
  out += "p cnf " + std::to_string(cnf.num_vars) + " " + std::to_string(cnf.clauses.size()) + "\n";
  std::array<char, 16> buf{};
  for (const auto& c : cnf.clauses) {
    for (int lit : c) {
      auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), lit);
      out.append(buf.data(), end);
      out.push_back(' ');
    }
    out += "0\n";
  }
  return out;
}

SolverResult parse_solver_output(std::string_view text) {
  SolverResult result;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("s ", 0) == 0) {
      const auto status = line.substr(2);
      if (status == "SATISFIABLE") result.verdict = SatVerdict::Satisfiable;
      else if (status == "UNSATISFIABLE") result.verdict = SatVerdict::Unsatisfiable;
      else result.verdict = SatVerdict::Unknown;
    } else if (line.rfind("v", 0) == 0) {
      std::istringstream lits(line.substr(1));
      int lit = 0;
      while (lits >> lit) {
        if (lit != 0) result.model.push_back(lit);
      }
    }
  }
  return result;
}

SolverResult run_solver(const std::string& command, const std::string& cnf_path) {
  if (command.empty()) throw InvalidInput("no solver command given");
  std::string quoted = "'";
  for (char c : cnf_path) {
    if (c == '\'') quoted += "'\\''";
    else quoted.push_back(c);
  }
  quoted += "'";
  const std::string full = command + " " + quoted;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(full.c_str(), "r"), pclose);
  if (!pipe) throw std::runtime_error("could not start solver: " + command);
  std::string output;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) output.append(buf.data(), got);
  return parse_solver_output(output);
}

MechanismTable decode_model(const std::vector<int>& model, const VarMap& vars) {
  std::vector<bool> truth(vars.size() + 1, false);
  for (int lit : model) {
    if (lit > 0 && lit <= vars.size()) truth[lit] = true;
  }
  MechanismTable table;
  for (std::size_t k = 0; k < vars.profiles().size(); ++k) {
    const int first = vars.first_id(k);
    const auto& dom = vars.domain(k);
    std::optional<std::size_t> chosen;
    for (std::size_t x = 0; x < dom.size(); ++x) {
      if (!truth[first + x]) continue;
      if (chosen) {
        throw InconsistentModel("profile " + to_compact_string(vars.profiles()[k]) +
                                " has several allocations set");
      }
      chosen = x;
    }
    if (!chosen) {
      throw InconsistentModel("profile " + to_compact_string(vars.profiles()[k]) +
                              " has no allocation set");
    }
    table.emplace(vars.profiles()[k], dom[*chosen]);
  }
  return table;
}

TableReport verify_table(const MechanismTable& table, const Instance& inst, SatAxioms axioms) {
  TableReport report;
  const auto all = enumerate_allocations(inst.m(), inst.b());
  for (const auto& p : profile_space(inst, axioms)) {
    if (!table.count(p)) report.missing.push_back(p);
  }
  for (const auto& [p, a] : table) {
    if (axioms.jr && check_jr(p, a)) report.jr_failures.push_back(p);
  }
  if (!axioms.truthful) return report;
  for (const auto& [p, honest] : table) {
    for (auto i : deviating_positions(p, axioms)) {
      const auto& truth = p.vote(i);
      const int before = l1_distance(truth, honest);
      for (const auto& lie : all) {
        if (lie == truth) continue;
        auto it = table.find(key_of(p.with_vote(i, lie), axioms));
        if (it == table.end()) continue;
        const int after = l1_distance(truth, it->second);
        if (after < before) {
          report.manipulation =
              ManipulationWitness{p, static_cast<int>(i), lie, honest, it->second, Rat(before - after)};
          return report;
        }
      }
    }
  }
  return report;
}

std::vector<int> table_to_assignment(const MechanismTable& table, const VarMap& vars) {
  std::vector<int> out;
  out.reserve(vars.size());
  for (int v = 1; v <= vars.size(); ++v) {
    const auto [p, a] = vars.entry(v);
    auto it = table.find(p);
    out.push_back(it != table.end() && it->second == a ? v : -v);
  }
  return out;
}

bool satisfies(const CnfInstance& cnf, const std::vector<int>& assignment) {
  std::vector<signed char> value(cnf.num_vars + 1, 0);
  for (int lit : assignment) {
    const int v = lit > 0 ? lit : -lit;
    if (v >= 1 && v <= cnf.num_vars) value[v] = lit > 0 ? 1 : -1;
  }
  for (const auto& c : cnf.clauses) {
    bool sat = false;
    for (int lit : c) {
      const int v = lit > 0 ? lit : -lit;
      if ((lit > 0 && value[v] == 1) || (lit < 0 && value[v] == -1)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace budgetagg
