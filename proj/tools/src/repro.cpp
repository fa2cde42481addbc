#include "budgetagg_cli/repro.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "budgetagg/apportionment.hpp"
#include "budgetagg/axioms.hpp"
#include "budgetagg/fractional_input.hpp"
#include "budgetagg/integral_phantoms.hpp"
#include "budgetagg/phantom_system.hpp"

namespace budgetagg::cli {

namespace {

std::string show(const FractionalAllocation& a) {
  std::string s = "(";
  for (std::size_t j = 0; j < a.size(); ++j) s += (j ? "," : "") + to_string(a[j]);
  return s + ")";
}

std::string show(const ApportionmentOutcome& out) {
  std::string s = "{";
  bool first = true;
  for (const auto& a : out) {
    s += (first ? "" : " ") + to_compact_string(a);
    first = false;
  }
  return s + "}";
}

class Report {
 public:
  explicit Report(std::string name) { r_.name = std::move(name); }

  void expect(const std::string& what, const std::string& expected, const std::string& actual) {
    const bool ok = expected == actual;
    r_.passed = r_.passed && ok;
    r_.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what + ": expected " + expected +
                       ", actual " + actual);
  }
  void expect_true(const std::string& what, bool ok) {
    expect(what, "true", ok ? "true" : "false");
  }
  void note(std::string line) { r_.lines.push_back(std::move(line)); }
  ReproResult done() { return std::move(r_); }

 private:
  ReproResult r_;
};

FractionalAllocation frac(std::initializer_list<Rat> xs) { return FractionalAllocation(std::vector<Rat>(xs)); }

IntegralProfile hamilton_profile() {
  std::vector<IntegralAllocation> votes(5, IntegralAllocation{8, 0, 0, 0, 0, 0});
  for (int j = 1; j < 6; ++j) {
    std::vector<int> v(6, 0);
    v[0] = 7;
    v[j] = 1;
    votes.emplace_back(std::move(v));
  }
  return IntegralProfile(Instance(10, 6, 8), std::move(votes));
}

ReproResult hamilton_manipulation() {
  Report r("thm1-hamilton");
  const auto p = hamilton_profile();
  const auto honest = evaluate_fractional(to_fractional(p), independent_markets(10, 8));
  const Rat e(8, 15);
  r.expect("IM output", show(frac({Rat(80, 15), e, e, e, e, e})), show(honest.medians));
  r.expect("normalization time", "1/15", to_string(honest.t_star));
  const auto rounded = hamilton(honest.medians);
  r.expect("Hamilton outcome count", "10", std::to_string(rounded.size()));
  r.expect_true("Hamilton outcomes contain 511100", rounded.count({5, 1, 1, 1, 0, 0}) == 1);

  const auto truth = p.vote(9);
  const auto lie = p.with_vote(9, {8, 0, 0, 0, 0, 0});
  const auto deviant = independent_markets_mechanism(to_fractional(lie));
  const Rat s(4, 7);
  r.expect("IM output after misreport", show(frac({Rat(40, 7), s, s, s, s, Rat(0)})), show(deviant));
  const auto chosen = TieBreak::by_alternative_index().select(rounded);
  r.expect("index tie-break picks", "511100", to_compact_string(chosen));
  const auto before = l1_disutility(truth, chosen);
  for (const auto& d : hamilton(deviant)) {
    r.expect_true("voter 10 gains with " + to_compact_string(d) + " (" + to_string(l1_disutility(truth, d)) +
                      " < " + to_string(before) + ")",
                  l1_disutility(truth, d) < before);
  }
  return r.done();
}

ReproResult quota_manipulation() {
  Report r("thm1-quota");
  const Instance inst(4, 5, 4);
  const IntegralProfile p(inst, {{3, 1, 0, 0, 0}, {3, 0, 1, 0, 0}, {3, 0, 0, 1, 0}, {3, 0, 0, 0, 1}});
  const auto lie = p.with_vote(3, {4, 0, 0, 0, 0});
  const auto honest = independent_markets_mechanism(to_fractional(p));
  const auto deviant = independent_markets_mechanism(to_fractional(lie));
  const Rat h(1, 2);
  const Rat s(4, 7);
  r.expect("IM output", show(frac({Rat(2), h, h, h, h})), show(honest));
  r.expect("IM output after misreport", show(frac({Rat(16, 7), s, s, s, Rat(0)})), show(deviant));
  const auto q1 = quota_method(honest);
  const auto q2 = quota_method(deviant);
  r.expect_true("quota outcomes " + show(q1) + " contain 21100", q1.count({2, 1, 1, 0, 0}) == 1);
  r.expect_true("quota outcomes " + show(q2) + " contain 31000", q2.count({3, 1, 0, 0, 0}) == 1);
  const auto truth = p.vote(3);
  r.expect("voter 4 disutility 21100 -> 31000", "4 -> 2",
           to_string(l1_disutility(truth, IntegralAllocation{2, 1, 1, 0, 0})) + " -> " +
               to_string(l1_disutility(truth, IntegralAllocation{3, 1, 0, 0, 0})));
  return r.done();
}

// n = m = ceil(2 + 2/delta), b = 2; voter i < n supports alternatives 1 and i+1,
// voter n votes (1,1,0,...).
IntegralProfile divisor_profile(const Rat& delta) {
  const int n = static_cast<int>(ceil_of(Rat(2) + Rat(2) / delta));
  std::vector<IntegralAllocation> votes;
  for (int i = 0; i < n; ++i) {
    std::vector<int> v(n, 0);
    v[0] = 1;
    v[i + 1 < n ? i + 1 : 1] = 1;
    votes.emplace_back(std::move(v));
  }
  return IntegralProfile(Instance(n, n, 2), std::move(votes));
}

void divisor_case(Report& r, const Rat& delta, bool tie) {
  const auto p = divisor_profile(delta);
  const int n = p.instance().n();
  std::vector<int> lie_vote(n, 0);
  lie_vote[1] = 2;
  const auto lie = p.with_vote(n - 1, IntegralAllocation(lie_vote));

  const auto honest = evaluate_fractional(to_fractional(p), independent_markets(n, 2));
  std::vector<Rat> want(n, Rat(1, n));
  want[0] = 1;
  want[1] = Rat(2, n);
  r.expect("IM output", show(FractionalAllocation(want)), show(honest.medians));
  r.expect("normalization time", to_string(Rat(1, 2 * n)), to_string(honest.t_star));

  const auto deviant = evaluate_fractional(to_fractional(lie), independent_markets(n, 2));
  std::vector<Rat> want2(n, Rat(2, 2 * n - 1));
  want2[0] = Rat(2 * (n - 1), 2 * n - 1);
  want2[1] = Rat(4, 2 * n - 1);
  r.expect("IM output after misreport", show(FractionalAllocation(want2)), show(deviant.medians));
  r.expect("normalization time after misreport", to_string(Rat(1, 2 * n - 1)),
           to_string(deviant.t_star));

  std::vector<int> two(n, 0);
  two[0] = 2;
  std::vector<int> one_one(n, 0);
  one_one[0] = one_one[1] = 1;
  ApportionmentOutcome want_honest{IntegralAllocation(two)};
  if (tie) want_honest.insert(IntegralAllocation(one_one));
  r.expect("divisor outcome", show(want_honest), show(stationary_divisor(honest.medians, delta)));
  r.expect("divisor outcome after misreport", show(ApportionmentOutcome{IntegralAllocation(one_one)}),
           show(stationary_divisor(deviant.medians, delta)));

  const auto mech = compose(independent_markets_mechanism,
                            [delta](const FractionalAllocation& a) { return stationary_divisor(a, delta); },
                            TieBreakPolicy::ByLargerInput);
  const auto truth = p.vote(n - 1);
  r.expect("voter n disutility honest -> misreport", "2 -> 0",
           to_string(l1_disutility(truth, mech(p))) + " -> " + to_string(l1_disutility(truth, mech(lie))));
}

ReproResult divisor_manipulation_tied() {
  Report r("thm1-divisor-tie");
  divisor_case(r, Rat(1), true);
  return r.done();
}

ReproResult divisor_manipulation_untied() {
  Report r("thm1-divisor");
  r.note("delta = 3/4 (2/delta not an integer), n = m = 5, b = 2");
  divisor_case(r, Rat(3, 4), false);
  return r.done();
}

ReproResult floor_util_decomposition() {
  Report r("prop1");
  const auto composed = compose(utilitarian_mechanism, hamilton, TieBreakPolicy::ByAlternativeIndex);
  for (const Instance inst : {Instance(2, 3, 3), Instance(3, 2, 3)}) {
    int total = 0;
    int agree = 0;
    std::string first_diff = "none";
    for_each_profile(inst, [&](const IntegralProfile& p) {
      ++total;
      const auto x = floor_util(p);
      const auto y = composed(p);
      if (x == y) ++agree;
      else if (first_diff == "none") first_diff = to_compact_string(p);
    });
    r.expect("FloorUtil = Hamilton(index) o Utilitarian on " + to_string(inst),
             std::to_string(total) + "/" + std::to_string(total),
             std::to_string(agree) + "/" + std::to_string(total) +
                 (agree == total ? "" : " first mismatch " + first_diff));
  }
  return r.done();
}

ReproResult ceiling_quota_failure() {
  Report r("sec4-ceiling");
  const IntegralProfile p(Instance(6, 4, 4), {{4, 0, 0, 0}, {4, 0, 0, 0}, {4, 0, 0, 0},
                                              {0, 4, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 4}});
  const Rat t(2, 3);
  r.expect("average", show(frac({Rat(2), t, t, t})), show(average(p)));
  const auto ceil_out = ceiling_im(p);
  r.expect("ceiling variant output", "1111", to_compact_string(ceil_out));
  const auto ceil_check = check_sm_quota_prop(p, ceil_out);
  r.expect("ceiling variant quota violation at alternative", "1",
           ceil_check.violation ? std::to_string(*ceil_check.violation + 1) : "none");
  const auto floor_out = floor_im(p);
  r.expect("FloorIM first amount", "2", std::to_string(floor_out[0]));
  r.expect_true("FloorIM " + to_compact_string(floor_out) + " quota-proportional",
                !check_sm_quota_prop(p, floor_out).violation);
  return r.done();
}

std::string show(const std::vector<int>& voters) {
  std::string s = "{";
  for (std::size_t i = 0; i < voters.size(); ++i) s += (i ? "," : "") + std::to_string(voters[i] + 1);
  return s + "}";
}

ReproResult ejr_plus_witnesses() {
  Report r("thm4-ejr");
  const Instance inst(3, 4, 3);
  const IntegralProfile p(inst, {{1, 2, 0, 0}, {1, 0, 2, 0}, {1, 0, 0, 2}});
  const IntegralProfile star(inst, {{0, 3, 0, 0}, {1, 0, 2, 0}, {1, 0, 0, 2}});

  int range_ok = 0;
  bool range_first_is_one = true;
  for (const auto& a : enumerate_allocations(4, 3)) {
    if (check_range_respect(p, a)) continue;
    ++range_ok;
    range_first_is_one = range_first_is_one && a[0] == 1;
  }
  r.expect_true("range-respect on P forces a_1 = 1 (" + std::to_string(range_ok) + " allocations)",
                range_ok > 0 && range_first_is_one);

  bool zero_two = true;
  bool zero_one = true;
  for (const auto& a : enumerate_allocations(4, 3)) {
    const auto all = ejr_plus_violations(star, a);
    auto has = [&](int j, std::vector<int> voters) {
      for (const auto& v : all) {
        if (v.alternative == j && v.voters == voters) return true;
      }
      return false;
    };
    if (a[1] == 0) zero_two = zero_two && has(1, {0});
    if (a[1] >= 1 && a[0] == 0) {
      if (a[2] == 1 && a[3] == 1) zero_one = zero_one && has(0, {1, 2});
      for (int j : {2, 3}) {
        if (a[j] == 0) zero_one = zero_one && has(j, {j - 1});
      }
    }
  }
  r.expect_true("a_2 = 0 violates EJR+ for alternative 2 with voters {1}", zero_two);
  r.expect_true("a_1 = 0 < a_2 violates EJR+ with the stated groups", zero_one);

  const auto v = check_ejr_plus(star, {0, 1, 1, 1});
  r.expect("EJR+ on P* with 0111", "alternative 1, level 2, voters {2,3}",
           v ? "alternative " + std::to_string(v->alternative + 1) + ", level " +
                   std::to_string(v->level) + ", voters " + show(v->voters)
             : "none");
  r.expect("voter 1 disutility for 1011", "4",
           to_string(l1_disutility(IntegralAllocation{1, 2, 0, 0}, IntegralAllocation{1, 0, 1, 1})));
  return r.done();
}

ReproResult linked_ordering() {
  Report r("table2-linked");
  const std::string want =
      "3000 2010 2100 1110 1200 0210 0300 1020 0120 0030 2001 1101 1011 0201 0111 0021 1002 0102 "
      "0012 0003";
  const auto order = linked_order(4, 3);
  std::string got;
  bool adjacent = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    got += (i ? " " : "") + to_compact_string(order[i].allocation);
    if (i >= 2 && order[i].witnesses.size() != 2) adjacent = false;
    for (int w : order[i].witnesses) {
      adjacent = adjacent && w < static_cast<int>(i) &&
                 l1_distance(order[i].allocation, order[w].allocation) == 2;
    }
  }
  r.expect("ordering", want, got);
  r.expect_true("two earlier witnesses at distance 2 from the third element on", adjacent);
  return r.done();
}

const std::map<std::string, std::function<ReproResult()>>& registry() {
  static const std::map<std::string, std::function<ReproResult()>> cases{
      {"thm1-hamilton", hamilton_manipulation}, {"thm1-quota", quota_manipulation},
      {"thm1-divisor-tie", divisor_manipulation_tied}, {"thm1-divisor", divisor_manipulation_untied},
      {"prop1", floor_util_decomposition}, {"sec4-ceiling", ceiling_quota_failure},
      {"thm4-ejr", ejr_plus_witnesses}, {"table2-linked", linked_ordering}};
  return cases;
}

}  // namespace

const std::vector<std::string>& repro_case_names() {
  static const std::vector<std::string> names{"thm1-hamilton", "thm1-quota", "thm1-divisor-tie",
                                              "thm1-divisor", "prop1", "sec4-ceiling",
                                              "thm4-ejr", "table2-linked"};
  return names;
}

ReproResult run_repro_case(const std::string& name) {
  const auto& cases = registry();
  auto it = cases.find(name);
  if (it == cases.end()) throw std::invalid_argument("unknown repro case '" + name + "'");
  return it->second();
}

}  // namespace budgetagg::cli
