#pragma once

#include <cstdint>
#include <vector>

#include "budgetagg/mechanism.hpp"
#include "budgetagg/phantom_system.hpp"

namespace budgetagg {

// x -> ceil(x) if frac(x) > threshold, else floor(x).
// threshold 1 is the floor function, threshold 0 the ceiling function.
class RoundingFn {
 public:
  explicit RoundingFn(Rat threshold);
  static RoundingFn floor() { return RoundingFn(Rat(1)); }
  static RoundingFn ceiling() { return RoundingFn(Rat(0)); }

  std::int64_t operator()(const Rat& x) const;
  const Rat& threshold() const { return threshold_; }

  // Earliest time (infimum) at which the rounded phantom reaches `level` (>= 1).
  // Requires the rounded final value to be at least `level`.
  Rat first_time_at_level(const PiecewisePhantom& f, int level) const;

 private:
  Rat threshold_;
};

// One unit move of phantom `phantom` on alternative `alternative` (both 0-based).
struct PhantomMove {
  int phantom = 0;
  int alternative = 0;
  friend bool operator==(const PhantomMove&, const PhantomMove&) = default;
};

// Integral phantom system encoded as its move list: step tau applies events[tau - 1],
// so at most one phantom moves per step. Positions stay put after the last event.
class IntegralPhantomSchedule {
 public:
  IntegralPhantomSchedule(int voters, int alternatives, int budget, std::vector<PhantomMove> events);

  int voters() const { return n_; }
  int alternatives() const { return m_; }
  int budget() const { return b_; }
  // z = b * m * (n + 1)
  int horizon() const { return b_ * m_ * (n_ + 1); }
  const std::vector<PhantomMove>& events() const { return events_; }

  // phi_{k,j}(tau)
  int position(int phantom, int alternative, int tau) const;
  int final_position(int phantom, int alternative) const;

  // phi_{k,j}(z) >= ceil(b (n - k) / n) for all k, j.
  bool reaches_quota_bounds() const;

 private:
  int n_;
  int m_;
  int b_;
  std::vector<PhantomMove> events_;
  std::vector<int> final_;  // (n + 1) x m, row-major by phantom
};

// Rounds each phantom of `system`, then emits, in time order (lower phantom
// index first on simultaneous changes), one move per alternative in ascending order.
IntegralPhantomSchedule build_schedule(const PhantomSystem& system, const RoundingFn& rounding,
                                       int alternatives);

struct IntegralEvaluation {
  int tau_star;
  IntegralAllocation medians;
};

// Steps tau = 0, 1, ... until the medians sum to b.
// Throws InvalidSchedule if the schedule misses its quota bounds.
IntegralEvaluation evaluate_integral(const IntegralProfile& profile,
                                     const IntegralPhantomSchedule& schedule);

std::vector<int> medians_at(const IntegralProfile& profile, const IntegralPhantomSchedule& schedule,
                            int tau);

// Sum of medians for tau = 0 .. number of events.
std::vector<int> median_sum_trace(const IntegralProfile& profile,
                                  const IntegralPhantomSchedule& schedule);

IntegralMechanism integral_moving_phantom_mechanism(PhantomFamily family, RoundingFn rounding);

// Upper-quota-capped independent markets, floor rounding.
IntegralAllocation floor_im(const IntegralProfile& profile);
// Utilitarian, floor rounding.
IntegralAllocation floor_util(const IntegralProfile& profile);
// Upper-quota-capped independent markets, ceiling rounding. Not quota-proportional.
IntegralAllocation ceiling_im(const IntegralProfile& profile);

}  // namespace budgetagg
