#pragma once

#include <utility>
#include <vector>

#include "budgetagg/mechanism.hpp"
#include "budgetagg/profile.hpp"

namespace budgetagg {

struct Breakpoint {
  Rat t;
  Rat value;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Continuous, non-decreasing, piecewise-linear function on [0, 1] with f(0) = 0.
// Breakpoints start at t = 0, end at t = 1, and have strictly increasing t.
class PiecewisePhantom {
 public:
  explicit PiecewisePhantom(std::vector<Breakpoint> points);

  // The constant-zero phantom.
  static PiecewisePhantom zero();

  Rat operator()(const Rat& t) const;
  const std::vector<Breakpoint>& breakpoints() const { return points_; }
  const Rat& final_value() const { return points_.back().value; }

  friend bool operator==(const PiecewisePhantom&, const PiecewisePhantom&) = default;

 private:
  std::vector<Breakpoint> points_;
};

// n + 1 phantoms f_0..f_n with values in [0, b].
class PhantomSystem {
 public:
  PhantomSystem(int voters, int budget, std::vector<PiecewisePhantom> phantoms);

  int voters() const { return n_; }
  int budget() const { return b_; }
  const PiecewisePhantom& phantom(int k) const { return phantoms_[k]; }
  const std::vector<PiecewisePhantom>& phantoms() const { return phantoms_; }

  // f_k(1) >= b (n - k) / n for every k; without it normalization is not guaranteed.
  bool meets_normalization_bound() const;

  friend bool operator==(const PhantomSystem&, const PhantomSystem&) = default;

 private:
  int n_;
  int b_;
  std::vector<PiecewisePhantom> phantoms_;
};

// f_k(t) = min(b (n - k) t, b)
PhantomSystem independent_markets(int n, int b);

// f_k is 0 up to k/n, rises linearly to b by (k+1)/n, then stays at b; f_n = 0.
PhantomSystem utilitarian(int n, int b);

// Caps every f_k at ceil(b (n - k) / n). A phantom that never reaches its cap
// is first extended: the whole system is replayed on [0, 1/2] and such
// phantoms rise linearly to the cap over [1/2, 1].
PhantomSystem upper_quota_cap(const PhantomSystem& system);

struct FractionalEvaluation {
  Rat t_star;
  FractionalAllocation medians;
};

// Per-alternative median of the votes and the phantoms at time t (need not sum to b).
std::vector<Rat> medians_at(const FractionalProfile& profile, const PhantomSystem& system,
                            const Rat& t);

// Moving-phantom outcome with t_star the earliest normalization time.
// Throws InvalidSystem when the system violates the normalization bound.
FractionalEvaluation evaluate_fractional(const FractionalProfile& profile,
                                         const PhantomSystem& system);

// Closed interval [first, last] of normalization times.
std::pair<Rat, Rat> normalization_interval(const FractionalProfile& profile,
                                           const PhantomSystem& system);

FractionalMechanism moving_phantom_mechanism(PhantomFamily family);

FractionalAllocation independent_markets_mechanism(const FractionalProfile& profile);
FractionalAllocation utilitarian_mechanism(const FractionalProfile& profile);

}  // namespace budgetagg
