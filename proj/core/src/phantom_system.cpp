#include "budgetagg/phantom_system.hpp"

#include <algorithm>
#include <string>

#include "budgetagg/errors.hpp"

namespace budgetagg {

PiecewisePhantom::PiecewisePhantom(std::vector<Breakpoint> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw InvalidInput("a phantom needs breakpoints at t=0 and t=1");
  if (points_.front().t != 0 || points_.front().value != 0) {
    throw InvalidInput("a phantom must start at (0, 0)");
  }
  if (points_.back().t != 1) throw InvalidInput("a phantom must be defined up to t=1");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i].t <= points_[i - 1].t) {
      throw InvalidInput("phantom breakpoints must have strictly increasing times");
    }
    if (points_[i].value < points_[i - 1].value) {
      throw InvalidInput("phantom values must be non-decreasing");
    }
  }
}

PiecewisePhantom PiecewisePhantom::zero() {
  return PiecewisePhantom({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}});
}

Rat PiecewisePhantom::operator()(const Rat& t) const {
  if (t < 0 || t > 1) throw InvalidInput("phantom time " + to_string(t) + " outside [0, 1]");
  auto it = std::lower_bound(points_.begin(), points_.end(), t,
                             [](const Breakpoint& p, const Rat& x) { return p.t < x; });
  if (it->t == t) return it->value;
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  return lo.value + (hi.value - lo.value) * (t - lo.t) / (hi.t - lo.t);
}

PhantomSystem::PhantomSystem(int voters, int budget, std::vector<PiecewisePhantom> phantoms)
    : n_(voters), b_(budget), phantoms_(std::move(phantoms)) {
  if (n_ < 1 || b_ < 1) throw InvalidInput("phantom system needs n >= 1 and b >= 1");
  if (phantoms_.size() != static_cast<std::size_t>(n_) + 1) {
    throw InvalidInput("phantom system for n=" + std::to_string(n_) + " needs " +
                       std::to_string(n_ + 1) + " phantoms, got " +
                       std::to_string(phantoms_.size()));
  }
  for (const auto& f : phantoms_) {
    if (f.final_value() > b_) throw InvalidInput("phantom exceeds the budget");
  }
}

bool PhantomSystem::meets_normalization_bound() const {
  for (int k = 0; k <= n_; ++k) {
    if (phantoms_[k].final_value() < Rat(b_ * (n_ - k), n_)) return false;
  }
  return true;
}

namespace {

// Builds from (t, value) pairs, dropping repeats of the same time.
PiecewisePhantom from_points(std::vector<Breakpoint> points) {
  std::vector<Breakpoint> clean;
  for (auto& p : points) {
    if (!clean.empty() && clean.back().t == p.t) continue;
    clean.push_back(std::move(p));
  }
  return PiecewisePhantom(std::move(clean));
}

PiecewisePhantom cap_phantom(const PiecewisePhantom& f, const Rat& cap) {
  std::vector<Breakpoint> out;
  const auto& pts = f.breakpoints();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) {
      const auto& lo = pts[i - 1];
      const auto& hi = pts[i];
      if (lo.value < cap && cap < hi.value) {
        out.push_back({lo.t + (cap - lo.value) * (hi.t - lo.t) / (hi.value - lo.value), cap});
      }
    }
    out.push_back({pts[i].t, std::min(pts[i].value, cap)});
  }
  return PiecewisePhantom(std::move(out));
}

Rat quota_cap(int n, int k, int b) { return Rat(ceil_of(Rat(b * (n - k), n))); }

}  // namespace

PhantomSystem independent_markets(int n, int b) {
  if (n < 1 || b < 1) throw InvalidInput("independent markets needs n >= 1 and b >= 1");
  std::vector<PiecewisePhantom> phantoms;
  for (int k = 0; k < n; ++k) {
    const Rat full(1, n - k);
    phantoms.push_back(from_points({{Rat(0), Rat(0)}, {full, Rat(b)}, {Rat(1), Rat(b)}}));
  }
  phantoms.push_back(PiecewisePhantom::zero());
  return PhantomSystem(n, b, std::move(phantoms));
}

PhantomSystem utilitarian(int n, int b) {
  if (n < 1 || b < 1) throw InvalidInput("utilitarian needs n >= 1 and b >= 1");
  std::vector<PiecewisePhantom> phantoms;
  for (int k = 0; k < n; ++k) {
    phantoms.push_back(from_points({{Rat(0), Rat(0)},
                                    {Rat(k, n), Rat(0)},
                                    {Rat(k + 1, n), Rat(b)},
                                    {Rat(1), Rat(b)}}));
  }
  phantoms.push_back(PiecewisePhantom::zero());
  return PhantomSystem(n, b, std::move(phantoms));
}

PhantomSystem upper_quota_cap(const PhantomSystem& system) {
  const int n = system.voters();
  const int b = system.budget();
  bool extend = false;
  for (int k = 0; k <= n; ++k) extend = extend || system.phantom(k).final_value() < quota_cap(n, k, b);

  std::vector<PiecewisePhantom> phantoms;
  for (int k = 0; k <= n; ++k) {
    const Rat cap = quota_cap(n, k, b);
    PiecewisePhantom f = system.phantom(k);
    if (extend) {
      std::vector<Breakpoint> squeezed;
      for (const auto& p : f.breakpoints()) squeezed.push_back({p.t / 2, p.value});
      squeezed.push_back({Rat(1), std::max(f.final_value(), cap)});
      f = PiecewisePhantom(std::move(squeezed));
    }
    phantoms.push_back(cap_phantom(f, cap));
  }
  return PhantomSystem(n, b, std::move(phantoms));
}

namespace {

void require_matching(const FractionalProfile& profile, const PhantomSystem& system) {
  const auto& inst = profile.instance();
  if (inst.n() != system.voters() || inst.b() != system.budget()) {
    throw InvalidInput("phantom system is for n=" + std::to_string(system.voters()) +
                       ", b=" + std::to_string(system.budget()) + " but the profile is " +
                       to_string(inst));
  }
}

Rat median_sum(const FractionalProfile& profile, const PhantomSystem& system, const Rat& t) {
  Rat total{0};
  for (const Rat& x : medians_at(profile, system, t)) total += x;
  return total;
}

// Times between which every median is linear in t: phantom breakpoints,
// phantom/vote crossings and phantom/phantom crossings.
std::vector<Rat> critical_times(const FractionalProfile& profile, const PhantomSystem& system) {
  std::vector<Rat> times{Rat(0), Rat(1)};
  for (const auto& f : system.phantoms()) {
    for (const auto& p : f.breakpoints()) times.push_back(p.t);
  }

  std::vector<Rat> levels;
  for (const auto& v : profile.votes()) levels.insert(levels.end(), v.begin(), v.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  for (const auto& f : system.phantoms()) {
    const auto& pts = f.breakpoints();
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const auto& lo = pts[i - 1];
      const auto& hi = pts[i];
      if (lo.value == hi.value) continue;
      auto first = std::upper_bound(levels.begin(), levels.end(), lo.value);
      for (auto it = first; it != levels.end() && *it < hi.value; ++it) {
        times.push_back(lo.t + (*it - lo.value) * (hi.t - lo.t) / (hi.value - lo.value));
      }
    }
  }

  const auto& phantoms = system.phantoms();
  for (std::size_t a = 0; a < phantoms.size(); ++a) {
    for (std::size_t c = a + 1; c < phantoms.size(); ++c) {
      std::vector<Rat> grid;
      for (const auto& p : phantoms[a].breakpoints()) grid.push_back(p.t);
      for (const auto& p : phantoms[c].breakpoints()) grid.push_back(p.t);
      std::sort(grid.begin(), grid.end());
      grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
      for (std::size_t i = 1; i < grid.size(); ++i) {
        const Rat d0 = phantoms[a](grid[i - 1]) - phantoms[c](grid[i - 1]);
        const Rat d1 = phantoms[a](grid[i]) - phantoms[c](grid[i]);
        if ((d0 < 0 && d1 > 0) || (d0 > 0 && d1 < 0)) {
          times.push_back(grid[i - 1] + d0 * (grid[i] - grid[i - 1]) / (d0 - d1));
        }
      }
    }
  }

  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

struct Sweep {
  std::vector<Rat> times;
  std::vector<Rat> sums;
};

Sweep sweep(const FractionalProfile& profile, const PhantomSystem& system) {
  require_matching(profile, system);
  if (!system.meets_normalization_bound()) {
    throw InvalidSystem("phantom system violates f_k(1) >= b(n-k)/n; normalization not guaranteed");
  }
  Sweep s;
  s.times = critical_times(profile, system);
  for (const Rat& t : s.times) s.sums.push_back(median_sum(profile, system, t));
  return s;
}

Rat first_normalization(const Sweep& s, const Rat& b) {
  for (std::size_t i = 0; i < s.times.size(); ++i) {
    if (s.sums[i] < b) continue;
    if (i == 0) return s.times[0];
    // The median sum is linear on [times[i-1], times[i]].
    return s.times[i - 1] +
           (b - s.sums[i - 1]) * (s.times[i] - s.times[i - 1]) / (s.sums[i] - s.sums[i - 1]);
  }
  throw InvalidSystem("median sum never reaches the budget");
}

}  // namespace

std::vector<Rat> medians_at(const FractionalProfile& profile, const PhantomSystem& system,
                            const Rat& t) {
  require_matching(profile, system);
  const auto& inst = profile.instance();
  std::vector<Rat> phantom_values;
  phantom_values.reserve(system.phantoms().size());
  for (const auto& f : system.phantoms()) phantom_values.push_back(f(t));

  std::vector<Rat> out;
  out.reserve(inst.m());
  std::vector<Rat> column;
  for (int j = 0; j < inst.m(); ++j) {
    column = phantom_values;
    for (const auto& v : profile.votes()) column.push_back(v[j]);
    auto mid = column.begin() + inst.n();
    std::nth_element(column.begin(), mid, column.end());
    out.push_back(*mid);
  }
  return out;
}

FractionalEvaluation evaluate_fractional(const FractionalProfile& profile,
                                         const PhantomSystem& system) {
  const Rat b(profile.instance().b());
  const Sweep s = sweep(profile, system);
  const Rat t_star = first_normalization(s, b);
  return {t_star, FractionalAllocation::with_budget(medians_at(profile, system, t_star), b)};
}

std::pair<Rat, Rat> normalization_interval(const FractionalProfile& profile,
                                           const PhantomSystem& system) {
  const Rat b(profile.instance().b());
  const Sweep s = sweep(profile, system);
  const Rat first = first_normalization(s, b);
  for (std::size_t i = 0; i < s.times.size(); ++i) {
    if (s.sums[i] <= b) continue;
    // i > 0 here because the sum at t = 0 is zero.
    if (s.sums[i - 1] == b) return {first, s.times[i - 1]};
    return {first, first};
  }
  return {first, Rat(1)};
}

FractionalMechanism moving_phantom_mechanism(PhantomFamily family) {
  return [family = std::move(family)](const FractionalProfile& profile) {
    const auto& inst = profile.instance();
    return evaluate_fractional(profile, family(inst.n(), inst.b())).medians;
  };
}

FractionalAllocation independent_markets_mechanism(const FractionalProfile& profile) {
  const auto& inst = profile.instance();
  return evaluate_fractional(profile, independent_markets(inst.n(), inst.b())).medians;
}

FractionalAllocation utilitarian_mechanism(const FractionalProfile& profile) {
  const auto& inst = profile.instance();
  return evaluate_fractional(profile, utilitarian(inst.n(), inst.b())).medians;
}

}  // namespace budgetagg
