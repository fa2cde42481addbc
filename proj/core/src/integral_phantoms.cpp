#include "budgetagg/integral_phantoms.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "budgetagg/errors.hpp"

namespace budgetagg {

RoundingFn::RoundingFn(Rat threshold) : threshold_(threshold) {
  if (threshold_ < 0 || threshold_ > 1) {
    throw InvalidInput("rounding threshold " + to_string(threshold_) + " outside [0, 1]");
  }
}

std::int64_t RoundingFn::operator()(const Rat& x) const {
  const auto down = floor_of(x);
  return (x - down) > threshold_ ? down + 1 : down;
}

Rat RoundingFn::first_time_at_level(const PiecewisePhantom& f, int level) const {
  const auto& pts = f.breakpoints();
  if (threshold_ == 1) {
    // floor: first t with f(t) >= level
    const Rat target(level);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i].value < target) continue;
      if (i == 0) return pts[0].t;
      const auto& lo = pts[i - 1];
      const auto& hi = pts[i];
      return lo.t + (target - lo.value) * (hi.t - lo.t) / (hi.value - lo.value);
    }
  } else {
    // otherwise the rounded value is >= level exactly when f(t) > level - 1 + threshold;
    // return the last t with f(t) <= that boundary.
    const Rat boundary = Rat(level - 1) + threshold_;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i].value <= boundary) continue;
      const auto& lo = pts[i - 1];  // i > 0 because f(0) = 0 <= boundary
      const auto& hi = pts[i];
      return lo.t + (boundary - lo.value) * (hi.t - lo.t) / (hi.value - lo.value);
    }
  }
  throw ConstructionError("rounded phantom never reaches level " + std::to_string(level));
}

IntegralPhantomSchedule::IntegralPhantomSchedule(int voters, int alternatives, int budget,
                                                 std::vector<PhantomMove> events)
    : n_(voters), m_(alternatives), b_(budget), events_(std::move(events)) {
  Instance(n_, m_, b_);  // validates the dimensions
  if (events_.size() > static_cast<std::size_t>(horizon())) {
    throw ConstructionError("schedule has " + std::to_string(events_.size()) +
                            " moves, more than the horizon z=" + std::to_string(horizon()));
  }
  final_.assign(static_cast<std::size_t>(n_ + 1) * m_, 0);
  for (const auto& e : events_) {
    if (e.phantom < 0 || e.phantom > n_ || e.alternative < 0 || e.alternative >= m_) {
      throw InvalidSchedule("schedule move (" + std::to_string(e.phantom) + ", " +
                            std::to_string(e.alternative) + ") out of range");
    }
    if (++final_[e.phantom * m_ + e.alternative] > b_) {
      throw InvalidSchedule("phantom " + std::to_string(e.phantom) + " on alternative " +
                            std::to_string(e.alternative + 1) + " moves past the budget");
    }
  }
}

int IntegralPhantomSchedule::position(int phantom, int alternative, int tau) const {
  const auto steps = std::min<std::size_t>(std::max(tau, 0), events_.size());
  int pos = 0;
  for (std::size_t s = 0; s < steps; ++s) {
    pos += events_[s].phantom == phantom && events_[s].alternative == alternative;
  }
  return pos;
}

int IntegralPhantomSchedule::final_position(int phantom, int alternative) const {
  return final_[phantom * m_ + alternative];
}

bool IntegralPhantomSchedule::reaches_quota_bounds() const {
  for (int k = 0; k <= n_; ++k) {
    const auto bound = ceil_of(Rat(b_ * (n_ - k), n_));
    for (int j = 0; j < m_; ++j) {
      if (final_position(k, j) < bound) return false;
    }
  }
  return true;
}

IntegralPhantomSchedule build_schedule(const PhantomSystem& system, const RoundingFn& rounding,
                                       int alternatives) {
  if (alternatives < 2) throw InvalidInput("need at least two alternatives");
  struct Change {
    Rat t;
    int phantom;
    int level;
  };
  std::vector<Change> changes;
  for (int k = 0; k <= system.voters(); ++k) {
    const auto& f = system.phantom(k);
    const auto top = rounding(f.final_value());
    for (int level = 1; level <= top; ++level) {
      changes.push_back({rounding.first_time_at_level(f, level), k, level});
    }
  }
  std::sort(changes.begin(), changes.end(), [](const Change& a, const Change& b) {
    return std::tie(a.t, a.phantom, a.level) < std::tie(b.t, b.phantom, b.level);
  });

  std::vector<PhantomMove> events;
  events.reserve(changes.size() * alternatives);
  for (const auto& c : changes) {
    for (int j = 0; j < alternatives; ++j) events.push_back({c.phantom, j});
  }
  return IntegralPhantomSchedule(system.voters(), alternatives, system.budget(), std::move(events));
}

namespace {

class MedianTracker {
 public:
  MedianTracker(const IntegralProfile& profile, const IntegralPhantomSchedule& schedule)
      : profile_(profile), n_(schedule.voters()), m_(schedule.alternatives()) {
    const auto& inst = profile.instance();
    if (inst.n() != schedule.voters() || inst.m() != schedule.alternatives() ||
        inst.b() != schedule.budget()) {
      throw InvalidInput("schedule does not match the profile's instance " + to_string(inst));
    }
    positions_.assign(static_cast<std::size_t>(n_ + 1) * m_, 0);
    medians_.assign(m_, 0);
    for (int j = 0; j < m_; ++j) {
      medians_[j] = recompute(j);
      sum_ += medians_[j];
    }
  }

  void apply(const PhantomMove& move) {
    ++positions_[move.phantom * m_ + move.alternative];
    const int j = move.alternative;
    const int updated = recompute(j);
    sum_ += updated - medians_[j];
    medians_[j] = updated;
  }

  int sum() const { return sum_; }
  const std::vector<int>& medians() const { return medians_; }

 private:
  int recompute(int j) {
    column_.clear();
    for (int k = 0; k <= n_; ++k) column_.push_back(positions_[k * m_ + j]);
    for (const auto& v : profile_.votes()) column_.push_back(v[j]);
    auto mid = column_.begin() + n_;
    std::nth_element(column_.begin(), mid, column_.end());
    return *mid;
  }

  const IntegralProfile& profile_;
  int n_;
  int m_;
  std::vector<int> positions_;
  std::vector<int> medians_;
  std::vector<int> column_;
  int sum_ = 0;
};

}  // namespace

IntegralEvaluation evaluate_integral(const IntegralProfile& profile,
                                     const IntegralPhantomSchedule& schedule) {
  MedianTracker tracker(profile, schedule);
  if (!schedule.reaches_quota_bounds()) {
    throw InvalidSchedule("schedule leaves some phantom below ceil(b(n-k)/n)");
  }
  const int b = profile.instance().b();
  int tau = 0;
  for (const auto& move : schedule.events()) {
    if (tracker.sum() == b) break;
    tracker.apply(move);
    ++tau;
  }
  if (tracker.sum() != b) {
    throw InvalidSchedule("median sum " + std::to_string(tracker.sum()) +
                          " never equals the budget");
  }
  return {tau, IntegralAllocation(tracker.medians())};
}

std::vector<int> medians_at(const IntegralProfile& profile, const IntegralPhantomSchedule& schedule,
                            int tau) {
  MedianTracker tracker(profile, schedule);
  const auto steps = std::min<std::size_t>(std::max(tau, 0), schedule.events().size());
  for (std::size_t s = 0; s < steps; ++s) tracker.apply(schedule.events()[s]);
  return tracker.medians();
}

std::vector<int> median_sum_trace(const IntegralProfile& profile,
                                  const IntegralPhantomSchedule& schedule) {
  MedianTracker tracker(profile, schedule);
  std::vector<int> trace{tracker.sum()};
  for (const auto& move : schedule.events()) {
    tracker.apply(move);
    trace.push_back(tracker.sum());
  }
  return trace;
}

IntegralMechanism integral_moving_phantom_mechanism(PhantomFamily family, RoundingFn rounding) {
  return [family = std::move(family), rounding](const IntegralProfile& profile) {
    const auto& inst = profile.instance();
    const auto schedule = build_schedule(family(inst.n(), inst.b()), rounding, inst.m());
    return evaluate_integral(profile, schedule).medians;
  };
}

namespace {

IntegralAllocation run(const IntegralProfile& profile, const PhantomSystem& system,
                       const RoundingFn& rounding) {
  return evaluate_integral(profile, build_schedule(system, rounding, profile.instance().m())).medians;
}

}  // namespace

IntegralAllocation floor_im(const IntegralProfile& profile) {
  const auto& inst = profile.instance();
  return run(profile, upper_quota_cap(independent_markets(inst.n(), inst.b())), RoundingFn::floor());
}

IntegralAllocation floor_util(const IntegralProfile& profile) {
  const auto& inst = profile.instance();
  return run(profile, utilitarian(inst.n(), inst.b()), RoundingFn::floor());
}

IntegralAllocation ceiling_im(const IntegralProfile& profile) {
  const auto& inst = profile.instance();
  return run(profile, upper_quota_cap(independent_markets(inst.n(), inst.b())),
             RoundingFn::ceiling());
}

}  // namespace budgetagg
