#include "budgetagg/allocation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "budgetagg/errors.hpp"

namespace budgetagg {

Instance::Instance(int voters, int alternatives, int budget)
    : n_(voters), m_(alternatives), b_(budget) {
  if (n_ < 1) throw InvalidInput("need at least one voter, got n=" + std::to_string(n_));
  if (m_ < 2) throw InvalidInput("need at least two alternatives, got m=" + std::to_string(m_));
  if (b_ < 1) throw InvalidInput("budget must be positive, got b=" + std::to_string(b_));
}

std::string to_string(const Instance& inst) {
  return "(n=" + std::to_string(inst.n()) + ", m=" + std::to_string(inst.m()) +
         ", b=" + std::to_string(inst.b()) + ")";
}

IntegralAllocation::IntegralAllocation(std::vector<int> amounts) : amounts_(std::move(amounts)) {
  if (amounts_.size() < 2) throw InvalidInput("an allocation needs at least two alternatives");
  for (std::size_t j = 0; j < amounts_.size(); ++j) {
    if (amounts_[j] < 0) {
      throw InvalidInput("negative amount " + std::to_string(amounts_[j]) + " on alternative " +
                         std::to_string(j + 1));
    }
  }
  budget_ = std::accumulate(amounts_.begin(), amounts_.end(), 0);
}

IntegralAllocation IntegralAllocation::with_budget(std::vector<int> amounts, int budget) {
  IntegralAllocation out(std::move(amounts));
  if (out.budget() != budget) {
    throw InvalidInput("amounts sum to " + std::to_string(out.budget()) + ", expected " +
                       std::to_string(budget));
  }
  return out;
}

FractionalAllocation::FractionalAllocation(std::vector<Rat> amounts)
    : amounts_(std::move(amounts)) {
  if (amounts_.size() < 2) throw InvalidInput("an allocation needs at least two alternatives");
  for (std::size_t j = 0; j < amounts_.size(); ++j) {
    if (amounts_[j] < 0) {
      throw InvalidInput("negative amount " + to_string(amounts_[j]) + " on alternative " +
                         std::to_string(j + 1));
    }
    budget_ += amounts_[j];
  }
}

FractionalAllocation FractionalAllocation::with_budget(std::vector<Rat> amounts,
                                                       const Rat& budget) {
  FractionalAllocation out(std::move(amounts));
  if (out.budget() != budget) {
    throw InvalidInput("amounts sum to " + to_string(out.budget()) + ", expected " +
                       to_string(budget));
  }
  return out;
}

bool FractionalAllocation::is_integral() const {
  return std::all_of(amounts_.begin(), amounts_.end(), [](const Rat& x) { return is_integer(x); });
}

FractionalAllocation to_fractional(const IntegralAllocation& a) {
  std::vector<Rat> out(a.begin(), a.end());
  return FractionalAllocation(std::move(out));
}

IntegralAllocation to_integral(const FractionalAllocation& a) {
  std::vector<int> out;
  out.reserve(a.size());
  for (const Rat& x : a) {
    if (!is_integer(x)) throw InvalidInput("amount " + to_string(x) + " is not integral");
    out.push_back(static_cast<int>(x.numerator()));
  }
  return IntegralAllocation(std::move(out));
}

namespace {

template <class P, class A>
void require_compatible(const P& p, const A& a) {
  if (p.size() != a.size()) {
    throw InvalidInput("dimension mismatch: " + std::to_string(p.size()) + " vs " +
                       std::to_string(a.size()) + " alternatives");
  }
  if (Rat(p.budget()) != Rat(a.budget())) {
    throw InvalidInput("budget mismatch: " + to_string(Rat(p.budget())) + " vs " +
                       to_string(Rat(a.budget())));
  }
}

template <class P, class A>
Rat l1_impl(const P& p, const A& a) {
  require_compatible(p, a);
  Rat total{0};
  for (std::size_t j = 0; j < p.size(); ++j) total += abs(Rat(p[j]) - Rat(a[j]));
  return total;
}

}  // namespace

Rat l1_disutility(const IntegralAllocation& p, const IntegralAllocation& a) { return l1_impl(p, a); }
Rat l1_disutility(const FractionalAllocation& p, const FractionalAllocation& a) {
  return l1_impl(p, a);
}
Rat l1_disutility(const FractionalAllocation& p, const IntegralAllocation& a) {
  return l1_impl(p, a);
}
Rat l1_disutility(const IntegralAllocation& p, const FractionalAllocation& a) {
  return l1_impl(p, a);
}

Rat overlap_disutility(const IntegralAllocation& p, const IntegralAllocation& a) {
  require_compatible(p, a);
  int overlap = 0;
  for (std::size_t j = 0; j < p.size(); ++j) overlap += std::min(p[j], a[j]);
  return Rat(2 * p.budget() - 2 * overlap);
}

int l1_distance(const IntegralAllocation& p, const IntegralAllocation& a) {
  int total = 0;
  for (std::size_t j = 0; j < p.size(); ++j) total += std::abs(p[j] - a[j]);
  return total;
}

namespace {

void enumerate_rec(std::vector<int>& prefix, int remaining, int slots,
                   std::vector<IntegralAllocation>& out) {
  if (slots == 1) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int x = 0; x <= remaining; ++x) {
    prefix.push_back(x);
    enumerate_rec(prefix, remaining - x, slots - 1, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<IntegralAllocation> enumerate_allocations(int m, int b) {
  if (m < 2) throw InvalidInput("need at least two alternatives, got m=" + std::to_string(m));
  if (b < 0) throw InvalidInput("budget must be non-negative");
  std::vector<IntegralAllocation> out;
  std::vector<int> prefix;
  prefix.reserve(m);
  enumerate_rec(prefix, b, m, out);
  return out;
}

std::string to_compact_string(const IntegralAllocation& a) {
  const bool single_digit = std::all_of(a.begin(), a.end(), [](int x) { return x < 10; });
  std::string out;
  if (single_digit) {
    for (int x : a) out.push_back(static_cast<char>('0' + x));
    return out;
  }
  out.push_back('(');
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j) out.push_back(',');
    out += std::to_string(a[j]);
  }
  out.push_back(')');
  return out;
}

}  // namespace budgetagg
