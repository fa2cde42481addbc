#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "budgetagg/rational.hpp"

namespace budgetagg {

// (n, m, b): voters, alternatives, budget.
class Instance {
 public:
  Instance(int voters, int alternatives, int budget);

  int n() const { return n_; }
  int m() const { return m_; }
  int b() const { return b_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int n_;
  int m_;
  int b_;
};

std::string to_string(const Instance& inst);

// A point of I^m_b: non-negative integer amounts. Ordered lexicographically by amounts.
class IntegralAllocation {
 public:
  IntegralAllocation() = default;
  // Requires at least two non-negative amounts; the budget is their sum.
  explicit IntegralAllocation(std::vector<int> amounts);
  IntegralAllocation(std::initializer_list<int> amounts)
      : IntegralAllocation(std::vector<int>(amounts)) {}

  // As above, additionally requiring the amounts to sum to `budget`.
  static IntegralAllocation with_budget(std::vector<int> amounts, int budget);

  int budget() const { return budget_; }
  std::size_t size() const { return amounts_.size(); }
  int operator[](std::size_t j) const { return amounts_[j]; }
  std::span<const int> amounts() const { return amounts_; }
  const std::vector<int>& vector() const { return amounts_; }
  auto begin() const { return amounts_.begin(); }
  auto end() const { return amounts_.end(); }

  friend bool operator==(const IntegralAllocation& a, const IntegralAllocation& b) {
    return a.amounts_ == b.amounts_;
  }
  friend std::strong_ordering operator<=>(const IntegralAllocation& a,
                                          const IntegralAllocation& b) {
    return a.amounts_ <=> b.amounts_;
  }

 private:
  std::vector<int> amounts_;
  int budget_ = 0;
};

// A point of S^m_b with exact rational amounts.
class FractionalAllocation {
 public:
  FractionalAllocation() = default;
  explicit FractionalAllocation(std::vector<Rat> amounts);
  static FractionalAllocation with_budget(std::vector<Rat> amounts, const Rat& budget);

  const Rat& budget() const { return budget_; }
  std::size_t size() const { return amounts_.size(); }
  const Rat& operator[](std::size_t j) const { return amounts_[j]; }
  std::span<const Rat> amounts() const { return amounts_; }
  auto begin() const { return amounts_.begin(); }
  auto end() const { return amounts_.end(); }

  bool is_integral() const;

  friend bool operator==(const FractionalAllocation& a, const FractionalAllocation& b) {
    return a.amounts_ == b.amounts_;
  }

 private:
  std::vector<Rat> amounts_;
  Rat budget_{0};
};

FractionalAllocation to_fractional(const IntegralAllocation& a);
// Throws InvalidInput unless every amount is an integer.
IntegralAllocation to_integral(const FractionalAllocation& a);

// Sum_j |p_j - a_j|. Both arguments must share dimension and budget.
Rat l1_disutility(const IntegralAllocation& p, const IntegralAllocation& a);
Rat l1_disutility(const FractionalAllocation& p, const FractionalAllocation& a);
Rat l1_disutility(const FractionalAllocation& p, const IntegralAllocation& a);
Rat l1_disutility(const IntegralAllocation& p, const FractionalAllocation& a);

// 2b - 2 * sum_j min(p_j, a_j); equals the l1 distance on I^m_b.
Rat overlap_disutility(const IntegralAllocation& p, const IntegralAllocation& a);

// Integer l1 distance for hot loops.
int l1_distance(const IntegralAllocation& p, const IntegralAllocation& a);

// All of I^m_b in ascending lexicographic order.
std::vector<IntegralAllocation> enumerate_allocations(int m, int b);

// "0021" when every amount is a single digit, otherwise "(0,0,12,1)".
std::string to_compact_string(const IntegralAllocation& a);

}  // namespace budgetagg
