#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// boost 1.74's mixed rational/int comparisons recurse forever once C++20
// synthesizes reversed operators; exact non-template overloads win resolution.
namespace boost {
#define BUDGETAGG_RAT_CMP(op, I)                                                 \
  inline bool operator op(const rational<std::int64_t>& a, I b) {               \
    return a op rational<std::int64_t>(b);                                       \
  }                                                                              \
  inline bool operator op(I a, const rational<std::int64_t>& b) {               \
    return rational<std::int64_t>(a) op b;                                       \
  }
#define BUDGETAGG_RAT_CMPS(I) \
  BUDGETAGG_RAT_CMP(==, I)    \
  BUDGETAGG_RAT_CMP(!=, I)    \
  BUDGETAGG_RAT_CMP(<, I)     \
  BUDGETAGG_RAT_CMP(>, I)     \
  BUDGETAGG_RAT_CMP(<=, I)    \
  BUDGETAGG_RAT_CMP(>=, I)
BUDGETAGG_RAT_CMPS(int)
BUDGETAGG_RAT_CMPS(std::int64_t)
#undef BUDGETAGG_RAT_CMPS
#undef BUDGETAGG_RAT_CMP
}  // namespace boost

namespace budgetagg {

// Exact rational; boost keeps it in lowest terms with a positive denominator.
using Rat = boost::rational<std::int64_t>;

// Accepts "7", "-7", "16/3" (and unreduced "32/6", which is normalized).
Rat parse_rat(std::string_view text);

// "16/3" for proper fractions, "7" for integers.
std::string to_string(const Rat& value);

std::int64_t floor_of(const Rat& value);
std::int64_t ceil_of(const Rat& value);

inline Rat fractional_part(const Rat& value) { return value - floor_of(value); }

inline bool is_integer(const Rat& value) { return value.denominator() == 1; }

}  // namespace budgetagg
