#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace fundstring {

using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient with the convention binom(b, a) = 0 whenever a < 0 or
/// b < a. This includes every negative top argument, so sums whose lower
/// limits run past the support vanish without special cases.
inline BigInt binom(std::int64_t b, std::int64_t a) {
  if (a < 0 || b < a) return 0;
  std::int64_t const s = (b - a < a) ? b - a : a;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= s; ++i) {
    result *= b - s + i;
    result /= i;  // exact: result is binom(b - s + i, i) after this step
  }
  return result;
}

/// Ballot number (m+1)/(m+t+1) * binom(m+2t, t), evaluated as the integer
/// difference binom(m+2t, t) - binom(m+2t, t-1). Zero for m < 0 or t < 0.
inline BigInt ballot(std::int64_t m, std::int64_t t) {
  if (m < 0 || t < 0) return 0;
  return binom(m + 2 * t, t) - binom(m + 2 * t, t - 1);
}

/// Floor division for possibly negative numerators (positive divisor).
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt pow2(std::int64_t e) {
  BigInt r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

}  // namespace fundstring
