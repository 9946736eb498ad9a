#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "extremal/errors.hpp"

namespace extremal {

using Count = std::uint64_t;

inline Count checked_add(Count a, Count b) {
  Count out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("count addition overflows 64 bits");
  return out;
}

inline Count checked_mul(Count a, Count b) {
  Count out;
  if (__builtin_mul_overflow(a, b, &out))
    throw OverflowError("count multiplication overflows 64 bits");
  return out;
}

/// C(n, k) with overflow detection; 0 when k > n.
inline Count binomial(Count n, Count k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Count result = 1;
  for (Count i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step; divide by gcd first
    // to keep the intermediate product small.
    Count num = n - k + i;
    Count den = i;
    Count g = std::gcd(result, den);
    result /= g;
    den /= g;
    num /= den;  // den now divides num
    result = checked_mul(result, num);
  }
  return result;
}

}  // namespace extremal
