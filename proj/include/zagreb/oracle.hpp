#pragma once

#include <cstdint>
#include <vector>

#include "zagreb/int_types.hpp"

namespace zagreb {

/// Ground truth from exhaustive enumeration of all labeled graphs.
struct OracleResult {
  int n = 0;
  std::int64_t m = 0;
  Int max_value;                      // true maximum of sum of squared degrees
  std::vector<int> witness_degrees;  // one attaining degree sequence
};

inline constexpr int kOracleDefaultCap = 7;  // 2^21 masks at n=7
inline constexpr int kOracleHardCap = 8;     // 2^28 masks, behind allow_large

/// Maximum of the sum of squared degrees over all binom(binom(n,2), m)
/// edge subsets. n <= 7, or n = 8 with allow_large.
OracleResult brute_force_max(int n, std::int64_t m, bool allow_large = false);

/// Per-m maxima for m = 0..binom(n,2) in a single pass over all
/// 2^binom(n,2) masks, bucketed by popcount.
std::vector<OracleResult> brute_force_sweep(int n, bool allow_large = false);

}  // namespace zagreb
