#include "zagreb/oracle.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <stdexcept>

namespace zagreb {

namespace {

constexpr int kMaxSlots = 28;  // binom(8,2)

struct EdgeTable {
  std::array<std::uint8_t, kMaxSlots> u{}, v{};
  int slots = 0;
};

EdgeTable edge_table(int n) {
  EdgeTable t;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      t.u[static_cast<std::size_t>(t.slots)] = static_cast<std::uint8_t>(a);
      t.v[static_cast<std::size_t>(t.slots)] = static_cast<std::uint8_t>(b);
      ++t.slots;
    }
  return t;
}

void check_cap(int n, bool allow_large) {
  if (n < 1) throw std::domain_error("vertex count must be >= 1");
  if (n > kOracleHardCap || (n > kOracleDefaultCap && !allow_large))
    throw std::domain_error("oracle cap exceeded");
}

std::uint32_t mask_sum_sq(std::uint64_t mask, const EdgeTable& t, int n) {
  std::uint8_t deg[8];
  std::memset(deg, 0, sizeof(deg));
  while (mask != 0) {
    int b = std::countr_zero(mask);
    ++deg[t.u[static_cast<std::size_t>(b)]];
    ++deg[t.v[static_cast<std::size_t>(b)]];
    mask &= mask - 1;
  }
  std::uint32_t total = 0;
  for (int i = 0; i < n; ++i) total += static_cast<std::uint32_t>(deg[i]) * deg[i];
  return total;
}

std::vector<int> mask_degrees(std::uint64_t mask, const EdgeTable& t, int n) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  while (mask != 0) {
    int b = std::countr_zero(mask);
    ++deg[t.u[static_cast<std::size_t>(b)]];
    ++deg[t.v[static_cast<std::size_t>(b)]];
    mask &= mask - 1;
  }
  return deg;
}

OracleResult make_result(int n, std::int64_t m, std::uint32_t best, std::uint64_t best_mask,
                         const EdgeTable& t) {
  // Fixed-width counters are safe: sum of squared degrees <= n(n-1)^2 <= 392
  // for n <= 8. Re-widened to unbounded integers at the boundary.
  OracleResult res;
  res.n = n;
  res.m = m;
  res.max_value = Int(best);
  res.witness_degrees = mask_degrees(best_mask, t, n);
  return res;
}

}  // namespace

OracleResult brute_force_max(int n, std::int64_t m, bool allow_large) {
  check_cap(n, allow_large);
  EdgeTable t = edge_table(n);
  if (m < 0 || m > t.slots) throw std::domain_error("edge count exceeds binom(n,2)");
  if (m == 0) return make_result(n, m, 0, 0, t);

  // Gosper's hack enumerates all masks of popcount m in increasing order.
  const std::uint64_t limit = std::uint64_t{1} << t.slots;
  std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  std::uint32_t best = 0;
  std::uint64_t best_mask = mask;
  while (mask < limit) {
    std::uint32_t value = mask_sum_sq(mask, t, n);
    if (value > best) {
      best = value;
      best_mask = mask;
    }
    std::uint64_t low = mask & ~(mask - 1);
    std::uint64_t ripple = mask + low;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
  }
  return make_result(n, m, best, best_mask, t);
}

std::vector<OracleResult> brute_force_sweep(int n, bool allow_large) {
  check_cap(n, allow_large);
  EdgeTable t = edge_table(n);
  std::vector<std::uint32_t> best(static_cast<std::size_t>(t.slots) + 1, 0);
  std::vector<std::uint64_t> best_mask(static_cast<std::size_t>(t.slots) + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << t.slots;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto m = static_cast<std::size_t>(std::popcount(mask));
    std::uint32_t value = mask_sum_sq(mask, t, n);
    if (value > best[m]) {
      best[m] = value;
      best_mask[m] = mask;
    }
  }
  std::vector<OracleResult> out;
  out.reserve(best.size());
  for (std::size_t m = 0; m < best.size(); ++m)
    out.push_back(make_result(n, static_cast<std::int64_t>(m), best[m], best_mask[m], t));
  return out;
}

}  // namespace zagreb
