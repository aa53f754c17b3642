#include "zagreb/exact.hpp"

#include <stdexcept>

namespace zagreb {

Int isqrt_floor(const Int& x) {
  if (x < 0) throw std::domain_error("negative radicand");
  return boost::multiprecision::sqrt(x);
}

Int binom2(const Int& x) { return x * (x - 1) / 2; }

bool is_perfect_square(const Int& x, Int* root) {
  if (x < 0) return false;
  Int r = boost::multiprecision::sqrt(x);
  if (root) *root = r;
  return r * r == x;
}

void require_valid_nm(const Int& n, const Int& m) {
  if (n < 1) throw std::domain_error("vertex count must be >= 1");
  if (m < 0) throw std::domain_error("negative edge count");
  if (m > binom2(n)) throw std::domain_error("edge count exceeds binom(n,2)");
}

TriDecomp triangular_decompose(const Int& m) {
  if (m < 0) throw std::domain_error("negative edge count");
  // r = floor((1+sqrt(8m+1))/2), corrected by +-1; 0 <= q < r enforced below.
  Int r = (1 + isqrt_floor(8 * m + 1)) / 2;
  if (r < 1) r = 1;
  while (binom2(r) > m) --r;
  while (binom2(r + 1) <= m) ++r;
  Int q = m - binom2(r);
  if (q < 0 || q >= r) throw std::logic_error("triangular decomposition postcondition");
  return {r, q};
}

CoDecomp co_decompose(const Int& n, const Int& m) {
  require_valid_nm(n, m);
  TriDecomp d = triangular_decompose(binom2(n) - m);
  return {d.r, d.q};
}

Int value_C(const Int& n, const Int& m) {
  require_valid_nm(n, m);
  TriDecomp d = triangular_decompose(m);
  return 2 * m * (d.r - 1) + d.q * (d.q + 1);
}

Int value_S(const Int& n, const Int& m) {
  CoDecomp d = co_decompose(n, m);
  return (n * (n - 1) - 2 * m) * (d.s - 1) + d.t * (d.t + 1) + 4 * m * (n - 1) -
         (n - 1) * (n - 1) * n;
}

Int f_exact(const Int& n, const Int& m) {
  Int c = value_C(n, m);
  Int s = value_S(n, m);
  return c >= s ? c : s;
}

Int complement_transfer(const Int& n, const Int& m, const Int& f_of_m) {
  require_valid_nm(n, m);
  return f_of_m + n * (n - 1) * (n - 1) - 4 * (n - 1) * m;
}

}  // namespace zagreb
