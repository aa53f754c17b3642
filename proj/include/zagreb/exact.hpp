#pragma once

#include "zagreb/int_types.hpp"

namespace zagreb {

/// The unique pair with m = r(r-1)/2 + q and 0 <= q < r.
/// m = 0 decomposes to (r=1, q=0), the only pair satisfying 0 <= q < r.
struct TriDecomp {
  Int r;
  Int q;
};

/// The unique pair with binom(n,2) - m = s(s-1)/2 + t and 0 <= t < s.
struct CoDecomp {
  Int s;
  Int t;
};

TriDecomp triangular_decompose(const Int& m);
CoDecomp co_decompose(const Int& n, const Int& m);

/// C(n,m) = 2m(r-1) + q(q+1), the quasi-complete value.
Int value_C(const Int& n, const Int& m);

/// S(n,m) = (n(n-1) - 2m)(s-1) + t(t+1) + 4m(n-1) - (n-1)^2 n,
/// the quasi-star value.
Int value_S(const Int& n, const Int& m);

/// f(n,m) = max{C(n,m), S(n,m)}: the maximum of the sum of squared degrees
/// over all simple graphs with n vertices and m edges.
Int f_exact(const Int& n, const Int& m);

/// Transfers f across edge complementation:
///   f(n, binom(n,2) - m) = f(n,m) + n(n-1)^2 - 4(n-1)m.
/// Given f_of_m = f(n,m), returns f(n, binom(n,2) - m).
/// The orientation is fixed against the brute-force oracle (n <= 7).
Int complement_transfer(const Int& n, const Int& m, const Int& f_of_m);

/// Throws std::domain_error unless n >= 1 and 0 <= m <= binom(n,2).
void require_valid_nm(const Int& n, const Int& m);

}  // namespace zagreb
