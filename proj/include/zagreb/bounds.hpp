#pragma once

#include <string>
#include <vector>

#include "zagreb/int_types.hpp"
#include "zagreb/surd.hpp"

namespace zagreb {

/// de Caen's bound D(n,m) = m(2m/(n-1) + n-2) as a reduced exact rational.
/// Throws std::domain_error for n <= 1.
Rational de_caen_D(const Int& n, const Int& m);

/// The two-branch upper bound
///   F(n,m) = (2m)^{3/2}                      if 4m >= n^2
///          = (n^2 - 2m)^{3/2} + 4mn - n^3    otherwise.
/// Both branches agree when 4m = n^2.
Surd nikiforov_F(const Int& n, const Int& m);

/// lower = m*sqrt(8m+1) - 3m, upper = m*sqrt(8m+1) - m;
/// applies iff 4m >= n(n-1).
struct Theorem1Bounds {
  Surd lower;
  Surd upper;
  bool applies = false;
};

Theorem1Bounds theorem1_bounds(const Int& n, const Int& m);

enum class CheckStatus { holds, not_applicable, violated };

const char* to_cstring(CheckStatus s);

/// One exactly-decided inequality: sign(witness) `relation` 0.
struct Comparison {
  std::string label;        // e.g. "f<=th1_upper"
  std::string lhs_display;  // the two sides of the original inequality
  std::string rhs_display;
  Surd witness;             // the surd whose sign decides
  std::string relation;     // ">=0", ">0" or "==0"
  int sign = 0;
  bool ok = false;
  Int cert_c_sq_k;          // squared-comparison integers of the decisive surd
  Int cert_p_sq;
};

struct CheckResult {
  CheckStatus status = CheckStatus::not_applicable;
  std::vector<Comparison> parts;

  bool holds() const { return status == CheckStatus::holds; }
  bool violated() const { return status == CheckStatus::violated; }
};

/// Theorem-1 sandwich m*sqrt(8m+1)-3m <= f <= m*sqrt(8m+1)-m,
/// applicable when 4m >= n(n-1).
CheckResult check_bo1(const Int& n, const Int& m);

/// Strict m*sqrt(8m+1) - m < D(n,m), applicable when 2m < (n-1)(n-2)
/// and m >= 1 (at m = 0 both sides are 0, so the strict form is
/// degenerate and reported not_applicable).
CheckResult check_bo2(const Int& n, const Int& m);

/// F(n,m) - 4m <= f(n,m) <= F(n,m), checked for every (n,m). The lower
/// half fails exactly on a small-m region (first at n=6, m=1); the
/// checker reports such pairs as violated with integer certificates.
CheckResult check_bo3(const Int& n, const Int& m);

/// Strict F(n,m) < D(n,m), applicable when m^2 > n^3 and
/// (binom(n,2)-m)^2 > n^3.
CheckResult check_bo4(const Int& n, const Int& m);

/// (2m)^{3/2} - 3m < m*sqrt(8m+1) - 3m <= C(n,m), for m > 0
/// (m = 0 reported not_applicable).
CheckResult check_prop2(const Int& n, const Int& m);

/// C(n,m) <= m*sqrt(8m+1) - m, every (n,m).
CheckResult check_lemma_pro1(const Int& n, const Int& m);

/// S(n,m) <= (n^2-2m)^{3/2} + 4mn - n^3, applicable when 4m <= n^2.
CheckResult check_lemma_pro3(const Int& n, const Int& m);

/// sqrt((2r-1)^2 + 8(r-1)) > (2r^2+5r-2)/(r+2), applicable for r >= 3.
CheckResult check_prop_pr0(const Int& r);

/// Exact test D(n,m) * threshold_den > f(n,m) * threshold_num, cross-
/// multiplied through D's denominator. Throws if f(n,m) = 0.
bool ratio_D_over_f_exceeds(const Int& n, const Int& m,
                            const Int& threshold_num,
                            const Int& threshold_den);

/// Everything the CLI reports for one (n,m).
struct BoundReport {
  Int n, m;
  Int r, q, s, t;
  Int C, S, f;
  char winner = 't';      // 'C', 'S' or 't' (tie)
  bool d_defined = false; // false for n <= 1
  Rational D;
  Surd F;
  int f_branch = 0;       // 1: (2m)^{3/2}; 2: complement branch
  Surd th1_lower, th1_upper;
  bool th1_applies = false;
  bool bo2_range = false;
  bool bo4_range = false;
  bool subtle = false;    // |4m - n(n-1)| < 2n
};

BoundReport make_bound_report(const Int& n, const Int& m);

}  // namespace zagreb
