#pragma once

#include <string>

#include "zagreb/int_types.hpp"

namespace zagreb {

enum class Ordering { less, equal, greater };

/// Exact value of the form p + c*sqrt(k) with integer p, c and k >= 0.
///
/// Normal form: if k = 0 or c = 0 the value is stored as (p, 0, 0);
/// if k is a perfect square the radical is folded into p. After
/// construction, k is either 0 or a non-square >= 2.
class Surd {
 public:
  Surd() : p_(0), c_(0), k_(0) {}
  Surd(Int p, Int c, Int k);
  explicit Surd(Int p) : p_(std::move(p)), c_(0), k_(0) {}

  const Int& p() const { return p_; }
  const Int& c() const { return c_; }
  const Int& k() const { return k_; }

  bool is_rational() const { return c_ == 0; }

  /// Sign of the value: -1, 0 or +1. Integer arithmetic only.
  int sign() const;

  /// "p+c*sqrt(k)" with zero terms elided, e.g. "-5+sqrt(2197)", "24".
  std::string to_string() const;

  bool operator==(const Surd& o) const;

 private:
  Int p_, c_, k_;
};

/// Exact ordering of the real values a and b, decided by sign-tracked
/// squaring over the integers. Total on all quadratic surd pairs: the
/// two-radical case is resolved by a second squaring.
Ordering surd_cmp(const Surd& a, const Surd& b);

/// Sign of a - b; same machinery as surd_cmp.
int surd_diff_sign(const Surd& a, const Surd& b);

/// The integers whose comparison decided sign(x) at the final squaring
/// step: sign is recovered from (c_sq_k vs p_sq) together with the signs
/// of p and c of the decisive surd.
struct SignCertificate {
  Surd decisive;  // the surd whose sign settled the comparison
  Int c_sq_k;     // c^2 * k of the decisive surd
  Int p_sq;       // p^2 of the decisive surd
  int sign = 0;
};

SignCertificate sign_certificate(const Surd& x);

/// Decimal rendering with 6 significant digits; error at most one unit in
/// the 6th significant digit (big-integer scaled isqrt; display only).
std::string display6(const Surd& x);

}  // namespace zagreb
