#include "zagreb/surd.hpp"

#include <cstdio>
#include <stdexcept>
#include <utility>

#include "zagreb/exact.hpp"

namespace zagreb {

Surd::Surd(Int p, Int c, Int k) : p_(std::move(p)), c_(std::move(c)), k_(std::move(k)) {
  if (k_ < 0) throw std::domain_error("negative radicand");
  if (c_ == 0 || k_ == 0) {
    c_ = 0;
    k_ = 0;
    return;
  }
  Int root;
  if (is_perfect_square(k_, &root)) {
    p_ += c_ * root;
    c_ = 0;
    k_ = 0;
  }
}

int Surd::sign() const {
  // After normalization k_ is 0 or a non-square >= 2, so c_*sqrt(k_) is
  // irrational whenever c_ != 0.
  if (c_ == 0) return sign_of(p_);
  if (c_ > 0 && p_ >= 0) return 1;
  if (c_ < 0 && p_ <= 0) return -1;
  Int radical_sq = c_ * c_ * k_;
  Int rational_sq = p_ * p_;
  int cmp = radical_sq > rational_sq ? 1 : (radical_sq < rational_sq ? -1 : 0);
  return c_ > 0 ? cmp : -cmp;
}

SignCertificate sign_certificate(const Surd& x) {
  SignCertificate cert;
  cert.decisive = x;
  cert.c_sq_k = x.c() * x.c() * x.k();
  cert.p_sq = x.p() * x.p();
  cert.sign = x.sign();
  return cert;
}

int surd_diff_sign(const Surd& a, const Surd& b) {
  if (a.is_rational()) return Surd(a.p() - b.p(), -b.c(), b.k()).sign();
  if (b.is_rational()) return Surd(a.p() - b.p(), a.c(), a.k()).sign();
  if (a.k() == b.k()) return Surd(a.p() - b.p(), a.c() - b.c(), a.k()).sign();
  // Distinct radicands: decide sign of A - B with A = (a.p-b.p) + a.c*sqrt(a.k)
  // and B = b.c*sqrt(b.k) (irrational, so never zero).
  Surd lhs(a.p() - b.p(), a.c(), a.k());
  int sa = lhs.sign();
  int sb = sign_of(b.c());
  if (sa >= 0 && sb < 0) return 1;
  if (sa <= 0 && sb > 0) return -1;
  if (sa == 0) return -sb;
  if (sa != sb) return sa;
  // Same nonzero sign: compare squares, which reintroduces one radical.
  Int d = a.p() - b.p();
  Surd squares(d * d + a.c() * a.c() * a.k() - b.c() * b.c() * b.k(), 2 * d * a.c(), a.k());
  int s2 = squares.sign();
  return sa > 0 ? s2 : -s2;
}

Ordering surd_cmp(const Surd& a, const Surd& b) {
  int s = surd_diff_sign(a, b);
  return s < 0 ? Ordering::less : (s > 0 ? Ordering::greater : Ordering::equal);
}

bool Surd::operator==(const Surd& o) const { return surd_diff_sign(*this, o) == 0; }

std::string Surd::to_string() const {
  if (c_ == 0) return p_.str();
  std::string out;
  if (p_ != 0) out += p_.str();
  if (c_ > 0 && !out.empty()) out += "+";
  if (c_ == -1)
    out += "-";
  else if (c_ != 1)
    out += c_.str() + "*";
  out += "sqrt(" + k_.str() + ")";
  return out;
}

namespace {

Int pow10_int(unsigned digits) {
  Int v = 1;
  for (unsigned i = 0; i < digits; ++i) v *= 10;
  return v;
}

std::string format6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// value = scaled / 10^guard, |scaled| known to within `slack` units.
// Renders 6 significant digits once at least 7 digits are pinned.
std::string render_scaled(const Int& scaled, unsigned guard, const Int& slack) {
  if (scaled == 0 && slack == 0) return "0";
  Int need = (slack + 1) * 10000000;
  if (boost::multiprecision::abs(scaled) < need) return {};  // not pinned yet
  Int q = guard > 18 ? Int(scaled / pow10_int(guard - 18)) : scaled;
  return format6(q.convert_to<double>() / 1e18);  // 10^18 is exact in double
}

}  // namespace

std::string display6(const Int& num, const Int& den) {
  if (den <= 0) throw std::domain_error("display denominator must be positive");
  if (num == 0) return "0";
  for (unsigned guard = 18;; guard += 18) {
    Int scaled = num * pow10_int(guard) / den;
    std::string s = render_scaled(scaled, guard, 1);
    if (!s.empty()) return s;
  }
}

std::string display6(const Int& value) { return display6(value, Int(1)); }

std::string display6(const Rational& value) {
  return display6(boost::multiprecision::numerator(value),
                  boost::multiprecision::denominator(value));
}

std::string display6(const Surd& x) {
  if (x.is_rational()) return display6(x.p());
  if (x.sign() == 0) return "0";
  Int abs_c = boost::multiprecision::abs(x.c());
  for (unsigned guard = 18;; guard += 18) {
    Int scale = pow10_int(guard);
    Int root = isqrt_floor(x.k() * scale * scale);
    Int scaled = x.p() * scale + x.c() * root;  // floor error at most |c|
    std::string s = render_scaled(scaled, guard, abs_c);
    if (!s.empty()) return s;
  }
}

}  // namespace zagreb
