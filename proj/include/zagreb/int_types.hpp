#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace zagreb {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& x) { return x.sign(); }

/// Floor of the square root of x. Throws std::domain_error("negative radicand")
/// for x < 0. Returned v satisfies v*v <= x < (v+1)*(v+1).
Int isqrt_floor(const Int& x);

/// x*(x-1)/2, exact.
Int binom2(const Int& x);

/// true iff x is a perfect square (x >= 0).
bool is_perfect_square(const Int& x, Int* root = nullptr);

/// Decimal rendering of num/den with 6 significant digits (den > 0).
/// Error is at most one unit in the 6th significant digit; computed by
/// scaled integer division, never by naive floating-point evaluation.
std::string display6(const Int& num, const Int& den);
std::string display6(const Int& value);
std::string display6(const Rational& value);

}  // namespace zagreb
