#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dnq {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// Quotient rounded toward negative infinity. `b` must be nonzero.
Int floor_div(const Int& a, const Int& b);

/// Remainder in [0, |b|).
Int mod_euclid(const Int& a, const Int& b);

/// Small-modulus convenience; returns a value in [0, m).
int mod_small(const Int& a, int m);

/// Floor square root of a nonnegative integer.
Int isqrt(const Int& n);

/// True iff `n` is the square of an integer; writes the root when requested.
bool is_square(const Int& n, Int* root = nullptr);

/// Exact division; returns false (leaving `q` untouched) when `b` does not divide `a`.
bool divides_into(const Int& a, const Int& b, Int& q);

Int parse_int(std::string_view text);
std::string to_string(const Int& n);

bool fits_i64(const Int& n);

// 128-bit helpers for the hot scanning loops.
using u128 = unsigned __int128;
u128 isqrt_u128(u128 n);
bool is_square_u128(u128 n, u128* root = nullptr);

}  // namespace dnq
