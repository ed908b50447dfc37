#include "dnq/bigint.hpp"

#include <cmath>

#include "dnq/error.hpp"

namespace dnq {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NonPositiveRadicand: return "NonPositiveRadicand";
    case Errc::NotSquareFree: return "NotSquareFree";
    case Errc::WrongResidue: return "WrongResidue";
    case Errc::RadicandTooLarge: return "RadicandTooLarge";
    case Errc::PerfectSquare: return "PerfectSquare";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::DivisionByZeroNorm: return "DivisionByZeroNorm";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::OutOfScopeNorm: return "OutOfScopeNorm";
    case Errc::FormViolation: return "FormViolation";
    case Errc::BoundOverflowPolicy: return "BoundOverflowPolicy";
    case Errc::Unsolvable: return "Unsolvable";
    case Errc::TheoremViolation: return "TheoremViolation";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::SClassNoQuadruple: return "SClassNoQuadruple";
    case Errc::UncoveredClass: return "UncoveredClass";
    case Errc::MissingAux: return "MissingAux";
    case Errc::WrongSeedNorm: return "WrongSeedNorm";
    case Errc::ParityFailure: return "ParityFailure";
    case Errc::Degenerate: return "Degenerate";
    case Errc::VerificationFailure: return "VerificationFailure";
    case Errc::NonIntegralFormula: return "NonIntegralFormula";
    case Errc::RetriesExhausted: return "RetriesExhausted";
    case Errc::ZeroScalar: return "ZeroScalar";
    case Errc::NotAWitness: return "NotAWitness";
  }
  return "Unknown";
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Int mod_euclid(const Int& a, const Int& b) {
  Int r = a % b;
  if (r < 0) r += abs(b);
  return r;
}

int mod_small(const Int& a, int m) {
  return static_cast<int>(mod_euclid(a, Int(m)));
}

Int isqrt(const Int& n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "isqrt of a negative number");
  return boost::multiprecision::sqrt(n);
}

bool is_square(const Int& n, Int* root) {
  if (n < 0) return false;
  // Squares mod 16 are {0,1,4,9}.
  const int low = static_cast<int>(static_cast<unsigned>(n & 15));
  if (low != 0 && low != 1 && low != 4 && low != 9) return false;
  Int s = boost::multiprecision::sqrt(n);
  if (s * s != n) return false;
  if (root) *root = std::move(s);
  return true;
}

bool divides_into(const Int& a, const Int& b, Int& q) {
  if (b == 0) return false;
  Int quot, rem;
  boost::multiprecision::divide_qr(a, b, quot, rem);
  if (rem != 0) return false;
  q = std::move(quot);
  return true;
}

Int parse_int(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (body.empty()) throw Error(Errc::InvalidArgument, "empty integer literal");
  for (char c : body) {
    if (c < '0' || c > '9') {
      throw Error(Errc::InvalidArgument, "not a decimal integer: '" + std::string(text) + "'");
    }
  }
  Int v{std::string(body)};
  return (!text.empty() && text.front() == '-') ? Int(-v) : v;
}

std::string to_string(const Int& n) { return n.str(); }

bool fits_i64(const Int& n) {
  return n >= std::numeric_limits<std::int64_t>::min() &&
         n <= std::numeric_limits<std::int64_t>::max();
}

u128 isqrt_u128(u128 n) {
  if (n == 0) return 0;
  auto r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square_u128(u128 n, u128* root) {
  const unsigned low = static_cast<unsigned>(n & 15);
  if (low != 0 && low != 1 && low != 4 && low != 9) return false;
  const u128 r = isqrt_u128(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

}  // namespace dnq
