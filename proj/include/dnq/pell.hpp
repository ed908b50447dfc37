#pragma once

#include <optional>
#include <vector>

#include "dnq/bigint.hpp"
#include "dnq/quadring.hpp"

namespace dnq {

/// √d = [a0; period, period, ...]
struct CFExpansion {
  Int a0;
  std::vector<Int> period;
};

/// Periodic continued fraction of √d via the (P, Q) recurrence.
/// Throws PerfectSquare for square d and InvalidArgument for d < 2.
CFExpansion cf_sqrt(const Int& d);

struct FundamentalUnit {
  RingElt unit;  // minimal y > 0 with x² − d·y² = norm
  int norm = 0;  // +1 or −1
};

/// Read off the convergent that closes the first period of cf_sqrt(d).
FundamentalUnit fundamental_unit(const Int& d);

enum class SolveMethod {
  UnitGroup,    // |N| = 1: decided by the fundamental unit
  BoundedScan,  // exhaustive scan of 0 ≤ y ≤ search_bound
};

/// Class representatives of x² − d·y² = N. Two solutions are in the same class
/// when their quotient is a unit of norm +1. Each representative has the least
/// y ≥ 0 in its class.
struct PellSolutionSet {
  Int d;
  Int target;
  bool solvable = false;
  std::vector<RingElt> primitives;
  Int search_bound;  // 0 for SolveMethod::UnitGroup
  SolveMethod method = SolveMethod::BoundedScan;
};

inline const Int kDefaultBoundCeiling = Int(100000000);
inline const Int kMaxPellTarget = Int(1000000);

struct SolveOptions {
  /// Largest y-bound solve_norm will scan before giving up with BoundOverflowPolicy.
  Int bound_ceiling = kDefaultBoundCeiling;
};

/// Every solution class of x² − d·y² = N has a representative with
/// y² ≤ |N|·(x1 ∓ 1) / (2d), where (x1, y1) is the fundamental norm +1 unit and
/// the sign is − for N > 0, + for N < 0. Returns the floor of that bound.
Int classical_bound(const RingCtx& ctx, const Int& target);

/// Complete set of solution classes for 0 < |N| ≤ kMaxPellTarget. Results are
/// cached in ctx. Throws BoundOverflowPolicy when the bound exceeds the ceiling.
PellSolutionSet solve_norm(const RingCtx& ctx, const Int& target, const SolveOptions& options = {});

/// x and y are equivalent solutions of norm N (their quotient is a norm +1 unit).
bool same_class(const RingCtx& ctx, const Int& target, const RingElt& x, const RingElt& y);

/// The first `count` solutions with x ≥ 0, y ≥ 0, ordered by y then x.
/// Throws Unsolvable when x² − d·y² = N has no solution.
std::vector<RingElt> enumerate_norm(const RingCtx& ctx, const Int& target, std::size_t count,
                                    const SolveOptions& options = {});

enum class Solvability { Solvable, Unsolvable, Unknown };

std::string_view solvability_name(Solvability s);

struct NormEvidence {
  Solvability status = Solvability::Unknown;
  std::optional<RingElt> witness;
  Int search_bound;      // y-range covered by the search
  std::string method;    // "unit", "scan", "product"
};

/// Searches for one solution of x² − d·y² = N, stopping at the first hit.
/// Unsolvable only after the full classical bound was scanned; Unknown when
/// the bound exceeds the ceiling.
NormEvidence find_norm_witness(const RingCtx& ctx, const Int& target, const SolveOptions& options = {});

struct HypothesisReport {
  Int d;
  NormEvidence norm_minus_one;
  NormEvidence norm_six;
  NormEvidence norm_minus_six;
  int d_mod_48 = 0;

  /// Norm −1 and norm 6 are both solvable.
  bool holds() const {
    return norm_minus_one.status == Solvability::Solvable && norm_six.status == Solvability::Solvable;
  }
};

/// Checks solvability of norms −1, 6, −6. When the first two hold, asserts
/// d ≡ 10 (mod 48) and solvability of −6, throwing TheoremViolation otherwise.
HypothesisReport hypothesis_check(const RingCtx& ctx, const SolveOptions& options = {});

}  // namespace dnq
