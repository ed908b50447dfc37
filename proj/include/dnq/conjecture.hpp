#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dnq/builder.hpp"
#include "dnq/pell.hpp"
#include "dnq/quadring.hpp"

namespace dnq {

enum class Verdict { Yes, No, Unknown };

std::string_view verdict_name(Verdict v);

/// Is n = α² − β² in Z[√d]?
struct DiffSquaresResult {
  Verdict verdict = Verdict::Unknown;
  /// "norm-pm2": an element of norm ±2 splits n (Yes).
  /// "ramified-divisors": no norm ±2 element; every divisor g of n with
  ///   |Nm g| = 2a, a | Nm(n/2), a² ≤ |Nm(n/2)| was tried (Yes or No).
  /// "residue-mod-4": no α² − β² has n's residue mod (4, 4) (No).
  /// "search": bounded factor search (Yes or Unknown).
  std::string method;
  std::optional<std::pair<RingElt, RingElt>> witness;  // (α, β)
  std::optional<PellSolutionSet> plus_two;
  std::optional<PellSolutionSet> minus_two;
  std::optional<Int> cofactor_norm;            // Nm(n/2) for the ramified classes
  std::vector<PellSolutionSet> divisor_sets;   // norms ±2a tried, beyond ±2
  /// Largest |component| of the factor α − β tried by the search (0 if none ran).
  Int search_bound;
};

struct DiffSquaresOptions {
  Int factor_bound = 200;
  SolveOptions solve;
};

/// Three-valued representability test, with g = α − β and h = α + β.
///
/// For n = 2w with w = (2m+1, 2k) or (2m+1, 2k+1), the prime above 2 is
/// ramified, so n = g·h with g ≡ h (mod 2) forces |Nm g| = 2a with a | Nm(w),
/// and any such divisor works. The test is exact up to solver limits
/// (Unknown when a needed norm exceeds kMaxPellTarget or the bound ceiling).
/// Residues no difference of squares reaches are a certified No; everything
/// else gets a bounded search answering Yes(witness) or Unknown.
DiffSquaresResult representable_diff_squares(const RingCtx& ctx, const RingElt& n,
                                             const DiffSquaresOptions& options = {});

struct NormPm2Certificate {
  PellSolutionSet plus_two;
  PellSolutionSet minus_two;
};

/// Certified unsolvability of x² − dy² = ±2. Requires the norm −1 / norm 6
/// hypothesis (PreconditionFailed otherwise); TheoremViolation if ±2 is solvable.
NormPm2Certificate norm_pm2_impossible(const RingCtx& ctx, const SolveOptions& options = {});

struct PrimeWitness {
  Int m;
  Int k;
  Int p;  // (2m+1)² − d(2k+1)², prime and ≡ 3 (mod 4)

  friend bool operator==(const PrimeWitness&, const PrimeWitness&) = default;
};

/// All (m, k, p) with odd x = 2m+1 ≤ x_max, odd y = 2k+1 ≥ 1, and
/// p = x² − d·y² > 0 prime with p ≡ 3 (mod 4); ordered by x, then y.
std::vector<PrimeWitness> prime_witness_search(const RingCtx& ctx, std::uint64_t x_max);

struct CounterexampleRecord {
  Int d;
  RingElt n;
  PrimeWitness witness;
  NormPm2Certificate nonrep_cert;
  DiffSquaresResult representability;
  Quadruple quadruple;
};

/// n = (4m+2, 4k+2) for a prime witness (m, k): certified not a difference of
/// two squares, with a verified D(n)-quadruple. Throws NotAWitness when
/// (2m+1)² − d(2k+1)² is not a prime ≡ 3 (mod 4).
CounterexampleRecord make_counterexample(const RingCtx& ctx, const Int& m, const Int& k,
                                         const ConstructOptions& options = {});

struct DCandidate {
  Int lprime;
  int sign = 1;  // the ± in 3l'² ± 2l'
  Int l;         // d = 48l + 10
  Int p;         // 24l'(3l' ± 2) + 5
  Int d;         // 2p
  RingElt witness6;
  bool norm_minus_one_verified = false;
  bool norm_six_verified = false;
};

struct HuntResult {
  std::vector<DCandidate> candidates;  // fully verified, ascending d, no duplicates
  std::vector<std::string> anomalies;  // prime p whose d failed a verification
};

/// Walks l' = 0..lprime_max with both signs, keeps prime p, and verifies
/// norm 6 (algebraically) and norm −1 (via the fundamental unit) for d = 2p.
HuntResult hunt_d(std::uint64_t lprime_max);

}  // namespace dnq
