#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dnq/pell.hpp"
#include "dnq/quadring.hpp"

namespace dnq {

/// 3n = alpha1 · alpha2, split so that pair_engine can solve
/// for a + 2r = (alpha1 + alpha2)/2 with a seed a of the required norm.
struct Factorization {
  Int d;
  RingElt alpha1;
  RingElt alpha2;
  int required_seed_norm = 1;
  int case_id = 0;
};

/// Pairs of a quadruple in the order the roots are stored.
inline constexpr std::array<std::pair<int, int>, 6> kPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// {a, b, a+b+2r, a+4b+4r} with the property D(n), certified by six roots
/// (elements[i]·elements[j] + n = roots[p]², p indexing kPairs).
struct Quadruple {
  Int d;
  RingElt n;
  std::array<RingElt, 4> elements;
  RingElt seed;
  RingElt r;
  std::array<RingElt, 6> roots;
  int case_id = 0;
  std::size_t seed_index = 0;
  /// The norm −1 (cases 1, 2) or norm 6 (case 5) element used in the factorization.
  std::optional<RingElt> aux;
  /// Number of doublings applied to reach n from a directly covered class.
  int scale_steps = 0;
};

/// Auxiliary elements the factorizations need.
struct AuxElements {
  std::optional<RingElt> norm_minus_one;  // cases 1, 2
  std::optional<RingElt> norm_six;        // case 5
};

/// Smallest-|y| solutions of norm −1 and 6 (when solvable), sign-adjusted to
/// (6a+3, 6b+1) and (12M+4, 6N+1) respectively.
AuxElements default_aux(const RingCtx& ctx, const SolveOptions& options = {});

/// Negates a seed so norm +1 seeds have re ≡ 1 (mod 6) and norm −1 seeds have
/// im ≡ 1 (mod 6). Residues outside those patterns are returned unchanged.
RingElt normalize_seed(const RingCtx& ctx, const RingElt& seed);

/// Flips signs of x and y independently towards (12M+4, 6N+1).
RingElt normalize_norm_six(const RingElt& v);

/// Chooses alpha1, alpha2 for one of the five covered classes.
/// Throws SClassNoQuadruple, UncoveredClass or MissingAux.
Factorization pick_factorization(const RingCtx& ctx, const ClassTag& cls, const AuxElements& aux);

/// Builds and certifies the quadruple for one seed. Throws ParityFailure,
/// Degenerate (zero or repeated element) or VerificationFailure.
Quadruple pair_engine(const RingCtx& ctx, const RingElt& n, const Factorization& fact, const RingElt& seed);

/// Parameters of the printed closed forms. Which fields are read depends on
/// the case: (alpha, beta) describe the norm −1 auxiliary (2alpha+1, 2beta+1)
/// in cases 1 and 2; (big_m, big_n) the norm 6 auxiliary (12M+4, 6N+1) in
/// case 5; (a1, b1) the seed (6a1+1, 6b1) or (6a1+3, 6b1+1).
struct ClosedFormParams {
  Int m, k;
  Int alpha, beta;
  Int big_m, big_n;
  Int a1, b1;
};

struct ClosedForm {
  RingElt r;
  RingElt b;
};

/// Evaluates the explicit r and b formulas of cases 1–5 (case 5 picks the
/// branch by the parity of m). Throws NonIntegralFormula on inexact halving.
ClosedForm closed_form(const RingCtx& ctx, int case_id, const ClosedFormParams& params);

/// Recovers closed-form parameters from a quadruple built by construct.
ClosedFormParams closed_form_params(const Quadruple& q);

struct ConstructOptions {
  std::size_t retry_cap = 64;
  SolveOptions solve;
};

/// Deterministic construction: seed_index selects the seed from the stream of
/// norm ±1 solutions; degenerate seeds are skipped (up to retry_cap).
/// n = (4m, 4k) is reduced to (m, k) and rescaled by 2 when (m, k) is covered.
Quadruple construct(const RingCtx& ctx, const RingElt& n, std::size_t seed_index = 0,
                    const ConstructOptions& options = {});

/// {w·a_i} with property D(w²·n); roots are recomputed and re-verified.
Quadruple scale_quadruple(const RingCtx& ctx, const Quadruple& q, const RingElt& w);

struct VerifyReport {
  bool nonzero = false;
  bool distinct = false;
  std::array<std::optional<RingElt>, 6> roots;
  std::vector<std::pair<int, int>> failing_pairs;

  bool ok() const { return nonzero && distinct && failing_pairs.empty(); }
};

/// Checks that every a_i·a_j + n is a square, and that the elements are
/// nonzero and distinct. Failures are reported, not thrown.
VerifyReport verify(const RingCtx& ctx, const RingElt& n, const std::array<RingElt, 4>& elements);

}  // namespace dnq
