#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>

#include "dnq/bigint.hpp"
#include "dnq/error.hpp"

namespace dnq {

struct PellSolutionSet;

/// An element re + im·√d. Elements do not know their ring; every operation
/// that depends on d takes a RingCtx.
struct RingElt {
  Int re;
  Int im;

  RingElt() = default;
  RingElt(Int re_part, Int im_part) : re(std::move(re_part)), im(std::move(im_part)) {}
  explicit RingElt(Int rational) : re(std::move(rational)), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend bool operator==(const RingElt&, const RingElt&) = default;
};

RingElt operator+(const RingElt& x, const RingElt& y);
RingElt operator-(const RingElt& x, const RingElt& y);
RingElt operator-(const RingElt& x);
RingElt operator*(const Int& k, const RingElt& x);
RingElt conj(const RingElt& x);

/// (a, b) ordering by (re, im); used only to give containers a deterministic order.
bool lex_less(const RingElt& x, const RingElt& y);

std::ostream& operator<<(std::ostream& os, const RingElt& x);

/// The ring Z[√d] for a square-free d ≡ 2 (mod 4), together with its
/// fundamental unit. Copies share one solution cache.
class RingCtx {
 public:
  const Int& d() const { return state_->d; }

  /// Minimal solution with y > 0 of x² − d·y² = ±1.
  const RingElt& fund_unit() const { return state_->fund_unit; }
  int unit_norm() const { return state_->unit_norm; }

  /// Fundamental solution of x² − d·y² = +1 (the square of fund_unit when
  /// that has norm −1).
  const RingElt& norm_one_unit() const { return state_->norm_one_unit; }

  /// Throws ContextMismatch when an object built over another radicand is
  /// handed to this ring.
  void require_same_ring(const Int& other_d, const char* what) const;

  std::shared_ptr<const PellSolutionSet> cached_solutions(const Int& target) const;
  void store_solutions(const Int& target, std::shared_ptr<const PellSolutionSet> set) const;

 private:
  friend RingCtx make_ctx(const Int& d);

  struct State {
    Int d;
    RingElt fund_unit;
    int unit_norm = 0;
    RingElt norm_one_unit;
    mutable std::mutex cache_mutex;
    mutable std::map<Int, std::shared_ptr<const PellSolutionSet>> cache;
  };

  explicit RingCtx(std::shared_ptr<State> state) : state_(std::move(state)) {}

  std::shared_ptr<State> state_;
};

/// Largest radicand accepted by make_ctx. Continued-fraction periods grow
/// like √d, so this keeps unit computations tractable.
inline const Int kMaxRadicand = Int(1000000000);

/// Validates d (positive, square-free, ≡ 2 mod 4, at most kMaxRadicand) and
/// computes the fundamental unit.
RingCtx make_ctx(const Int& d);

/// Trial division up to the cube root, then a square test on the cofactor.
bool is_square_free(const Int& n);

RingElt mul(const RingCtx& ctx, const RingElt& x, const RingElt& y);
RingElt square(const RingCtx& ctx, const RingElt& x);
Int norm(const RingCtx& ctx, const RingElt& x);

/// q with q·den = num. Throws DivisionByZeroNorm or NotDivisible.
RingElt divexact(const RingCtx& ctx, const RingElt& num, const RingElt& den);

/// divexact without the exceptions: nullopt on a zero-norm or non-dividing den.
std::optional<RingElt> try_divexact(const RingCtx& ctx, const RingElt& num, const RingElt& den);

/// Square root in the ring, normalized by canonical_sign; nullopt when x is
/// not a square.
std::optional<RingElt> sqrt_in_ring(const RingCtx& ctx, const RingElt& x);

/// ±x with re > 0, or re = 0 and im ≥ 0.
RingElt canonical_sign(RingElt x);

// --- residue classes modulo (4, 4) -------------------------------------------

enum class ClassFamily { S, T };

/// n = (4m + re_offset, 4k + im_offset) with offsets in {0,1,2,3}.
struct ClassTag {
  int re_offset = 0;
  int im_offset = 0;
  Int m;
  Int k;

  ClassFamily family() const;

  /// 1..5 for the five T-classes with a direct quadruple construction.
  std::optional<int> case_id() const;

  RingElt element() const;
  std::string label() const;

  friend bool operator==(const ClassTag&, const ClassTag&) = default;
};

ClassTag classify_mod4(const RingElt& n);

// --- residue forms of norm ±1, ±6 elements -----------------------------------

enum class NormFormKind {
  UnitPlus,      // (6p ± 1, 6q), norm 1
  UnitMinus,     // (6p + 3, 6q ± 1), norm −1
  NormSix,       // (12p ± 4, 6q ± 1), norm 6
  NormMinusSix,  // (12p ± 2, 6q ± 1), norm −6
};

std::string_view norm_form_name(NormFormKind kind);

struct NormForm {
  NormFormKind kind;
  Int p;
  Int q;
  int re_sign = 1;
  int im_sign = 1;

  RingElt element() const;
};

/// Extracts the residue form mandated for an element of norm 1, −1, 6 or −6.
/// Throws OutOfScopeNorm for other norms and FormViolation when the element
/// does not have the mandated form.
NormForm norm_form_classify(const RingCtx& ctx, const RingElt& x);

}  // namespace dnq
