#include "dnq/quadring.hpp"

#include <array>
#include <sstream>

#include "dnq/pell.hpp"

namespace dnq {

RingElt operator+(const RingElt& x, const RingElt& y) { return {x.re + y.re, x.im + y.im}; }
RingElt operator-(const RingElt& x, const RingElt& y) { return {x.re - y.re, x.im - y.im}; }
RingElt operator-(const RingElt& x) { return {-x.re, -x.im}; }
RingElt operator*(const Int& k, const RingElt& x) { return {k * x.re, k * x.im}; }
RingElt conj(const RingElt& x) { return {x.re, -x.im}; }

bool lex_less(const RingElt& x, const RingElt& y) {
  if (x.re != y.re) return x.re < y.re;
  return x.im < y.im;
}

std::ostream& operator<<(std::ostream& os, const RingElt& x) {
  return os << '(' << x.re << ", " << x.im << ')';
}

void RingCtx::require_same_ring(const Int& other_d, const char* what) const {
  if (other_d != d()) {
    throw Error(Errc::ContextMismatch, std::string(what) + " belongs to Z[sqrt(" + to_string(other_d) +
                                           ")], not Z[sqrt(" + to_string(d()) + ")]");
  }
}

std::shared_ptr<const PellSolutionSet> RingCtx::cached_solutions(const Int& target) const {
  std::lock_guard lock(state_->cache_mutex);
  auto it = state_->cache.find(target);
  return it == state_->cache.end() ? nullptr : it->second;
}

void RingCtx::store_solutions(const Int& target, std::shared_ptr<const PellSolutionSet> set) const {
  std::lock_guard lock(state_->cache_mutex);
  state_->cache.emplace(target, std::move(set));
}

bool is_square_free(const Int& n) {
  if (n <= 0) return false;
  Int rest = n;
  for (Int p = 2; p * p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    rest /= p;
    if (rest % p == 0) return false;
  }
  // Every prime factor left exceeds the cube root, so rest is 1, q, q·r or q².
  return rest == 1 || !is_square(rest);
}

RingCtx make_ctx(const Int& d) {
  if (d <= 0) throw Error(Errc::NonPositiveRadicand, "d must be positive, got " + to_string(d));
  if (d > kMaxRadicand) {
    throw Error(Errc::RadicandTooLarge, "d = " + to_string(d) + " exceeds " + to_string(kMaxRadicand));
  }
  if (mod_small(d, 4) != 2) {
    throw Error(Errc::WrongResidue, "d = " + to_string(d) + " is not 2 mod 4");
  }
  if (!is_square_free(d)) throw Error(Errc::NotSquareFree, "d = " + to_string(d) + " is not square-free");

  auto state = std::make_shared<RingCtx::State>();
  state->d = d;
  const FundamentalUnit unit = fundamental_unit(d);
  state->fund_unit = unit.unit;
  state->unit_norm = unit.norm;
  if (unit.norm == 1) {
    state->norm_one_unit = unit.unit;
  } else {
    const RingElt& e = unit.unit;
    state->norm_one_unit = {e.re * e.re + d * e.im * e.im, 2 * e.re * e.im};
  }
  return RingCtx(std::move(state));
}

RingElt mul(const RingCtx& ctx, const RingElt& x, const RingElt& y) {
  return {x.re * y.re + ctx.d() * x.im * y.im, x.re * y.im + x.im * y.re};
}

RingElt square(const RingCtx& ctx, const RingElt& x) { return mul(ctx, x, x); }

Int norm(const RingCtx& ctx, const RingElt& x) { return x.re * x.re - ctx.d() * x.im * x.im; }

RingElt divexact(const RingCtx& ctx, const RingElt& num, const RingElt& den) {
  const Int den_norm = norm(ctx, den);
  if (den_norm == 0) throw Error(Errc::DivisionByZeroNorm, "divisor has norm zero");
  const RingElt scaled = mul(ctx, num, conj(den));
  RingElt q;
  if (!divides_into(scaled.re, den_norm, q.re) || !divides_into(scaled.im, den_norm, q.im)) {
    std::ostringstream msg;
    msg << den << " does not divide " << num;
    throw Error(Errc::NotDivisible, msg.str());
  }
  return q;
}

std::optional<RingElt> try_divexact(const RingCtx& ctx, const RingElt& num, const RingElt& den) {
  const Int den_norm = norm(ctx, den);
  if (den_norm == 0) return std::nullopt;
  const RingElt scaled = mul(ctx, num, conj(den));
  RingElt q;
  if (!divides_into(scaled.re, den_norm, q.re) || !divides_into(scaled.im, den_norm, q.im)) return std::nullopt;
  return q;
}

RingElt canonical_sign(RingElt x) {
  if (x.re < 0 || (x.re == 0 && x.im < 0)) {
    x.re = -x.re;
    x.im = -x.im;
  }
  return x;
}

std::optional<RingElt> sqrt_in_ring(const RingCtx& ctx, const RingElt& x) {
  // (u + v√d)² = (u² + d·v², 2uv), and its norm is (u² − d·v²)². So the root's
  // norm is ±√Nm(x), which pins u² and d·v² down to two candidate splits.
  if (x.re < 0) return std::nullopt;
  if (x.is_zero()) return RingElt{};
  if (x.im % 2 != 0) return std::nullopt;

  Int t;
  if (!is_square(norm(ctx, x), &t)) return std::nullopt;

  const std::array<Int, 2> u_squared_candidates = {x.re + t, x.re - t};
  for (const Int& twice_u2 : u_squared_candidates) {
    if (twice_u2 % 2 != 0 || twice_u2 < 0) continue;
    const Int u2 = twice_u2 / 2;
    const Int dv2 = x.re - u2;
    Int u, v2, v;
    if (!is_square(u2, &u)) continue;
    if (!divides_into(dv2, ctx.d(), v2) || !is_square(v2, &v)) continue;
    if (x.im < 0) v = -v;
    if (2 * u * v != x.im) continue;
    return canonical_sign({u, v});
  }
  return std::nullopt;
}

// --- residue classes ------------------------------------------------------------

ClassFamily ClassTag::family() const {
  // T: (0,0) (1,0) (1,2) (2,0) (2,2) (3,0) (3,2); everything else is S.
  if (im_offset % 2 == 1) return ClassFamily::S;
  if (re_offset == 0 && im_offset == 2) return ClassFamily::S;
  return ClassFamily::T;
}

std::optional<int> ClassTag::case_id() const {
  if (re_offset == 1 && im_offset == 0) return 1;
  if (re_offset == 1 && im_offset == 2) return 2;
  if (re_offset == 3 && im_offset == 0) return 3;
  if (re_offset == 3 && im_offset == 2) return 4;
  if (re_offset == 2 && im_offset == 2) return 5;
  return std::nullopt;
}

RingElt ClassTag::element() const { return {4 * m + re_offset, 4 * k + im_offset}; }

std::string ClassTag::label() const {
  auto part = [](const char* var, int offset) {
    std::string s = std::string("4") + var;
    if (offset != 0) s += "+" + std::to_string(offset);
    return s;
  };
  return "(" + part("m", re_offset) + "," + part("k", im_offset) + ")";
}

ClassTag classify_mod4(const RingElt& n) {
  ClassTag tag;
  tag.re_offset = mod_small(n.re, 4);
  tag.im_offset = mod_small(n.im, 4);
  tag.m = floor_div(n.re, 4);
  tag.k = floor_div(n.im, 4);
  return tag;
}

// --- norm forms -------------------------------------------------------------------

std::string_view norm_form_name(NormFormKind kind) {
  switch (kind) {
    case NormFormKind::UnitPlus: return "UnitPlus";
    case NormFormKind::UnitMinus: return "UnitMinus";
    case NormFormKind::NormSix: return "NormSix";
    case NormFormKind::NormMinusSix: return "NormMinusSix";
  }
  return "?";
}

RingElt NormForm::element() const {
  switch (kind) {
    case NormFormKind::UnitPlus: return {6 * p + re_sign, 6 * q};
    case NormFormKind::UnitMinus: return {6 * p + 3, 6 * q + im_sign};
    case NormFormKind::NormSix: return {12 * p + 4 * re_sign, 6 * q + im_sign};
    case NormFormKind::NormMinusSix: return {12 * p + 2 * re_sign, 6 * q + im_sign};
  }
  return {};
}

namespace {

// Splits value = modulus·p + sign·offset with sign = ±1; false if neither fits.
bool split_signed(const Int& value, int modulus, int offset, Int& p, int& sign) {
  const int r = mod_small(value, modulus);
  if (r == offset) {
    sign = 1;
  } else if (r == modulus - offset) {
    sign = -1;
  } else {
    return false;
  }
  p = (value - sign * offset) / modulus;
  return true;
}

[[noreturn]] void form_violation(const RingElt& x, const Int& n, const char* expected) {
  std::ostringstream msg;
  msg << "element " << x << " of norm " << n << " is not of the form " << expected;
  throw Error(Errc::FormViolation, msg.str());
}

}  // namespace

NormForm norm_form_classify(const RingCtx& ctx, const RingElt& x) {
  const Int n = norm(ctx, x);
  NormForm form{};
  if (n == 1) {
    form.kind = NormFormKind::UnitPlus;
    if (!split_signed(x.re, 6, 1, form.p, form.re_sign) || mod_small(x.im, 6) != 0) {
      form_violation(x, n, "(6a1 +- 1, 6b1)");
    }
    form.q = x.im / 6;
  } else if (n == -1) {
    form.kind = NormFormKind::UnitMinus;
    if (mod_small(x.re, 6) != 3 || !split_signed(x.im, 6, 1, form.q, form.im_sign)) {
      form_violation(x, n, "(6a +- 3, 6b +- 1)");
    }
    form.p = (x.re - 3) / 6;
  } else if (n == 6 || n == -6) {
    form.kind = n == 6 ? NormFormKind::NormSix : NormFormKind::NormMinusSix;
    const int offset = n == 6 ? 4 : 2;
    if (!split_signed(x.re, 12, offset, form.p, form.re_sign) ||
        !split_signed(x.im, 6, 1, form.q, form.im_sign)) {
      form_violation(x, n, n == 6 ? "(12M +- 4, 6N +- 1)" : "(12M +- 2, 6N +- 1)");
    }
  } else {
    throw Error(Errc::OutOfScopeNorm, "norm " + to_string(n) + " is not one of 1, -1, 6, -6");
  }
  return form;
}

}  // namespace dnq
