#include "dnq/builder.hpp"

#include <algorithm>
#include <sstream>

namespace dnq {
namespace {

RingElt halve(const RingElt& x, Errc code, const char* what) {
  RingElt h;
  if (!divides_into(x.re, 2, h.re) || !divides_into(x.im, 2, h.im)) {
    std::ostringstream msg;
    msg << what << " " << x << " is not divisible by 2";
    throw Error(code, msg.str());
  }
  return h;
}

Int exact_div(const Int& num, int den, const char* what) {
  Int q;
  if (!divides_into(num, den, q)) {
    throw Error(Errc::NonIntegralFormula, std::string(what) + ": " + to_string(num) + " / " + std::to_string(den));
  }
  return q;
}

bool is_even(const Int& x) { return mod_small(x, 2) == 0; }

}  // namespace

RingElt normalize_seed(const RingCtx& ctx, const RingElt& seed) {
  const Int n = norm(ctx, seed);
  if (n == 1 && mod_small(seed.re, 6) == 5) return -seed;
  if (n == -1 && mod_small(seed.im, 6) == 5) return -seed;
  return seed;
}

RingElt normalize_norm_six(const RingElt& v) {
  RingElt out = v;
  if (mod_small(out.re, 12) == 8) out.re = -out.re;
  if (mod_small(out.im, 6) == 5) out.im = -out.im;
  return out;
}

AuxElements default_aux(const RingCtx& ctx, const SolveOptions& options) {
  AuxElements aux;
  if (ctx.unit_norm() == -1) aux.norm_minus_one = normalize_seed(ctx, ctx.fund_unit());
  // The scan visits y in increasing order, so the first hit has the smallest |y|.
  const NormEvidence six = find_norm_witness(ctx, Int(6), options);
  if (six.witness) aux.norm_six = normalize_norm_six(*six.witness);
  return aux;
}

Factorization pick_factorization(const RingCtx& ctx, const ClassTag& cls, const AuxElements& aux) {
  if (cls.family() == ClassFamily::S) {
    throw Error(Errc::SClassNoQuadruple, "n in " + cls.label() + " admits no D(n)-quadruple");
  }
  const auto case_id = cls.case_id();
  if (!case_id) throw Error(Errc::UncoveredClass, "no direct construction for class " + cls.label());

  const RingElt n = cls.element();
  Factorization f;
  f.d = ctx.d();
  f.case_id = *case_id;
  switch (*case_id) {
    case 1:
    case 2: {
      if (!aux.norm_minus_one) throw Error(Errc::MissingAux, "case " + std::to_string(*case_id) + " needs a norm -1 element");
      const RingElt& u = *aux.norm_minus_one;
      if (norm(ctx, u) != -1) throw Error(Errc::InvalidArgument, "auxiliary element does not have norm -1");
      // 3n = (−3·conj(u)) · (u·n) because u·conj(u) = −1.
      f.alpha1 = Int(-3) * conj(u);
      f.alpha2 = mul(ctx, u, n);
      f.required_seed_norm = *case_id == 1 ? 1 : -1;
      break;
    }
    case 3:
    case 4:
      f.alpha1 = RingElt{Int(3), Int(0)};
      f.alpha2 = n;
      f.required_seed_norm = *case_id == 3 ? 1 : -1;
      break;
    case 5: {
      if (!aux.norm_six) throw Error(Errc::MissingAux, "case 5 needs a norm 6 element");
      const RingElt& v = *aux.norm_six;
      if (norm(ctx, v) != 6) throw Error(Errc::InvalidArgument, "auxiliary element does not have norm 6");
      // n = 2·(2m+1, 2k+1), so 3n = conj(v) · v · (2m+1, 2k+1).
      f.alpha1 = conj(v);
      f.alpha2 = mul(ctx, v, RingElt{2 * cls.m + 1, 2 * cls.k + 1});
      f.required_seed_norm = is_even(cls.m) ? 1 : -1;
      break;
    }
  }
  return f;
}

VerifyReport verify(const RingCtx& ctx, const RingElt& n, const std::array<RingElt, 4>& elements) {
  if (n.is_zero()) throw Error(Errc::ZeroElement, "n must be nonzero");
  VerifyReport report;
  report.nonzero = std::none_of(elements.begin(), elements.end(), [](const RingElt& e) { return e.is_zero(); });
  report.distinct = true;
  for (std::size_t p = 0; p < kPairs.size(); ++p) {
    const auto [i, j] = kPairs[p];
    if (elements[i] == elements[j]) report.distinct = false;
    report.roots[p] = sqrt_in_ring(ctx, mul(ctx, elements[i], elements[j]) + n);
    if (!report.roots[p]) report.failing_pairs.emplace_back(i, j);
  }
  return report;
}

Quadruple pair_engine(const RingCtx& ctx, const RingElt& n, const Factorization& fact, const RingElt& seed) {
  ctx.require_same_ring(fact.d, "factorization");
  if (n.is_zero()) throw Error(Errc::ZeroElement, "n must be nonzero");
  if (norm(ctx, seed) != fact.required_seed_norm) {
    throw Error(Errc::WrongSeedNorm, "seed norm must be " + std::to_string(fact.required_seed_norm));
  }
  if (mul(ctx, fact.alpha1, fact.alpha2) != Int(3) * n) {
    throw Error(Errc::InvalidArgument, "factorization does not multiply to 3n");
  }

  const RingElt a_plus_2r = halve(fact.alpha1 + fact.alpha2, Errc::ParityFailure, "alpha1 + alpha2");
  const RingElt r = halve(a_plus_2r - seed, Errc::ParityFailure, "a + 2r - a");
  // b = (r² − n)/a; the seed is a unit, so a⁻¹ = Nm(a)·conj(a).
  const RingElt b = Int(fact.required_seed_norm) * mul(ctx, square(ctx, r) - n, conj(seed));

  Quadruple q;
  q.d = ctx.d();
  q.n = n;
  q.seed = seed;
  q.r = r;
  q.case_id = fact.case_id;
  q.elements = {seed, b, seed + b + Int(2) * r, seed + Int(4) * b + Int(4) * r};

  const VerifyReport report = verify(ctx, n, q.elements);
  if (!report.nonzero || !report.distinct) {
    std::ostringstream msg;
    msg << "seed " << seed << " gives a zero or repeated element";
    throw Error(Errc::Degenerate, msg.str());
  }
  if (!report.failing_pairs.empty()) {
    throw Error(Errc::VerificationFailure, "constructed set fails the D(n) property");
  }
  // (a + 2r)² − 3n must equal α² with α = (alpha1 − alpha2)/2.
  const RingElt alpha = halve(fact.alpha1 - fact.alpha2, Errc::VerificationFailure, "alpha1 - alpha2");
  if (square(ctx, a_plus_2r) - Int(3) * n != square(ctx, alpha)) {
    throw Error(Errc::VerificationFailure, "(a + 2r)^2 - 3n is not alpha^2");
  }
  for (std::size_t p = 0; p < 6; ++p) q.roots[p] = *report.roots[p];
  return q;
}

ClosedForm closed_form(const RingCtx& ctx, int case_id, const ClosedFormParams& p) {
  const Int& d = ctx.d();
  const Int half_d = exact_div(d, 2, "d/2");
  const Int& m = p.m;
  const Int& k = p.k;
  const Int& a1 = p.a1;
  const Int& b1 = p.b1;

  ClosedForm out;
  RingElt seed_inverse;  // a⁻¹ for the seed of this branch
  Int n_re, n_im;
  switch (case_id) {
    case 1: {
      const Int& al = p.alpha;
      const Int& be = p.beta;
      out.r = {m * (2 * al + 1) + k * d * (2 * be + 1) - al - 1 - 3 * a1,
               m * (2 * be + 1) + k * (2 * al + 1) + 2 * be + 1 - 3 * b1};
      seed_inverse = {6 * a1 + 1, -6 * b1};
      n_re = 4 * m + 1;
      n_im = 4 * k;
      break;
    }
    case 2: {
      const Int& al = p.alpha;
      const Int& be = p.beta;
      out.r = {2 * m * al - al + m - 2 - 3 * a1 + half_d * (4 * be * k + 2 * be + 2 * k + 1),
               2 * al * k + al + k + 1 - 3 * b1 + 2 * m * be + 2 * be + m};
      seed_inverse = {-6 * a1 - 3, 6 * b1 + 1};
      n_re = 4 * m + 1;
      n_im = 4 * k + 2;
      break;
    }
    case 3:
      out.r = {m + 1 - 3 * a1, k - 3 * b1};
      seed_inverse = {6 * a1 + 1, -6 * b1};
      n_re = 4 * m + 3;
      n_im = 4 * k;
      break;
    case 4:
      out.r = {m - 3 * a1, k - 3 * b1};
      seed_inverse = {-6 * a1 - 3, 6 * b1 + 1};
      n_re = 4 * m + 3;
      n_im = 4 * k + 2;
      break;
    case 5: {
      const Int& big_m = p.big_m;
      const Int& big_n = p.big_n;
      const Int common = 6 * big_m * m + 6 * big_m + 2 * m + 2 + half_d * (6 * big_n * k + 3 * big_n + k);
      const Int im_common = 6 * big_m * k + 3 * big_m + 2 * k + 1 + 3 * big_n * m;
      if (is_even(m)) {
        out.r = {common + exact_div(half_d - 1, 2, "(d/2 - 1)/2") - 3 * a1,
                 im_common + exact_div(m, 2, "m/2") - 3 * b1};
        seed_inverse = {6 * a1 + 1, -6 * b1};
      } else {
        out.r = {common + exact_div(half_d - 3, 2, "(d/2 - 3)/2") - 3 * a1,
                 im_common + exact_div(m - 1, 2, "(m - 1)/2") - 3 * b1};
        seed_inverse = {-6 * a1 - 3, 6 * b1 + 1};
      }
      n_re = 4 * m + 2;
      n_im = 4 * k + 2;
      break;
    }
    default:
      throw Error(Errc::InvalidArgument, "closed forms exist for cases 1-5 only");
  }
  const RingElt r_sq_minus_n{out.r.re * out.r.re + d * out.r.im * out.r.im - n_re,
                             2 * out.r.re * out.r.im - n_im};
  out.b = mul(ctx, r_sq_minus_n, seed_inverse);
  return out;
}

ClosedFormParams closed_form_params(const Quadruple& q) {
  const ClassTag cls = classify_mod4(q.n);
  if (q.scale_steps != 0 || cls.case_id() != q.case_id) {
    throw Error(Errc::InvalidArgument, "quadruple was not produced directly by the engine");
  }
  ClosedFormParams p;
  p.m = cls.m;
  p.k = cls.k;
  // Seed shape is fixed by the parity of its imaginary part: (6a1+1, 6b1) or (6a1+3, 6b1+1).
  if (is_even(q.seed.im)) {
    p.a1 = exact_div(q.seed.re - 1, 6, "seed a1");
    p.b1 = exact_div(q.seed.im, 6, "seed b1");
  } else {
    p.a1 = exact_div(q.seed.re - 3, 6, "seed a1");
    p.b1 = exact_div(q.seed.im - 1, 6, "seed b1");
  }
  if (q.case_id == 1 || q.case_id == 2) {
    if (!q.aux) throw Error(Errc::MissingAux, "quadruple does not record its norm -1 element");
    p.alpha = exact_div(q.aux->re - 1, 2, "alpha");
    p.beta = exact_div(q.aux->im - 1, 2, "beta");
  } else if (q.case_id == 5) {
    if (!q.aux) throw Error(Errc::MissingAux, "quadruple does not record its norm 6 element");
    p.big_m = exact_div(q.aux->re - 4, 12, "M");
    p.big_n = exact_div(q.aux->im - 1, 6, "N");
  }
  return p;
}

Quadruple scale_quadruple(const RingCtx& ctx, const Quadruple& q, const RingElt& w) {
  ctx.require_same_ring(q.d, "quadruple");
  if (w.is_zero()) throw Error(Errc::ZeroScalar, "scaling by zero");
  Quadruple out = q;
  for (auto& e : out.elements) e = mul(ctx, w, e);
  out.n = mul(ctx, square(ctx, w), q.n);
  out.seed = mul(ctx, w, q.seed);
  out.r = mul(ctx, w, q.r);
  out.scale_steps = q.scale_steps + 1;
  const VerifyReport report = verify(ctx, out.n, out.elements);
  if (!report.ok()) throw Error(Errc::VerificationFailure, "scaled quadruple fails verification");
  for (std::size_t p = 0; p < 6; ++p) out.roots[p] = *report.roots[p];
  return out;
}

Quadruple construct(const RingCtx& ctx, const RingElt& n, std::size_t seed_index, const ConstructOptions& options) {
  if (n.is_zero()) throw Error(Errc::ZeroElement, "n must be nonzero");
  const ClassTag cls = classify_mod4(n);
  if (cls.family() == ClassFamily::S) {
    throw Error(Errc::SClassNoQuadruple, "n in " + cls.label() + " admits no D(n)-quadruple");
  }

  if (cls.re_offset == 0 && cls.im_offset == 0) {
    // n = 4·(m, k): build for (m, k) and scale by w = 2.
    const RingElt quarter{cls.m, cls.k};
    Quadruple inner;
    try {
      inner = construct(ctx, quarter, seed_index, options);
    } catch (const Error& e) {
      if (e.code() != Errc::SClassNoQuadruple && e.code() != Errc::UncoveredClass) throw;
      std::ostringstream msg;
      msg << "n = 4*" << quarter << " and " << quarter << " is not covered";
      throw Error(Errc::UncoveredClass, msg.str());
    }
    return scale_quadruple(ctx, inner, RingElt{Int(2), Int(0)});
  }

  const auto case_id = cls.case_id();
  if (!case_id) throw Error(Errc::UncoveredClass, "no construction for class " + cls.label());

  AuxElements aux;
  if (*case_id == 1 || *case_id == 2) {
    if (ctx.unit_norm() == -1) aux.norm_minus_one = normalize_seed(ctx, ctx.fund_unit());
  } else if (*case_id == 5) {
    const NormEvidence six = find_norm_witness(ctx, Int(6), options.solve);
    if (six.witness) aux.norm_six = normalize_norm_six(*six.witness);
  }
  const Factorization fact = pick_factorization(ctx, cls, aux);

  if (fact.required_seed_norm == -1 && ctx.unit_norm() != -1) {
    throw Error(Errc::MissingAux, "no unit of norm -1 in Z[sqrt(" + to_string(ctx.d()) + ")]");
  }
  const Int seed_norm(fact.required_seed_norm);
  for (std::size_t i = seed_index; i < seed_index + options.retry_cap; ++i) {
    const RingElt seed = normalize_seed(ctx, enumerate_norm(ctx, seed_norm, i + 1, options.solve)[i]);
    try {
      Quadruple q = pair_engine(ctx, n, fact, seed);
      q.seed_index = i;
      if (*case_id == 1 || *case_id == 2) q.aux = aux.norm_minus_one;
      if (*case_id == 5) q.aux = aux.norm_six;
      return q;
    } catch (const Error& e) {
      if (e.code() != Errc::Degenerate) throw;
    }
  }
  throw Error(Errc::RetriesExhausted,
              "no nondegenerate seed among " + std::to_string(options.retry_cap) + " candidates");
}

}  // namespace dnq
