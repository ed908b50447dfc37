#include "dnq/conjecture.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "dnq/primes.hpp"

namespace dnq {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

namespace {

// Residues (re mod 4, im mod 4) reached by α² − β² over all α, β mod 4.
std::array<std::array<bool, 4>, 4> reachable_residues(int d_mod_4) {
  std::array<std::array<bool, 4>, 4> seen{};
  std::vector<std::pair<int, int>> squares;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) squares.emplace_back((a * a + d_mod_4 * b * b) % 4, (2 * a * b) % 4);
  }
  for (auto [ar, ai] : squares) {
    for (auto [br, bi] : squares) seen[(ar - br + 4) % 4][(ai - bi + 4) % 4] = true;
  }
  return seen;
}

std::pair<RingElt, RingElt> from_factors(const RingElt& g, const RingElt& h) {
  const RingElt sum = g + h;
  const RingElt diff = h - g;
  return {RingElt{sum.re / 2, sum.im / 2}, RingElt{diff.re / 2, diff.im / 2}};
}

// Looks for n = g·h with g + h even. Factors g are visited shell by shell in
// max(|re|, |im|).
std::optional<std::pair<RingElt, RingElt>> search_difference(const RingCtx& ctx, const RingElt& n,
                                                              const Int& bound) {
  auto try_factor = [&](const RingElt& g) -> std::optional<std::pair<RingElt, RingElt>> {
    const auto h = try_divexact(ctx, n, g);
    if (!h) return std::nullopt;
    const RingElt sum = g + *h;
    if (mod_small(sum.re, 2) != 0 || mod_small(sum.im, 2) != 0) return std::nullopt;
    return from_factors(g, *h);
  };
  for (Int s = 1; s <= bound; ++s) {
    for (Int t = -s; t <= s; ++t) {
      for (const RingElt& g : {RingElt{s, t}, RingElt{-s, t}, RingElt{t, s}, RingElt{t, -s}}) {
        if (auto w = try_factor(g)) return w;
      }
    }
  }
  return std::nullopt;
}

// First class representative of `set` dividing n, as (α, β).
std::optional<std::pair<RingElt, RingElt>> split_by(const RingCtx& ctx, const RingElt& n,
                                                     const PellSolutionSet& set) {
  for (const RingElt& g : set.primitives) {
    if (auto h = try_divexact(ctx, n, g)) return from_factors(g, *h);
  }
  return std::nullopt;
}

// n = 2w with Nm(w) odd. Both factors of n = g·h lie in the ramified prime
// P above 2 but not in P² = (2), so g ≡ h (mod 2) holds automatically and
// |Nm g|·|Nm h| = 4·|Nm w| with both norms exactly divisible by 2.
void decide_ramified(const RingCtx& ctx, const RingElt& n, const SolveOptions& solve, DiffSquaresResult& out) {
  out.plus_two = solve_norm(ctx, Int(2), solve);
  out.minus_two = solve_norm(ctx, Int(-2), solve);
  for (const auto* set : {&*out.plus_two, &*out.minus_two}) {
    if (auto w = split_by(ctx, n, *set)) {
      out.method = "norm-pm2";
      out.verdict = Verdict::Yes;
      out.witness = w;
      return;
    }
  }

  out.method = "ramified-divisors";
  const RingElt half{n.re / 2, n.im / 2};
  const Int cofactor = abs(norm(ctx, half));
  out.cofactor_norm = cofactor;
  const Int root = isqrt(cofactor);
  const Int a_max = kMaxPellTarget / 2;
  for (Int a = 3; a <= root && a <= a_max; a += 2) {
    if (cofactor % a != 0) continue;
    for (const Int& target : {Int(2 * a), Int(-2 * a)}) {
      out.divisor_sets.push_back(solve_norm(ctx, target, solve));
      if (auto w = split_by(ctx, n, out.divisor_sets.back())) {
        out.verdict = Verdict::Yes;
        out.witness = w;
        return;
      }
    }
  }
  // The cofactor h covers the divisors above √Nm(w).
  out.verdict = root <= a_max ? Verdict::No : Verdict::Unknown;
}

}  // namespace

DiffSquaresResult representable_diff_squares(const RingCtx& ctx, const RingElt& n, const DiffSquaresOptions& options) {
  if (n.is_zero()) throw Error(Errc::ZeroElement, "n must be nonzero");
  DiffSquaresResult out;
  const ClassTag cls = classify_mod4(n);

  const auto residues = reachable_residues(mod_small(ctx.d(), 4));
  if (!residues[cls.re_offset][cls.im_offset]) {
    out.verdict = Verdict::No;
    out.method = "residue-mod-4";
    return out;
  }

  if (mod_small(ctx.d(), 4) == 2 && cls.re_offset == 2 && cls.im_offset % 2 == 0) {
    try {
      decide_ramified(ctx, n, options.solve, out);
    } catch (const Error& e) {
      if (e.code() != Errc::BoundOverflowPolicy) throw;
      out.verdict = Verdict::Unknown;
    }
    return out;
  }

  out.method = "search";
  out.search_bound = options.factor_bound;
  out.witness = search_difference(ctx, n, options.factor_bound);
  out.verdict = out.witness ? Verdict::Yes : Verdict::Unknown;
  return out;
}

NormPm2Certificate norm_pm2_impossible(const RingCtx& ctx, const SolveOptions& options) {
  const HypothesisReport report = hypothesis_check(ctx, options);
  if (!report.holds()) {
    throw Error(Errc::PreconditionFailed,
                "Z[sqrt(" + to_string(ctx.d()) + ")] lacks a norm -1 or norm 6 element");
  }
  NormPm2Certificate cert{solve_norm(ctx, Int(2), options), solve_norm(ctx, Int(-2), options)};
  if (cert.plus_two.solvable || cert.minus_two.solvable) {
    throw Error(Errc::TheoremViolation, "norm +-2 element found in Z[sqrt(" + to_string(ctx.d()) + ")]");
  }
  return cert;
}

std::vector<PrimeWitness> prime_witness_search(const RingCtx& ctx, std::uint64_t x_max) {
  if (x_max > (std::uint64_t{1} << 31)) throw Error(Errc::InvalidArgument, "x_max must be at most 2^31");
  const auto d = static_cast<std::uint64_t>(ctx.d());
  std::vector<PrimeWitness> out;
  for (std::uint64_t x = 1; x <= x_max; x += 2) {
    const std::uint64_t x2 = x * x;
    for (std::uint64_t y = 1; d * y * y < x2; y += 2) {
      const std::uint64_t p = x2 - d * y * y;
      if (p % 4 != 3 || !is_prime_u64(p)) continue;
      out.push_back({Int((x - 1) / 2), Int((y - 1) / 2), Int(p)});
    }
  }
  return out;
}

CounterexampleRecord make_counterexample(const RingCtx& ctx, const Int& m, const Int& k,
                                         const ConstructOptions& options) {
  const Int x = 2 * m + 1;
  const Int y = 2 * k + 1;
  const Int p = x * x - ctx.d() * y * y;
  if (p <= 0 || mod_small(p, 4) != 3 || !is_prime(p)) {
    throw Error(Errc::NotAWitness, "(2m+1)^2 - d(2k+1)^2 = " + to_string(p) + " is not a prime = 3 mod 4");
  }

  CounterexampleRecord rec;
  rec.d = ctx.d();
  rec.n = RingElt{4 * m + 2, 4 * k + 2};
  rec.witness = {m, k, p};
  rec.nonrep_cert = norm_pm2_impossible(ctx, options.solve);
  rec.representability = representable_diff_squares(ctx, rec.n, DiffSquaresOptions{Int(200), options.solve});
  if (rec.representability.verdict != Verdict::No) {
    throw Error(Errc::TheoremViolation, "n = " + to_string(rec.n.re) + " + " + to_string(rec.n.im) +
                                            "sqrt(d) was not certified as a non-difference of squares");
  }
  rec.quadruple = construct(ctx, rec.n, 0, options);
  if (!verify(ctx, rec.n, rec.quadruple.elements).ok()) {
    throw Error(Errc::VerificationFailure, "counterexample quadruple fails verification");
  }
  return rec;
}

HuntResult hunt_d(std::uint64_t lprime_max) {
  HuntResult out;
  std::set<Int> seen;
  for (std::uint64_t lp = 0; lp <= lprime_max; ++lp) {
    for (int sign : {1, -1}) {
      DCandidate c;
      c.lprime = lp;
      c.sign = sign;
      c.l = 3 * c.lprime * c.lprime + sign * 2 * c.lprime;
      c.p = 24 * c.lprime * (3 * c.lprime + 2 * sign) + 5;
      if (!is_prime(c.p)) continue;
      c.d = 2 * c.p;
      if (!seen.insert(c.d).second) continue;
      c.witness6 = RingElt{abs(12 * c.lprime + 4 * sign), Int(1)};

      const std::string tag = "l'=" + to_string(c.lprime) + (sign > 0 ? "+" : "-") + " d=" + to_string(c.d);
      if (c.d != 48 * c.l + 10 || mod_small(c.p, 8) != 5) {
        out.anomalies.push_back(tag + ": parametrization mismatch");
        continue;
      }
      c.norm_six_verified = c.witness6.re * c.witness6.re - c.d == 6;
      try {
        const RingCtx ctx = make_ctx(c.d);
        c.norm_minus_one_verified = ctx.unit_norm() == -1;
      } catch (const Error& e) {
        out.anomalies.push_back(tag + ": " + e.what());
        continue;
      }
      if (!c.norm_six_verified) out.anomalies.push_back(tag + ": witness does not have norm 6");
      if (!c.norm_minus_one_verified) out.anomalies.push_back(tag + ": no unit of norm -1");
      if (c.norm_six_verified && c.norm_minus_one_verified) out.candidates.push_back(std::move(c));
    }
  }
  std::sort(out.candidates.begin(), out.candidates.end(),
            [](const DCandidate& a, const DCandidate& b) { return a.d < b.d; });
  return out;
}

}  // namespace dnq
