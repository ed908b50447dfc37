#include "dnq/pell.hpp"

#include <algorithm>
#include <set>

namespace dnq {

CFExpansion cf_sqrt(const Int& d) {
  if (d < 2) throw Error(Errc::InvalidArgument, "cf_sqrt needs d >= 2");
  CFExpansion cf;
  cf.a0 = isqrt(d);
  if (cf.a0 * cf.a0 == d) throw Error(Errc::PerfectSquare, to_string(d) + " is a perfect square");

  // Complete quotients (P + √d)/Q; the period closes when Q returns to 1.
  Int p = 0;
  Int q = 1;
  Int a = cf.a0;
  do {
    p = a * q - p;
    q = (d - p * p) / q;
    a = (cf.a0 + p) / q;
    cf.period.push_back(a);
  } while (q != 1);
  return cf;
}

FundamentalUnit fundamental_unit(const Int& d) {
  const CFExpansion cf = cf_sqrt(d);
  Int p_prev = 1, q_prev = 0;
  Int p = cf.a0, q = 1;
  for (std::size_t i = 0; i + 1 < cf.period.size(); ++i) {
    Int p_next = cf.period[i] * p + p_prev;
    Int q_next = cf.period[i] * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
  }
  const Int n = p * p - d * q * q;
  if (n != 1 && n != -1) {
    throw Error(Errc::TheoremViolation, "period convergent of sqrt(" + to_string(d) + ") has norm " + to_string(n));
  }
  return {RingElt{p, q}, n == 1 ? 1 : -1};
}

Int classical_bound(const RingCtx& ctx, const Int& target) {
  const Int& x1 = ctx.norm_one_unit().re;
  const Int shifted = target > 0 ? x1 - 1 : x1 + 1;
  return isqrt(abs(target) * shifted / (2 * ctx.d()));
}

namespace {

void check_target(const Int& target) {
  if (target == 0) throw Error(Errc::InvalidArgument, "target norm must be nonzero");
  if (abs(target) > kMaxPellTarget) {
    throw Error(Errc::InvalidArgument, "|N| = " + to_string(abs(target)) + " exceeds " + to_string(kMaxPellTarget));
  }
}

// Calls visit(x, y) for each solution with 0 ≤ y ≤ limit (both signs of x),
// in increasing y, until visit returns false. Returns false if stopped early.
template <typename Visitor>
bool scan_solutions(const RingCtx& ctx, const Int& target, const Int& limit, Visitor&& visit) {
  const Int& d = ctx.d();
  const Int top = d * limit * limit + abs(target);
  if (top < (Int(1) << 125)) {
    const auto d128 = static_cast<u128>(d);
    const auto lim = static_cast<std::uint64_t>(limit);
    const bool negative = target < 0;
    const auto mag = static_cast<u128>(abs(target));
    for (std::uint64_t y = 0; y <= lim; ++y) {
      const u128 dy2 = d128 * y * y;
      u128 t;
      if (negative) {
        if (dy2 < mag) continue;
        t = dy2 - mag;
      } else {
        t = dy2 + mag;
      }
      u128 x;
      if (!is_square_u128(t, &x)) continue;
      const Int xi(x);
      if (!visit(RingElt{xi, Int(y)})) return false;
      if (x != 0 && !visit(RingElt{-xi, Int(y)})) return false;
    }
    return true;
  }
  for (Int y = 0; y <= limit; ++y) {
    const Int t = target + d * y * y;
    Int x;
    if (!is_square(t, &x)) continue;
    if (!visit(RingElt{x, y})) return false;
    if (x != 0 && !visit(RingElt{-x, y})) return false;
  }
  return true;
}

}  // namespace

bool same_class(const RingCtx& ctx, const Int& target, const RingElt& x, const RingElt& y) {
  const RingElt q = mul(ctx, x, conj(y));
  return q.re % target == 0 && q.im % target == 0;
}

PellSolutionSet solve_norm(const RingCtx& ctx, const Int& target, const SolveOptions& options) {
  check_target(target);
  if (auto cached = ctx.cached_solutions(target)) return *cached;

  PellSolutionSet set;
  set.d = ctx.d();
  set.target = target;
  if (target == 1 || target == -1) {
    set.method = SolveMethod::UnitGroup;
    set.search_bound = 0;
    if (target == 1) {
      set.primitives.push_back(RingElt{Int(1), Int(0)});
    } else if (ctx.unit_norm() == -1) {
      set.primitives.push_back(ctx.fund_unit());
    }
  } else {
    set.method = SolveMethod::BoundedScan;
    set.search_bound = classical_bound(ctx, target);
    if (set.search_bound > options.bound_ceiling) {
      throw Error(Errc::BoundOverflowPolicy, "search bound " + to_string(set.search_bound) + " for N = " +
                                                 to_string(target) + " exceeds ceiling " +
                                                 to_string(options.bound_ceiling));
    }
    scan_solutions(ctx, target, set.search_bound, [&](const RingElt& s) {
      const bool known = std::any_of(set.primitives.begin(), set.primitives.end(),
                                     [&](const RingElt& p) { return same_class(ctx, target, s, p); });
      if (!known) set.primitives.push_back(s);
      return true;
    });
  }
  set.solvable = !set.primitives.empty();
  ctx.store_solutions(target, std::make_shared<const PellSolutionSet>(set));
  return set;
}

std::vector<RingElt> enumerate_norm(const RingCtx& ctx, const Int& target, std::size_t count,
                                    const SolveOptions& options) {
  const PellSolutionSet set = solve_norm(ctx, target, options);
  if (!set.solvable) {
    throw Error(Errc::Unsolvable, "x^2 - " + to_string(ctx.d()) + "y^2 = " + to_string(target) + " has no solution");
  }
  if (count == 0) return {};

  auto by_y_then_x = [](const RingElt& a, const RingElt& b) {
    if (a.im != b.im) return a.im < b.im;
    return a.re < b.re;
  };
  const RingElt& unit = ctx.norm_one_unit();
  const RingElt inverse = conj(unit);

  // Each class is {±ρ·η^j}; |y| along j is unimodal with its minimum at the
  // stored representative, so the first `count` are reached by widening the
  // exponent window until its frontier lies beyond the count-th element.
  std::size_t window = count;
  for (;;) {
    std::set<RingElt, decltype(by_y_then_x)> found(by_y_then_x);
    Int frontier = -1;
    for (const RingElt& rep : set.primitives) {
      RingElt up = rep, down = rep;
      found.insert({abs(rep.re), abs(rep.im)});
      for (std::size_t j = 1; j <= window; ++j) {
        up = mul(ctx, up, unit);
        down = mul(ctx, down, inverse);
        found.insert({abs(up.re), abs(up.im)});
        found.insert({abs(down.re), abs(down.im)});
      }
      for (const RingElt& beyond : {mul(ctx, up, unit), mul(ctx, down, inverse)}) {
        const Int y = abs(beyond.im);
        if (frontier < 0 || y < frontier) frontier = y;
      }
    }
    if (found.size() >= count) {
      auto it = std::next(found.begin(), static_cast<std::ptrdiff_t>(count - 1));
      if (it->im < frontier) return {found.begin(), std::next(it)};
    }
    window *= 2;
  }
}

std::string_view solvability_name(Solvability s) {
  switch (s) {
    case Solvability::Solvable: return "solvable";
    case Solvability::Unsolvable: return "unsolvable";
    case Solvability::Unknown: return "unknown";
  }
  return "?";
}

NormEvidence find_norm_witness(const RingCtx& ctx, const Int& target, const SolveOptions& options) {
  check_target(target);
  NormEvidence ev;
  if (target == 1 || target == -1) {
    ev.method = "unit";
    ev.search_bound = 0;
    if (target == 1) {
      ev.status = Solvability::Solvable;
      ev.witness = RingElt{Int(1), Int(0)};
    } else if (ctx.unit_norm() == -1) {
      ev.status = Solvability::Solvable;
      ev.witness = ctx.fund_unit();
    } else {
      ev.status = Solvability::Unsolvable;
    }
    return ev;
  }

  ev.method = "scan";
  const Int bound = classical_bound(ctx, target);
  const bool capped = bound > options.bound_ceiling;
  ev.search_bound = capped ? options.bound_ceiling : bound;
  scan_solutions(ctx, target, ev.search_bound, [&](const RingElt& s) {
    ev.witness = RingElt{abs(s.re), s.im};
    return false;
  });
  if (ev.witness) {
    ev.status = Solvability::Solvable;
    ev.search_bound = ev.witness->im;
  } else {
    ev.status = capped ? Solvability::Unknown : Solvability::Unsolvable;
  }
  return ev;
}

HypothesisReport hypothesis_check(const RingCtx& ctx, const SolveOptions& options) {
  HypothesisReport report;
  report.d = ctx.d();
  report.d_mod_48 = mod_small(ctx.d(), 48);
  report.norm_minus_one = find_norm_witness(ctx, Int(-1), options);
  report.norm_six = find_norm_witness(ctx, Int(6), options);

  if (report.holds()) {
    // A norm −1 unit times a norm 6 element has norm −6.
    NormEvidence& ev = report.norm_minus_six;
    ev.status = Solvability::Solvable;
    ev.method = "product";
    const RingElt w = mul(ctx, *report.norm_minus_one.witness, *report.norm_six.witness);
    ev.witness = RingElt{abs(w.re), abs(w.im)};
    ev.search_bound = 0;
    if (norm(ctx, *ev.witness) != -6) {
      throw Error(Errc::TheoremViolation, "product of norm -1 and norm 6 witnesses does not have norm -6");
    }
    if (report.d_mod_48 != 10) {
      throw Error(Errc::TheoremViolation, "norms -1 and 6 are solvable but d = " + to_string(ctx.d()) +
                                              " is " + std::to_string(report.d_mod_48) + " mod 48");
    }
  } else {
    report.norm_minus_six = find_norm_witness(ctx, Int(-6), options);
  }
  return report;
}

}  // namespace dnq
