#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dnq/quadring.hpp"

using namespace dnq;

namespace {

RingElt E(long long re, long long im) { return {Int(re), Int(im)}; }

RingElt random_elt(std::mt19937_64& rng, long long bound) {
  std::uniform_int_distribution<long long> dist(-bound, bound);
  return E(dist(rng), dist(rng));
}

// u² + d·v² = re, 2uv = im, by walking u; canonical sign of the first hit.
std::optional<RingElt> brute_sqrt(long long d, long long re, long long im) {
  if (re < 0) return std::nullopt;
  for (long long u = 0; u * u <= re; ++u) {
    const long long rest = re - u * u;
    if (rest % d != 0) continue;
    const long long v2 = rest / d;
    long long v = 0;
    while ((v + 1) * (v + 1) <= v2) ++v;
    if (v * v != v2) continue;
    for (long long sv : {v, -v}) {
      if (2 * u * sv == im) return canonical_sign(E(u, sv));
    }
  }
  return std::nullopt;
}

}  // namespace

TEST(RingCtx, RejectsBadRadicands) {
  auto code_of = [](long long d) {
    try {
      make_ctx(Int(d));
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  EXPECT_EQ(code_of(0), Errc::NonPositiveRadicand);
  EXPECT_EQ(code_of(-10), Errc::NonPositiveRadicand);
  EXPECT_EQ(code_of(12), Errc::WrongResidue);
  EXPECT_EQ(code_of(7), Errc::WrongResidue);
  EXPECT_EQ(code_of(18), Errc::NotSquareFree);
  EXPECT_EQ(code_of(50), Errc::NotSquareFree);
  EXPECT_EQ(code_of(2 * 1009 * 1009), Errc::NotSquareFree);
  EXPECT_EQ(code_of(2000000002), Errc::RadicandTooLarge);
  EXPECT_NO_THROW(make_ctx(Int(2)));
  EXPECT_NO_THROW(make_ctx(Int(10)));
  EXPECT_NO_THROW(make_ctx(Int(2 * 1009 * 1013)));
}

TEST(RingCtx, FundamentalUnits) {
  const RingCtx c10 = make_ctx(Int(10));
  EXPECT_EQ(c10.fund_unit(), E(3, 1));
  EXPECT_EQ(c10.unit_norm(), -1);
  EXPECT_EQ(c10.norm_one_unit(), E(19, 6));
  const RingCtx c6 = make_ctx(Int(6));
  EXPECT_EQ(c6.fund_unit(), E(5, 2));
  EXPECT_EQ(c6.unit_norm(), 1);
  EXPECT_EQ(c6.norm_one_unit(), E(5, 2));
}

TEST(RingCtx, ContextMismatch) {
  const RingCtx c10 = make_ctx(Int(10));
  EXPECT_NO_THROW(c10.require_same_ring(Int(10), "x"));
  try {
    c10.require_same_ring(Int(58), "quadruple");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ContextMismatch);
  }
}

TEST(Quadring, MulExamples) {
  const RingCtx c = make_ctx(Int(10));
  EXPECT_EQ(mul(c, E(19, 6), E(-8, 6)), E(208, 66));
  EXPECT_EQ(square(c, E(12, 3)), E(234, 72));
  const RingElt x = E(-17, 4);
  EXPECT_EQ(x + -x, E(0, 0));
}

TEST(Quadring, NormExamples) {
  EXPECT_EQ(norm(make_ctx(Int(10)), E(3, 1)), -1);
  EXPECT_EQ(norm(make_ctx(Int(58)), E(8, 1)), 6);
  EXPECT_EQ(norm(make_ctx(Int(10)), E(1, 0)), 1);
}

TEST(Quadring, DivexactExamples) {
  const RingCtx c = make_ctx(Int(10));
  EXPECT_EQ(divexact(c, E(151, 48), E(19, 6)), E(-11, 6));
  EXPECT_EQ(mul(c, E(19, 6), E(-11, 6)), E(151, 48));
  EXPECT_EQ(divexact(c, E(7, -3), E(1, 0)), E(7, -3));
  try {
    divexact(c, E(1, 0), E(2, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotDivisible);
  }
  try {
    divexact(c, E(1, 0), E(0, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZeroNorm);
  }
  EXPECT_FALSE(try_divexact(c, E(1, 0), E(2, 0)));
  EXPECT_EQ(try_divexact(c, E(151, 48), E(19, 6)), E(-11, 6));
}

TEST(Quadring, SqrtExamples) {
  const RingCtx c10 = make_ctx(Int(10));
  EXPECT_EQ(sqrt_in_ring(c10, E(234, 72)), E(12, 3));
  EXPECT_EQ(sqrt_in_ring(c10, E(0, 0)), E(0, 0));
  EXPECT_EQ(sqrt_in_ring(c10, E(10, 0)), E(0, 1));
  EXPECT_EQ(sqrt_in_ring(c10, E(9, 0)), E(3, 0));
  EXPECT_FALSE(sqrt_in_ring(c10, E(-9, 0)));
  EXPECT_FALSE(sqrt_in_ring(c10, E(234, 71)));
  EXPECT_FALSE(sqrt_in_ring(c10, E(3, 0)));

  const RingCtx c58 = make_ctx(Int(58));
  const RingElt prod = mul(c58, E(543616, -70094), E(2154883, -282950)) + E(18, 2);
  EXPECT_EQ(sqrt_in_ring(c58, prod), E(1077436, -141475));
}

TEST(Quadring, SqrtAgreesWithBruteForce) {
  std::mt19937_64 rng(2024);
  for (long long d : {10LL, 58LL}) {
    const RingCtx c = make_ctx(Int(d));
    for (int i = 0; i < 3000; ++i) {
      RingElt x;
      switch (i % 3) {
        case 0: x = random_elt(rng, 100000); break;
        case 1: x = square(c, random_elt(rng, 120)); break;
        default: x = square(c, random_elt(rng, 120)) + E(0, 2 * (i % 5) - 4); break;
      }
      const auto got = sqrt_in_ring(c, x);
      const auto want = brute_sqrt(d, static_cast<long long>(x.re), static_cast<long long>(x.im));
      ASSERT_EQ(got, want) << "d=" << d << " x=" << x;
    }
  }
}

TEST(Quadring, NormIsMultiplicative) {
  std::mt19937_64 rng(11);
  for (long long d : {2LL, 10LL, 58LL, 298LL}) {
    const RingCtx c = make_ctx(Int(d));
    for (int i = 0; i < 500; ++i) {
      const RingElt x = random_elt(rng, 1000000000);
      const RingElt y = random_elt(rng, 1000000000);
      EXPECT_EQ(norm(c, mul(c, x, y)), norm(c, x) * norm(c, y));
    }
  }
}

TEST(Quadring, ConjIsRingAutomorphism) {
  std::mt19937_64 rng(12);
  const RingCtx c = make_ctx(Int(58));
  for (int i = 0; i < 500; ++i) {
    const RingElt x = random_elt(rng, 1000000);
    const RingElt y = random_elt(rng, 1000000);
    EXPECT_EQ(conj(mul(c, x, y)), mul(c, conj(x), conj(y)));
    EXPECT_EQ(conj(x + y), conj(x) + conj(y));
    EXPECT_EQ(mul(c, x, conj(x)), RingElt(norm(c, x)));
  }
}

TEST(Quadring, SqrtOfSquareRoundTrips) {
  std::mt19937_64 rng(13);
  const RingCtx c = make_ctx(Int(10));
  for (int i = 0; i < 500; ++i) {
    const RingElt x = random_elt(rng, 1000000000);
    EXPECT_EQ(sqrt_in_ring(c, square(c, x)), canonical_sign(x));
  }
}

TEST(Quadring, DivexactRoundTrips) {
  std::mt19937_64 rng(14);
  const RingCtx c = make_ctx(Int(10));
  for (int i = 0; i < 500; ++i) {
    const RingElt x = random_elt(rng, 1000000);
    const RingElt y = random_elt(rng, 1000000);
    if (norm(c, y) == 0) continue;
    EXPECT_EQ(divexact(c, mul(c, x, y), y), x);
  }
}

TEST(Classify, Examples) {
  const ClassTag a = classify_mod4(E(26, 6));
  EXPECT_EQ(a.label(), "(4m+2,4k+2)");
  EXPECT_EQ(a.family(), ClassFamily::T);
  EXPECT_EQ(a.m, 6);
  EXPECT_EQ(a.k, 1);
  EXPECT_EQ(a.case_id(), 5);

  const ClassTag b = classify_mod4(E(1, 1));
  EXPECT_EQ(b.family(), ClassFamily::S);
  EXPECT_EQ(b.m, 0);
  EXPECT_EQ(b.k, 0);

  const ClassTag c = classify_mod4(E(18, 2));
  EXPECT_EQ(c.m, 4);
  EXPECT_EQ(c.k, 0);
  EXPECT_EQ(c.case_id(), 5);

  const ClassTag neg = classify_mod4(E(-2, 0));
  EXPECT_EQ(neg.label(), "(4m+2,4k)");
  EXPECT_EQ(neg.m, -1);
  EXPECT_EQ(neg.k, 0);
}

TEST(Classify, PartitionsIntoSixteenClasses) {
  std::mt19937_64 rng(15);
  std::set<std::pair<int, int>> seen;
  int s_count = 0;
  for (int re = 0; re < 4; ++re) {
    for (int im = 0; im < 4; ++im) {
      const ClassTag t = classify_mod4(E(re, im));
      seen.insert({t.re_offset, t.im_offset});
      if (t.family() == ClassFamily::S) ++s_count;
    }
  }
  EXPECT_EQ(seen.size(), 16u);
  EXPECT_EQ(s_count, 9);
  for (int i = 0; i < 2000; ++i) {
    const RingElt x = random_elt(rng, 1000000);
    const ClassTag t = classify_mod4(x);
    EXPECT_EQ(t.element(), x);
    EXPECT_GE(t.re_offset, 0);
    EXPECT_LT(t.re_offset, 4);
    EXPECT_GE(t.im_offset, 0);
    EXPECT_LT(t.im_offset, 4);
  }
}

TEST(NormForms, Examples) {
  const RingCtx c = make_ctx(Int(10));
  const NormForm u = norm_form_classify(c, E(3, 1));
  EXPECT_EQ(u.kind, NormFormKind::UnitMinus);
  EXPECT_EQ(u.p, 0);
  EXPECT_EQ(u.q, 0);
  EXPECT_EQ(u.im_sign, 1);

  const NormForm six = norm_form_classify(c, E(4, 1));
  EXPECT_EQ(six.kind, NormFormKind::NormSix);
  EXPECT_EQ(six.p, 0);
  EXPECT_EQ(six.re_sign, 1);

  const NormForm one = norm_form_classify(c, E(19, 6));
  EXPECT_EQ(one.kind, NormFormKind::UnitPlus);
  EXPECT_EQ(one.p, 3);
  EXPECT_EQ(one.q, 1);
  EXPECT_EQ(one.element(), E(19, 6));

  const NormForm m6 = norm_form_classify(c, E(2, 1));
  EXPECT_EQ(m6.kind, NormFormKind::NormMinusSix);
  EXPECT_EQ(m6.element(), E(2, 1));

  try {
    norm_form_classify(c, E(1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OutOfScopeNorm);
  }
  // Norm 1 in Z[√2], which does not satisfy the hypothesis, breaks the mandated form.
  try {
    norm_form_classify(make_ctx(Int(2)), E(3, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FormViolation);
  }
}
