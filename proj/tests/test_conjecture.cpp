#include <gtest/gtest.h>

#include <set>

#include <random>

#include "dnq/conjecture.hpp"
#include "dnq/primes.hpp"

using namespace dnq;

namespace {

RingElt E(long long re, long long im) { return {Int(re), Int(im)}; }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::InvalidArgument;
}

// Brute force: some α, β with components in [-bound, bound] and α² − β² = n.
// Plain 64-bit arithmetic, independent of the ring code.
bool brute_difference(const RingCtx& c, const RingElt& n, long long bound) {
  const long long d = static_cast<long long>(c.d());
  const long long nr = static_cast<long long>(n.re), ni = static_cast<long long>(n.im);
  std::set<std::pair<long long, long long>> squares;
  for (long long a = -bound; a <= bound; ++a) {
    for (long long b = -bound; b <= bound; ++b) squares.emplace(a * a + d * b * b, 2 * a * b);
  }
  for (const auto& [sr, si] : squares) {
    if (squares.count({sr - nr, si - ni})) return true;
  }
  return false;
}

}  // namespace

TEST(DiffSquares, Examples) {
  const RingCtx c10 = make_ctx(Int(10));
  const DiffSquaresResult r1 = representable_diff_squares(c10, E(26, 6));
  EXPECT_EQ(r1.verdict, Verdict::No);
  EXPECT_EQ(r1.method, "ramified-divisors");
  ASSERT_TRUE(r1.plus_two && r1.minus_two);
  EXPECT_FALSE(r1.plus_two->solvable);
  EXPECT_FALSE(r1.minus_two->solvable);
  EXPECT_EQ(r1.cofactor_norm, Int(79));
  EXPECT_TRUE(r1.divisor_sets.empty());

  // Same class, no norm ±2 element, yet (1 + √10)² − 3² = 2 + 2√10 through a
  // factor of norm −6.
  const DiffSquaresResult r4 = representable_diff_squares(c10, E(2, 2));
  EXPECT_EQ(r4.verdict, Verdict::Yes);
  EXPECT_EQ(r4.method, "ramified-divisors");
  ASSERT_TRUE(r4.witness);
  EXPECT_EQ(square(c10, r4.witness->first) - square(c10, r4.witness->second), E(2, 2));

  const DiffSquaresResult r2 = representable_diff_squares(make_ctx(Int(58)), E(18, 2));
  EXPECT_EQ(r2.verdict, Verdict::No);

  const RingCtx c2 = make_ctx(Int(2));
  const DiffSquaresResult r3 = representable_diff_squares(c2, E(2, 2));
  EXPECT_EQ(r3.verdict, Verdict::Yes);
  ASSERT_TRUE(r3.plus_two);
  EXPECT_TRUE(r3.plus_two->solvable);
  ASSERT_TRUE(r3.witness);
  EXPECT_EQ(square(c2, r3.witness->first) - square(c2, r3.witness->second), E(2, 2));
}

TEST(DiffSquares, ResidueObstruction) {
  const RingCtx c = make_ctx(Int(10));
  for (const RingElt& n : {E(1, 1), E(0, 2), E(3, 3), E(4, -2)}) {
    const DiffSquaresResult r = representable_diff_squares(c, n);
    EXPECT_EQ(r.verdict, Verdict::No) << n;
    EXPECT_EQ(r.method, "residue-mod-4") << n;
  }
}

TEST(DiffSquares, SearchFindsWitnesses) {
  const RingCtx c = make_ctx(Int(10));
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long long> dist(-30, 30);
  for (int i = 0; i < 100; ++i) {
    const RingElt a = E(dist(rng), dist(rng));
    const RingElt b = E(dist(rng), dist(rng));
    const RingElt n = square(c, a) - square(c, b);
    if (n.is_zero()) continue;
    const DiffSquaresResult r = representable_diff_squares(c, n);
    EXPECT_NE(r.verdict, Verdict::No) << n;
    if (r.witness) {
      EXPECT_EQ(square(c, r.witness->first) - square(c, r.witness->second), n);
    }
  }
}

// A certified No must never meet a brute-force witness.
TEST(DiffSquares, NoVerdictsSurviveBruteForce) {
  const RingCtx c = make_ctx(Int(10));
  for (long long re = -6; re <= 6; ++re) {
    for (long long im = -6; im <= 6; ++im) {
      const RingElt n = E(re, im);
      if (n.is_zero()) continue;
      const DiffSquaresResult r = representable_diff_squares(c, n);
      if (r.verdict != Verdict::No) continue;
      EXPECT_FALSE(brute_difference(c, n, 4)) << n;
    }
  }
}

// With 2 ramified, the (4m+2, even) classes are decided outright; the answer
// must agree with an independent brute force both ways.
TEST(DiffSquares, RamifiedClassesAreDecided) {
  for (long long d : {10LL, 58LL, 6LL}) {
    const RingCtx c = make_ctx(Int(d));
    for (long long re = -14; re <= 14; re += 4) {
      for (long long im = -8; im <= 8; im += 2) {
        const RingElt n = E(re, im);
        const DiffSquaresResult r = representable_diff_squares(c, n);
        ASSERT_NE(r.verdict, Verdict::Unknown) << d << " " << n;
        if (r.verdict == Verdict::Yes) {
          ASSERT_TRUE(r.witness);
          EXPECT_EQ(square(c, r.witness->first) - square(c, r.witness->second), n);
        } else {
          EXPECT_FALSE(brute_difference(c, n, 12)) << d << " " << n;
        }
      }
    }
  }
}

TEST(NormPm2, Certificates) {
  for (long long d : {10LL, 58LL, 106LL, 202LL, 298LL}) {
    const NormPm2Certificate cert = norm_pm2_impossible(make_ctx(Int(d)));
    EXPECT_FALSE(cert.plus_two.solvable);
    EXPECT_FALSE(cert.minus_two.solvable);
    EXPECT_GT(cert.plus_two.search_bound, 0);
  }
  EXPECT_EQ(code_of([] { norm_pm2_impossible(make_ctx(Int(2))); }), Errc::PreconditionFailed);
}

TEST(PrimeWitness, Examples) {
  const auto w10 = prime_witness_search(make_ctx(Int(10)), 13);
  EXPECT_NE(std::find(w10.begin(), w10.end(), PrimeWitness{6, 1, 79}), w10.end());
  const auto w58 = prime_witness_search(make_ctx(Int(58)), 9);
  EXPECT_NE(std::find(w58.begin(), w58.end(), PrimeWitness{4, 0, 23}), w58.end());
  EXPECT_TRUE(prime_witness_search(make_ctx(Int(10)), 3).empty());
}

TEST(PrimeWitness, RecomputesAndIsStable) {
  const RingCtx c = make_ctx(Int(10));
  const auto first = prime_witness_search(c, 301);
  EXPECT_EQ(first, prime_witness_search(c, 301));
  ASSERT_FALSE(first.empty());
  for (std::size_t i = 0; i < first.size(); ++i) {
    const PrimeWitness& w = first[i];
    const Int x = 2 * w.m + 1;
    const Int y = 2 * w.k + 1;
    EXPECT_EQ(x * x - 10 * y * y, w.p);
    EXPECT_EQ(mod_small(w.p, 4), 3);
    EXPECT_TRUE(is_prime(w.p));
    if (i > 0) {
      const PrimeWitness& prev = first[i - 1];
      EXPECT_TRUE(prev.m < w.m || (prev.m == w.m && prev.k < w.k));
    }
  }
  EXPECT_THROW(prime_witness_search(c, (std::uint64_t{1} << 31) + 1), Error);
}

TEST(Counterexample, Examples) {
  const RingCtx c10 = make_ctx(Int(10));
  const CounterexampleRecord r = make_counterexample(c10, Int(6), Int(1));
  EXPECT_EQ(r.n, E(26, 6));
  EXPECT_EQ(r.witness.p, 79);
  EXPECT_EQ(r.representability.verdict, Verdict::No);
  EXPECT_TRUE(verify(c10, r.n, r.quadruple.elements).ok());

  const CounterexampleRecord r58 = make_counterexample(make_ctx(Int(58)), Int(4), Int(0));
  EXPECT_EQ(r58.n, E(18, 2));
  EXPECT_EQ(r58.witness.p, 23);

  EXPECT_EQ(code_of([&] { make_counterexample(c10, Int(0), Int(0)); }), Errc::NotAWitness);
  EXPECT_EQ(code_of([&] { make_counterexample(c10, Int(3), Int(0)); }), Errc::NotAWitness);  // 49 − 10 = 39
  EXPECT_EQ(code_of([&] { make_counterexample(make_ctx(Int(2)), Int(1), Int(0)); }),
            Errc::PreconditionFailed);  // 9 − 2 = 7 is a witness, but Z[√2] has norm 2
}

TEST(Counterexample, EveryRecordIsACounterexample) {
  for (long long d : {10LL, 58LL}) {
    const RingCtx c = make_ctx(Int(d));
    const auto witnesses = prime_witness_search(c, 200);
    std::size_t n = 0;
    for (const PrimeWitness& w : witnesses) {
      if (++n > 15) break;
      const CounterexampleRecord r = make_counterexample(c, w.m, w.k);
      EXPECT_EQ(r.representability.verdict, Verdict::No);
      EXPECT_TRUE(verify(c, r.n, r.quadruple.elements).ok());
      EXPECT_EQ(r.n, (RingElt{4 * w.m + 2, 4 * w.k + 2}));
    }
  }
}

TEST(HuntD, SmallExamples) {
  const HuntResult h = hunt_d(1);
  ASSERT_EQ(h.candidates.size(), 2u);
  EXPECT_EQ(h.candidates[0].d, 10);
  EXPECT_EQ(h.candidates[0].witness6, E(4, 1));
  EXPECT_EQ(h.candidates[0].sign, 1);
  EXPECT_EQ(h.candidates[1].d, 58);
  EXPECT_EQ(h.candidates[1].l, 1);
  EXPECT_EQ(h.candidates[1].sign, -1);
  EXPECT_EQ(h.candidates[1].witness6, E(8, 1));
  EXPECT_TRUE(h.anomalies.empty());
  EXPECT_FALSE(is_prime(Int(125)));
}

TEST(HuntD, CandidatesSatisfyHypothesis) {
  const HuntResult h = hunt_d(50);
  ASSERT_FALSE(h.candidates.empty());
  for (std::size_t i = 0; i < h.candidates.size(); ++i) {
    const DCandidate& c = h.candidates[i];
    EXPECT_EQ(mod_small(c.d, 48), 10);
    EXPECT_EQ(c.d, 48 * c.l + 10);
    EXPECT_EQ(mod_small(c.p, 8), 5);
    EXPECT_EQ(c.witness6.re * c.witness6.re - c.d * c.witness6.im * c.witness6.im, 6);
    EXPECT_TRUE(c.norm_minus_one_verified && c.norm_six_verified);
    if (i > 0) {
      EXPECT_LT(h.candidates[i - 1].d, c.d);
    }
    EXPECT_TRUE(hypothesis_check(make_ctx(c.d)).holds()) << c.d;
  }
}
