#include <gtest/gtest.h>

#include <map>
#include <set>

#include "cdlp/sets.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace cdlp {
namespace {

ConstrainedSet random_set(const PrimeModulus& p, u64 size, u64 seed) {
  return random_subset(p, size, Seed{seed});
}

TEST(RandomSubsetTest, SizeAndDeterminism) {
  const PrimeModulus p(101);
  const ConstrainedSet a = random_subset(p, 20, Seed{3});
  EXPECT_EQ(a.size(), 20u);
  EXPECT_EQ(a, random_subset(p, 20, Seed{3}));
  EXPECT_NE(a.elements(), random_subset(p, 20, Seed{4}).elements());
  EXPECT_EQ(random_subset(p, 101, Seed{1}).size(), 101u);
  EXPECT_CDLP_ERROR(random_subset(p, 102, Seed{1}), ErrorCode::kTooLarge);
  EXPECT_CDLP_ERROR(random_subset(p, 0, Seed{1}), ErrorCode::kInvalidArgument);
}

TEST(SnkTest, EvaluatesPolynomial) {
  const PrimeModulus p(101);
  // f(x) = 3 + 5x + 7x^2
  const auto v = snk_evaluate(p, 4, {3, 5, 7});
  for (u64 i = 1; i <= 4; ++i) EXPECT_EQ(v[i - 1], (3 + 5 * i + 7 * i * i) % 101);
  const SnkSample s = sample_snk(p, 4, 3, {3, 5, 7});
  EXPECT_TRUE(s.full_size);
  EXPECT_EQ(s.set.provenance().kind, "snk");
  const SnkSample c = sample_snk(p, 4, 2, {9, 0});  // constant polynomial
  EXPECT_FALSE(c.full_size);
  EXPECT_EQ(c.set.size(), 1u);
  EXPECT_EQ(sample_snk(p, 6, 4, Seed{8}).set, sample_snk(p, 6, 4, Seed{8}).set);
  EXPECT_CDLP_ERROR(sample_snk(p, 101, 2, Seed{1}), ErrorCode::kInvalidArgument);
}

TEST(SnkTest, KWiseUniformOverAllKeys) {
  // Every k coordinates of f_a(1..N) are jointly uniform over all p^k keys.
  const PrimeModulus p(5);
  for (unsigned k : {2u, 3u}) {
    std::map<std::vector<u64>, u64> joint;
    std::vector<u64> key(k, 0);
    u64 keys = 0;
    for (;;) {
      const auto v = snk_evaluate(p, 4, key);
      std::vector<u64> proj(v.begin(), v.begin() + k);
      ++joint[proj];
      ++keys;
      std::size_t i = 0;
      while (i < k && ++key[i] == 5) key[i++] = 0;
      if (i == k) break;
    }
    EXPECT_EQ(joint.size(), keys);  // each tuple exactly once
  }
}

TEST(SnkTest, EventBounds) {
  const SnkBounds b = snk_event_bounds(PrimeModulus(101), 4, 2, 3);
  EXPECT_EQ(b.duplicate, Rational(16, 101));
  EXPECT_EQ(b.polynomial, Rational(48, 101));
  EXPECT_CDLP_ERROR(snk_event_bounds(PrimeModulus(101), 1000, 12, 6),
                    ErrorCode::kTooLarge);
}

TEST(BoseChowlaTest, DistinctSums) {
  for (auto [q, k] : std::vector<std::pair<u64, unsigned>>{
           {3, 2}, {5, 2}, {7, 2}, {11, 2}, {3, 3}, {5, 3}}) {
    const auto s = bose_chowla_set(q, k);
    u64 m = 1;
    for (unsigned i = 0; i < k; ++i) m *= q;
    --m;
    EXPECT_EQ(s.size(), q);
    EXPECT_EQ(std::set<u64>(s.begin(), s.end()).size(), q);
    for (u64 x : s) EXPECT_LT(x, m);
    EXPECT_TRUE(oracle::distinct_k_sums(s, k, m)) << q << "," << k;
    EXPECT_TRUE(find_sum_collision(s, k, m).empty());
  }
}

TEST(BoseChowlaTest, EmbeddingKeepsProperty) {
  for (u64 pv : {u64{101}, u64{1009}, u64{10007}}) {
    const PrimeModulus p(pv);
    for (unsigned k : {2u, 3u}) {
      const ConstrainedSet s = embed_bk_mod_p(p, k);
      EXPECT_GE(s.size(), 2u);
      EXPECT_TRUE(oracle::distinct_k_sums(s.elements(), k, pv));
      EXPECT_TRUE(check_bk_sums(s, k).verified);
    }
  }
  EXPECT_CDLP_ERROR(embed_bk_mod_p(PrimeModulus(101), 5),
                    ErrorCode::kInvalidArgument);
}

TEST(FamiliesTest, SquaresHammingGreedy) {
  const PrimeModulus p(101);
  const ConstrainedSet sq = small_squares_set(p);
  EXPECT_EQ(sq.size(), 10u);
  EXPECT_TRUE(sq.contains(100));
  const ConstrainedSet h = hamming_weight_set(p, 4, 2);
  EXPECT_EQ(h.elements(), (std::vector<u64>{3, 5, 6, 9, 10, 12}));
  EXPECT_CDLP_ERROR(hamming_weight_set(PrimeModulus(13), 4, 2),
                    ErrorCode::kInvalidArgument);
  const GreedyResult g = greedy_weak_sidon(PrimeModulus(31), 4);
  EXPECT_TRUE(g.target_reached);
  EXPECT_EQ(g.set.size(), 4u);
  EXPECT_TRUE(oracle::distinct_k_sums(g.set.elements(), 2, 31));
  const GreedyResult big = greedy_weak_sidon(PrimeModulus(31), 50);
  EXPECT_FALSE(big.target_reached);
  EXPECT_TRUE(oracle::distinct_k_sums(big.set.elements(), 2, 31));
}

TEST(SumCheckTest, MatchesOracle) {
  const PrimeModulus p(61);
  for (u64 seed = 0; seed < 200; ++seed) {
    const ConstrainedSet s = random_set(p, 4 + seed % 5, seed);
    for (unsigned k : {2u, 3u}) {
      const CertificateReport r = check_bk_sums(s, k);
      EXPECT_EQ(r.verified, oracle::distinct_k_sums(s.elements(), k, 61));
      if (!r.verified) {
        EXPECT_EQ(r.counterexample.size(), 2 * k);
        EXPECT_TRUE(counterexample_is_genuine(r, p));
      }
    }
    EXPECT_EQ(check_weak_sidon(s).verified, check_bk_sums(s, 2).verified);
  }
  EXPECT_EQ(check_bk_sums(ConstrainedSet(p, {1, 2, 3}), 2).kind,
            CertificateKind::kWeakSidon);
}

bool det2x2_oracle(const std::vector<u64>& s, u64 p) {
  const std::size_t n = s.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          for (std::size_t e = 0; e < n; ++e)
            for (std::size_t f = 0; f < n; ++f) {
              if (std::set<std::size_t>{a, b, c, d, e, f}.size() != 6) continue;
              const u64 x1 = s[a], x2 = s[b], y1 = s[c], y2 = s[d], z1 = s[e],
                        z2 = s[f];
              const u64 lhs = oracle::mulm(oracle::subm(x1, y1, p),
                                           oracle::subm(y2, z2, p), p);
              const u64 rhs = oracle::mulm(oracle::subm(x2, y2, p),
                                           oracle::subm(y1, z1, p), p);
              if (lhs == rhs) return false;
            }
  return true;
}

TEST(Det2x2Test, ExhaustiveMatchesOracle) {
  for (u64 pv : {u64{101}, u64{1009}}) {
    const PrimeModulus p(pv);
    for (u64 seed = 0; seed < 25; ++seed) {
      const ConstrainedSet s = random_set(p, 6 + seed % 2, seed);
      const CertificateReport r =
          check_det2x2(s, CheckMode::kExhaustive, 0, Seed{seed});
      EXPECT_EQ(r.verified, det2x2_oracle(s.elements(), pv));
      if (!r.verified) {
        EXPECT_TRUE(counterexample_is_genuine(r, p));
      }
    }
  }
  EXPECT_TRUE(check_det2x2(ConstrainedSet(PrimeModulus(11), {1, 2, 3, 4, 5}),
                           CheckMode::kExhaustive, 0, Seed{})
                  .verified);
  EXPECT_CDLP_ERROR(check_det2x2(random_set(PrimeModulus(101), 13, 1),
                                 CheckMode::kExhaustive, 0, Seed{}),
                    ErrorCode::kTooLarge);
}

TEST(Det2x2Test, RandomizedFindsDenseViolations) {
  // In Z_7 with 7 elements nearly every tuple has a vanishing determinant
  // somewhere; the randomized mode counts what it samples.
  const ConstrainedSet s(PrimeModulus(7), {0, 1, 2, 3, 4, 5, 6});
  const CertificateReport r =
      check_det2x2(s, CheckMode::kRandomized, 5000, Seed{2});
  EXPECT_EQ(r.trials, 5000u);
  EXPECT_GT(r.violations, 0u);
  EXPECT_FALSE(r.verified);
  EXPECT_TRUE(counterexample_is_genuine(r, PrimeModulus(7)));
}

u64 twelve_det_oracle(const std::vector<u64>& t, u64 p) {
  std::vector<std::vector<u64>> m(4);
  for (int i = 0; i < 4; ++i) {
    const u64 x = t[i], y = t[4 + i], z = t[8 + i];
    const u64 xy = oracle::subm(x, y, p), xz = oracle::subm(x, z, p);
    m[i] = {xy, xz, oracle::mulm(z, xy, p), oracle::mulm(y, xz, p)};
  }
  return oracle::det(m, p);
}

TEST(TwelveTest, VacuousAndCounterexamples) {
  const CertificateReport small = check_twelve(
      random_set(PrimeModulus(1009), 11, 1), CheckMode::kRandomized, 100, Seed{});
  EXPECT_TRUE(small.verified);
  EXPECT_EQ(small.trials, 0u);

  const PrimeModulus p(13);
  std::vector<u64> all(13);
  for (u64 i = 0; i < 13; ++i) all[i] = i;
  const CertificateReport r =
      check_twelve(ConstrainedSet(p, all), CheckMode::kExhaustive, 0, Seed{});
  ASSERT_FALSE(r.verified);
  ASSERT_EQ(r.counterexample.size(), 12u);
  EXPECT_EQ(std::set<u64>(r.counterexample.begin(), r.counterexample.end()).size(),
            12u);
  EXPECT_EQ(twelve_det_oracle(r.counterexample, 13), 0u);
  EXPECT_TRUE(counterexample_is_genuine(r, p));
}

TEST(TwelveTest, RandomizedRateIsSmallForLargeP) {
  const PrimeModulus p(1000003);
  const ConstrainedSet s = random_set(p, 16, 5);
  const CertificateReport r = check_twelve(s, CheckMode::kRandomized, 3000, Seed{1});
  EXPECT_EQ(r.trials, 3000u);
  EXPECT_LE(r.violations, 1u);
}

TEST(CertificateNamesTest, RoundTrip) {
  for (auto k : {CertificateKind::kWeakSidon, CertificateKind::kBk,
                 CertificateKind::kDet2x2, CertificateKind::kTwelve}) {
    EXPECT_EQ(parse_certificate(certificate_name(k)), k);
  }
  EXPECT_CDLP_ERROR(parse_certificate("nope"), ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace cdlp
