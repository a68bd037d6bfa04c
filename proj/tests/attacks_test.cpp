#include <gtest/gtest.h>

#include <cmath>

#include "cdlp/attacks.hpp"
#include "cdlp/complexity.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace cdlp {
namespace {

TEST(BsgsAttackTest, RecoversWithinBudget) {
  const PrimeModulus p(10007);
  for (u64 s = 0; s < 50; ++s) {
    DlpInstance inst = new_instance(p, std::nullopt, Seed{s});
    const AttackOutcome out = bsgs_interval_attack(inst, 0, p.value());
    EXPECT_TRUE(out.success);
    EXPECT_EQ(out.status, AttackStatus::kRecovered);
    EXPECT_LE(out.queries, 2 * isqrt_ceil(p.value()));
    EXPECT_EQ(inst.decode_for_testing(inst.target()), out.recovered);
  }
}

TEST(BsgsAttackTest, Interval) {
  const PrimeModulus p(1009);
  for (u64 x = 500; x < 540; ++x) {
    DlpInstance inst(p, x, Seed{x});
    const AttackOutcome out = bsgs_interval_attack(inst, 500, 540);
    EXPECT_TRUE(out.success);
    EXPECT_LE(out.queries, 2 * isqrt_ceil(40));
  }
  DlpInstance outside(p, 10, Seed{1});
  const AttackOutcome miss = bsgs_interval_attack(outside, 500, 540);
  EXPECT_FALSE(miss.success);
  EXPECT_EQ(miss.status, AttackStatus::kNotFound);
  EXPECT_CDLP_ERROR(bsgs_interval_attack(outside, 5, 5),
                    ErrorCode::kInvalidArgument);
}

TEST(DifferenceCoverAttackTest, SucceedsExactlyOnDifferences) {
  const PrimeModulus p(31);
  const PointSet xs(p, {0, 1, 2, 3, 4, 5}), ys(p, {0, 6, 12, 18, 24});
  std::set<u64> cover;
  for (u64 x : xs.points())
    for (u64 y : ys.points()) cover.insert(oracle::subm(x, y, 31));
  for (u64 secret = 0; secret < 31; ++secret) {
    DlpInstance inst(p, secret, Seed{secret});
    const AttackOutcome out = difference_cover_attack(inst, xs, ys);
    EXPECT_EQ(out.success, cover.count(secret) == 1) << secret;
    EXPECT_LE(out.queries, xs.size() + ys.size());
  }
}

TEST(QuerysetAttackTest, RecognizedSecretsAlwaysFound) {
  const PrimeModulus p(101);
  const ConstrainedSet s(p, {3, 17, 40, 41, 77, 90});
  const QuerySet l = pairing_construction(s, Fraction(1, 2));
  const PointSet hits = intersection_set(l);
  u64 wins = 0;
  for (u64 x : s.elements()) {
    DlpInstance inst(p, x, Seed{x});
    const AttackOutcome out = queryset_attack(inst, l, s);
    EXPECT_LE(out.queries, l.size());
    if (hits.contains(x)) {
      EXPECT_EQ(out.status, AttackStatus::kRecovered);
      EXPECT_TRUE(out.success);
    } else {
      EXPECT_EQ(out.status, AttackStatus::kGuessed);
    }
    wins += out.success;
  }
  // Recognized secrets plus one lucky guess.
  const u64 recognized = recognized_fraction(s, hits).count;
  EXPECT_EQ(wins, recognized + (recognized < s.size() ? 1 : 0));
}

TEST(LowWeightAttackTest, ExpectedRounds) {
  EXPECT_NEAR(low_weight_expected_rounds(20, 4),
              184756.0 / (6.0 * 12870.0), 1e-9);
  EXPECT_DOUBLE_EQ(low_weight_expected_rounds(10, 0), 1.0);
}

TEST(LowWeightAttackTest, Recovers) {
  const PrimeModulus p(1048583);
  for (u64 s = 0; s < 20; ++s) {
    Rng rng(Seed{s});
    u64 x = 0;
    while (__builtin_popcountll(x) < 4) x |= u64{1} << rng.uniform(20);
    DlpInstance inst(p, x, Seed{s});
    const AttackOutcome out = low_weight_attack(inst, 20, 4, Seed{s + 99});
    EXPECT_TRUE(out.success);
    EXPECT_GE(out.rounds, 1u);
    EXPECT_LE(out.queries, out.rounds * 90);
  }
  DlpInstance zero(p, 0, Seed{1});
  EXPECT_TRUE(low_weight_attack(zero, 20, 0, Seed{}).success);
  EXPECT_CDLP_ERROR(low_weight_attack(zero, 21, 2, Seed{}),
                    ErrorCode::kInvalidArgument);
}

TEST(AttackStatusTest, Names) {
  EXPECT_EQ(attack_status_name(AttackStatus::kRecovered), "recovered");
  EXPECT_EQ(attack_status_name(AttackStatus::kGuessed), "guessed");
  EXPECT_EQ(attack_status_name(AttackStatus::kNotFound), "not-found");
}

}  // namespace
}  // namespace cdlp
