#include <gtest/gtest.h>

#include "cdlp/lines.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace cdlp {
namespace {

std::vector<std::pair<u64, u64>> pairs(const QuerySet& l) {
  std::vector<std::pair<u64, u64>> out;
  for (const Line& x : l.lines()) out.push_back({x.a, x.b});
  return out;
}

std::set<u64> as_set(const PointSet& s) {
  return {s.points().begin(), s.points().end()};
}

TEST(QuerySetTest, NormalizesAndDedupes) {
  const PrimeModulus p(7);
  const QuerySet l(p, {{8, 3}, {1, 3}, {0, 14}, {2, 2}});
  EXPECT_EQ(l.size(), 3u);
  EXPECT_EQ(l.lines().front(), (Line{0, 0}));
}

TEST(PointSetTest, Validation) {
  const PrimeModulus p(7);
  EXPECT_CDLP_ERROR(PointSet(p, {7}), ErrorCode::kInvalidArgument);
  const PointSet s(p, {3, 1, 3});
  EXPECT_EQ(s.points(), (std::vector<u64>{1, 3}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
}

TEST(ConstrainedSetTest, Validation) {
  const PrimeModulus p(11);
  EXPECT_CDLP_ERROR(ConstrainedSet(p, {1, 1}), ErrorCode::kInvalidArgument);
  EXPECT_CDLP_ERROR(ConstrainedSet(p, {11}), ErrorCode::kInvalidArgument);
  const ConstrainedSet s(p, {5, 2});
  EXPECT_EQ(s.elements(), (std::vector<u64>{2, 5}));
  EXPECT_EQ(s.provenance().kind, "explicit");
}

TEST(IntersectionSetTest, MatchesEvaluationOracle) {
  for (u64 pv : {u64{5}, u64{7}, u64{13}}) {
    const PrimeModulus p(pv);
    Rng rng(Seed{pv});
    for (int t = 0; t < 200; ++t) {
      std::vector<Line> raw;
      const u64 m = 1 + rng.uniform(6);
      for (u64 i = 0; i < m; ++i) raw.push_back({rng.uniform(pv), rng.uniform(pv)});
      const QuerySet l(p, raw);
      EXPECT_EQ(as_set(intersection_set(l)), oracle::intersections(pairs(l), pv));
    }
  }
}

TEST(IntersectionSetTest, ParallelLinesNeverMeet) {
  const PrimeModulus p(11);
  EXPECT_TRUE(intersection_set(QuerySet(p, {{3, 0}, {3, 1}, {3, 5}})).empty());
  EXPECT_EQ(intersection_set(QuerySet(p, {{1, 0}, {2, 0}})).points(),
            std::vector<u64>{0});
}

TEST(IntersectionSetTest, BsgsForm) {
  const PrimeModulus p(11);
  const QuerySet l(p, {{1, 0}, {2, 3}, {0, 4}});
  const PointSet c(p, {0, 5});
  std::set<u64> expect;
  for (u64 cc : {0, 5}) {
    expect.insert(cc);                                  // x = c
    expect.insert(oracle::mulm(oracle::subm(cc, 3, 11), oracle::invm(2, 11), 11));
  }
  EXPECT_EQ(as_set(intersection_set_bsgs(l, c)), expect);
  EXPECT_CDLP_ERROR(intersection_set_bsgs(l, PointSet(PrimeModulus(13), {1})),
                    ErrorCode::kModulusMismatch);
}

TEST(RecognitionTest, ExactFraction) {
  const PrimeModulus p(11);
  const ConstrainedSet s(p, {1, 2, 3, 4});
  const Recognition r = recognized_fraction(s, PointSet(p, {2, 4, 9}));
  EXPECT_EQ(r.count, 2u);
  EXPECT_EQ(r.fraction, Rational(1, 2));
  EXPECT_TRUE(r.recognizes(Rational(1, 2)));
  EXPECT_FALSE(r.recognizes(Rational(3, 4)));
  EXPECT_CDLP_ERROR(recognized_fraction(ConstrainedSet(p, {}), PointSet(p)),
                    ErrorCode::kEmptySet);
}

TEST(AffineTest, TransportsIntersections) {
  const PrimeModulus p(13);
  Rng rng(Seed{2});
  for (int t = 0; t < 100; ++t) {
    std::vector<Line> raw;
    for (int i = 0; i < 4; ++i) raw.push_back({rng.uniform(13), rng.uniform(13)});
    const QuerySet l(p, raw);
    const u64 u = 1 + rng.uniform(12), v = rng.uniform(13);
    const ConstrainedSet s(p, {0, 3, 7});
    const auto [s2, l2] = affine_transport(u, v, s, l);
    EXPECT_EQ(intersection_set(l2), affine_image(u, v, intersection_set(l)));
    EXPECT_EQ(recognized_fraction(s2, intersection_set(l2)).count,
              recognized_fraction(s, intersection_set(l)).count);
    EXPECT_EQ(s2.provenance().kind, "affine");
  }
  EXPECT_CDLP_ERROR(affine_transport(0, 1, ConstrainedSet(p, {1}), QuerySet(p)),
                    ErrorCode::kNonInvertible);
}

}  // namespace
}  // namespace cdlp
