#include <gtest/gtest.h>

#include <cmath>

#include "cdlp/complexity.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace cdlp {
namespace {

std::vector<std::pair<u64, u64>> pairs(const QuerySet& l) {
  std::vector<std::pair<u64, u64>> out;
  for (const Line& x : l.lines()) out.push_back({x.a, x.b});
  return out;
}

std::vector<ConstrainedSet> all_subsets(const PrimeModulus& p, u64 k) {
  std::vector<ConstrainedSet> out;
  oracle::any_subset(p.value(), k, [&](const std::vector<u64>& ix) {
    out.emplace_back(p, ix);
    return false;
  });
  return out;
}

TEST(FractionTest, ParseAndReduce) {
  EXPECT_EQ(Fraction::parse("2/4"), Fraction(1, 2));
  EXPECT_EQ(Fraction::parse("1").str(), "1");
  EXPECT_EQ(Fraction(3, 4).str(), "3/4");
  EXPECT_EQ(Fraction(1, 2).needed(7), 4u);
  EXPECT_EQ(Fraction(1, 1).needed(7), 7u);
  EXPECT_CDLP_ERROR(Fraction::parse("x/2"), ErrorCode::kParseError);
  EXPECT_CDLP_ERROR(Fraction::parse("1/"), ErrorCode::kParseError);
  EXPECT_CDLP_ERROR(Fraction(3, 2), ErrorCode::kInvalidArgument);
  EXPECT_CDLP_ERROR(Fraction(0, 2), ErrorCode::kInvalidArgument);
  EXPECT_EQ(parse_kind("bsgs1"), ComplexityKind::kBsgs1);
  EXPECT_EQ(kind_name(ComplexityKind::kBsgs), "bsgs");
}

TEST(ConstructionTest, PairingRecognizesAlpha) {
  const PrimeModulus p(101);
  for (u64 seed = 0; seed < 30; ++seed) {
    Rng rng(Seed{seed});
    std::vector<u64> el;
    while (el.size() < 9) {
      const u64 x = rng.uniform(101);
      if (std::find(el.begin(), el.end(), x) == el.end()) el.push_back(x);
    }
    const ConstrainedSet s(p, el);
    for (const Fraction a : {Fraction(1, 2), Fraction(2, 3), Fraction(8, 9)}) {
      const QuerySet l = pairing_construction(s, a);
      const auto hits = oracle::intersections(pairs(l), 101);
      EXPECT_GE(oracle::count_in(hits, s.elements()), a.needed(9));
      EXPECT_LE(static_cast<double>(l.size()),
                a.to_double() * 9 / 2 + 3);
    }
  }
  EXPECT_CDLP_ERROR(pairing_construction(ConstrainedSet(p, {1, 2, 3}),
                                         Fraction(1, 1)),
                    ErrorCode::kInsufficientElements);
}

TEST(ConstructionTest, GridCoversAlphaP) {
  for (u64 pv : {u64{11}, u64{29}, u64{101}}) {
    const PrimeModulus p(pv);
    for (const Fraction a : {Fraction(1, 1), Fraction(1, 4)}) {
      const QuerySet l = grid_construction(p, a);
      const u64 lambda = grid_lambda(p, a);
      EXPECT_GE(lambda * lambda * a.den(), pv * a.num());
      EXPECT_LT((lambda - 1) * (lambda - 1) * a.den(), pv * a.num());
      EXPECT_EQ(l.size(), 2 * lambda);
      EXPECT_GE(oracle::intersections(pairs(l), pv).size(), a.needed(pv));
    }
  }
}

TEST(BoundsTest, Triangle) {
  const PrimeModulus p(101);
  const ConstrainedSet s(p, {1, 2, 3, 4, 5, 6, 7, 8});
  const GenericBounds b = generic_bounds(s, Fraction(1, 1));
  EXPECT_DOUBLE_EQ(b.lower, 4.0);
  EXPECT_DOUBLE_EQ(b.upper, 7.0);
  EXPECT_EQ(b.grid_upper, 22u);
}

TEST(ExactTest, GenericMatchesOracleOnZ5) {
  const PrimeModulus p(5);
  for (u64 k = 1; k <= 4; ++k) {
    for (const auto& s : all_subsets(p, k)) {
      const ComplexityResult r =
          exact_complexity(s, Fraction(1, 1), ComplexityKind::kGeneric);
      EXPECT_EQ(r.value, oracle::generic_complexity(s.elements(), k, 5));
      EXPECT_TRUE(r.exact);
      ASSERT_TRUE(r.lines.has_value());
      EXPECT_EQ(r.lines->size(), r.value);
      EXPECT_EQ(oracle::count_in(oracle::intersections(pairs(*r.lines), 5),
                                 s.elements()),
                k);
    }
  }
}

TEST(ExactTest, BsgsKindsMatchOracleOnZ7) {
  const PrimeModulus p(7);
  for (u64 k = 2; k <= 4; ++k) {
    for (const auto& s : all_subsets(p, k)) {
      const auto b = exact_complexity(s, Fraction(1, 1), ComplexityKind::kBsgs);
      EXPECT_EQ(b.value, oracle::bsgs_complexity(s.elements(), k, 7));
      const auto witness = witness_intersection(b);
      for (u64 x : s.elements()) EXPECT_TRUE(witness.contains(x));
      const auto b1 = exact_complexity(s, Fraction(1, 1), ComplexityKind::kBsgs1);
      EXPECT_EQ(b1.value, oracle::bsgs1_complexity(s.elements(), k, 7));
      ASSERT_TRUE(b1.diff_x && b1.diff_y);
      EXPECT_EQ(b1.diff_x->size(), b1.value);
      EXPECT_EQ(b1.diff_y->size(), b1.value);
    }
  }
}

TEST(ExactTest, PartialAlpha) {
  const PrimeModulus p(7);
  const ConstrainedSet s(p, {0, 1, 3, 6});
  for (const Fraction a : {Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)}) {
    const u64 need = a.needed(4);
    EXPECT_EQ(exact_complexity(s, a, ComplexityKind::kGeneric).value,
              oracle::generic_complexity(s.elements(), need, 7));
    EXPECT_EQ(exact_complexity(s, a, ComplexityKind::kBsgs1).value,
              oracle::bsgs1_complexity(s.elements(), need, 7));
  }
}

TEST(ExactTest, WorkersDoNotChangeResult) {
  const PrimeModulus p(11);
  const ConstrainedSet s(p, {0, 2, 5, 9, 10});
  for (auto kind : {ComplexityKind::kGeneric, ComplexityKind::kBsgs,
                    ComplexityKind::kBsgs1}) {
    const auto a = exact_complexity(s, Fraction(1, 1), kind, {1});
    const auto b = exact_complexity(s, Fraction(1, 1), kind, {3});
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.lines, b.lines);
    EXPECT_EQ(a.points, b.points);
    EXPECT_EQ(a.diff_x, b.diff_x);
    EXPECT_EQ(a.diff_y, b.diff_y);
  }
}

TEST(ExactTest, Caps) {
  EXPECT_CDLP_ERROR(exact_complexity(ConstrainedSet(PrimeModulus(101), {1, 2}),
                                     Fraction(1, 1), ComplexityKind::kGeneric),
                    ErrorCode::kSearchTooLarge);
  EXPECT_CDLP_ERROR(exact_complexity(ConstrainedSet(PrimeModulus(7), {}),
                                     Fraction(1, 1), ComplexityKind::kGeneric),
                    ErrorCode::kEmptySet);
}

TEST(CertificateBoundTest, FormulasAndGate) {
  EXPECT_NEAR(certificate_formula(CertificateKind::kWeakSidon, 2, 4),
              std::pow(4 / std::sqrt(2.0), 2.0 / 3), 1e-12);
  EXPECT_NEAR(certificate_formula(CertificateKind::kBk, 3, 12), std::pow(2.0, 0.75),
              1e-12);
  EXPECT_NEAR(certificate_formula(CertificateKind::kTwelve, 12, 10),
              std::pow(10 / std::cbrt(4.0), 0.6), 1e-12);
  EXPECT_EQ(certificate_target(CertificateKind::kDet2x2), ComplexityKind::kBsgs);
  EXPECT_EQ(certificate_target(CertificateKind::kTwelve),
            ComplexityKind::kGeneric);
  const PrimeModulus p(101);
  const ConstrainedSet s(p, {1, 2, 3, 4});
  const CertificateReport bad = check_weak_sidon(s);
  ASSERT_FALSE(bad.verified);
  EXPECT_CDLP_ERROR(certificate_lower_bound(s, Fraction(1, 1), bad),
                    ErrorCode::kUncertifiedSet);
  const ConstrainedSet good(p, {0, 1, 3, 7});
  const CertifiedBound b =
      certificate_lower_bound(good, Fraction(1, 1), check_weak_sidon(good));
  EXPECT_EQ(b.bounds, ComplexityKind::kBsgs1);
  EXPECT_NEAR(b.value, std::pow(4 / std::sqrt(2.0), 2.0 / 3), 1e-12);
}

TEST(ChainTest, HoldsOnSmallSets) {
  const PrimeModulus p(7);
  for (const auto& s : all_subsets(p, 3)) {
    const ChainReport c = verify_chain(s, Fraction(1, 1));
    EXPECT_TRUE(c.holds());
    EXPECT_LE(c.generic.value, 2 * c.bsgs.value);
    EXPECT_LE(c.bsgs.value, c.bsgs1.value);
  }
}

}  // namespace
}  // namespace cdlp
