#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "cdlp/extremal.hpp"
#include "cdlp/sets.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace cdlp {
namespace {

BitMatrix random_matrix(unsigned n, Rng& rng, unsigned density_of_8) {
  BitMatrix m(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (rng.uniform(8) < density_of_8) m.set(i, j);
  return m;
}

TEST(BitMatrixTest, Basics) {
  BitMatrix m(3);
  m.set(0, 2);
  m.set(1, 1);
  m.set(1, 1, false);
  EXPECT_TRUE(m.get(0, 2));
  EXPECT_FALSE(m.get(1, 1));
  EXPECT_EQ(m.ones(), 1u);
  EXPECT_EQ(m.rows()[0], 4u);
}

TEST(SubmatrixTest, MatchesPairOracle) {
  Rng rng(Seed{11});
  for (int t = 0; t < 500; ++t) {
    const BitMatrix m = random_matrix(6, rng, 2);
    const auto sub = find_allone_submatrix(m, 2, 2);
    EXPECT_EQ(sub.has_value(), oracle::has_c4(m.rows()));
    if (sub) {
      for (unsigned r : sub->rows)
        for (unsigned c : sub->cols) EXPECT_TRUE(m.get(r, c));
    }
  }
}

TEST(SubmatrixTest, RectangularShape) {
  BitMatrix m(4);
  for (unsigned j = 0; j < 3; ++j) {
    m.set(0, j);
    m.set(2, j);
  }
  const auto sub = find_allone_submatrix(m, 2, 3);
  ASSERT_TRUE(sub.has_value());
  EXPECT_EQ(sub->rows, (std::vector<unsigned>{0, 2}));
  EXPECT_EQ(sub->cols, (std::vector<unsigned>{0, 1, 2}));
  EXPECT_FALSE(find_allone_submatrix(m, 3, 2).has_value());
}

TEST(ZarankiewiczTest, Formula) {
  EXPECT_NEAR(zarankiewicz_formula(4, 2, 2), std::sqrt(2.0) * 8, 1e-12);
  EXPECT_NEAR(zarankiewicz_formula(8, 3, 2), std::sqrt(3.0) * std::pow(8, 1.5),
              1e-9);
  EXPECT_CDLP_ERROR(zarankiewicz_formula(4, 2, 3), ErrorCode::kInvalidOrder);
  EXPECT_CDLP_ERROR(zarankiewicz_formula(4, 2, 1), ErrorCode::kInvalidArgument);
}

TEST(ZarankiewiczTest, ExhaustiveMatchesBruteForce) {
  struct Case { unsigned n, s, t; };
  for (const Case c : {Case{2, 2, 2}, Case{3, 2, 2}, Case{4, 2, 2},
                       Case{3, 3, 2}, Case{3, 3, 3}, Case{4, 3, 2}}) {
    const ZarankiewiczResult r = max_ones_exhaustive(c.n, c.s, c.t);
    EXPECT_EQ(r.count, oracle::zarankiewicz(c.n, c.s, c.t))
        << c.n << " " << c.s << " " << c.t;
    EXPECT_EQ(r.witness.ones(), r.count);
    EXPECT_FALSE(find_allone_submatrix(r.witness, c.t, c.s).has_value());
  }
  EXPECT_EQ(max_ones_exhaustive(2, 2, 2).count, 3u);
  EXPECT_EQ(max_ones_exhaustive(3, 2, 2).count, 6u);
  EXPECT_EQ(max_ones_exhaustive(5, 2, 2).count, 12u);
  EXPECT_CDLP_ERROR(max_ones_exhaustive(6, 2, 2), ErrorCode::kTooLarge);
}

bool valid_cycle(const BipartiteGraph& g, const Cycle& c, unsigned k) {
  if (c.left.size() != k || c.right.size() != k) return false;
  std::set<std::pair<unsigned, unsigned>> used;
  for (unsigned i = 0; i < k; ++i) {
    const unsigned l0 = c.left[i], r = c.right[i], l1 = c.left[(i + 1) % k];
    if (!g.has_edge(l0, r) || !g.has_edge(l1, r)) return false;
    if (!used.insert({l0, r}).second || !used.insert({l1, r}).second) return false;
  }
  return true;
}

TEST(CycleTest, SmallGraphs) {
  BipartiteGraph k22(2, 2);
  for (unsigned l = 0; l < 2; ++l)
    for (unsigned r = 0; r < 2; ++r) k22.add_edge(l, r);
  const auto c4 = find_cycle_2k(k22, 2);
  ASSERT_TRUE(c4.has_value());
  EXPECT_TRUE(valid_cycle(k22, *c4, 2));

  BipartiteGraph hexagon(3, 3);  // l_i ~ r_i, r_i ~ l_{i+1}
  for (unsigned i = 0; i < 3; ++i) {
    hexagon.add_edge(i, i);
    hexagon.add_edge((i + 1) % 3, i);
  }
  EXPECT_EQ(hexagon.edges(), 6u);
  EXPECT_FALSE(find_cycle_2k(hexagon, 2).has_value());
  const auto c6 = find_cycle_2k(hexagon, 3);
  ASSERT_TRUE(c6.has_value());
  EXPECT_TRUE(valid_cycle(hexagon, *c6, 3));

  BipartiteGraph path(3, 3);
  path.add_edge(0, 0);
  path.add_edge(1, 0);
  path.add_edge(1, 1);
  EXPECT_FALSE(find_cycle_2k(path, 2).has_value());
  EXPECT_FALSE(find_cycle_2k(path, 3).has_value());
}

TEST(CycleTest, C4CorrespondsToSubmatrix) {
  Rng rng(Seed{7});
  for (int t = 0; t < 300; ++t) {
    const BitMatrix m = random_matrix(7, rng, 2);
    const BipartiteGraph g = BipartiteGraph::from_matrix(m);
    const auto c = find_cycle_2k(g, 2);
    EXPECT_EQ(c.has_value(), find_allone_submatrix(m, 2, 2).has_value());
    if (c) {
      EXPECT_TRUE(valid_cycle(g, *c, 2));
    }
  }
}

TEST(DifferenceMatrixTest, WeakSidonGivesC4Free) {
  const PrimeModulus p(101);
  const ConstrainedSet s = greedy_weak_sidon(p, 8).set;
  Rng rng(Seed{3});
  for (int t = 0; t < 200; ++t) {
    const ConstrainedSet x = random_subset(p, 6, Seed{rng.next()});
    const ConstrainedSet y = random_subset(p, 6, Seed{rng.next()});
    const PointSet xs(p, x.elements()), ys(p, y.elements());
    const BitMatrix m = difference_matrix(s, xs, ys);
    std::set<u64> covered;
    for (u64 a : xs.points())
      for (u64 b : ys.points()) {
        const u64 d = oracle::subm(a, b, 101);
        if (s.contains(d)) covered.insert(d);
      }
    EXPECT_EQ(m.ones(), covered.size());
    EXPECT_FALSE(find_allone_submatrix(m, 2, 2).has_value());
  }
  EXPECT_CDLP_ERROR(difference_matrix(s, PointSet(p, {1}), PointSet(p, {1, 2})),
                    ErrorCode::kInvalidArgument);
}

TEST(NaorVerstraeteTest, Formula) {
  EXPECT_NEAR(naor_verstraete_formula(8, 3), 6 * 16, 1e-9);
}

}  // namespace
}  // namespace cdlp
