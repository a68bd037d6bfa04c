#include "cdlp/extremal.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <string>

namespace cdlp {

BitMatrix::BitMatrix(unsigned n) : n_(n), rows_(n, 0) {
  if (n > 64) throw Error(ErrorCode::kTooLarge, "BitMatrix holds n <= 64");
}

BitMatrix::BitMatrix(unsigned n, std::vector<u64> rows)
    : n_(n), rows_(std::move(rows)) {
  if (n > 64) throw Error(ErrorCode::kTooLarge, "BitMatrix holds n <= 64");
  if (rows_.size() != n) throw Error(ErrorCode::kInvalidArgument, "row count");
  const u64 full = n == 64 ? ~u64{0} : (u64{1} << n) - 1;
  for (u64 r : rows_) {
    if (r & ~full) throw Error(ErrorCode::kInvalidArgument, "entry out of range");
  }
}

void BitMatrix::set(unsigned i, unsigned j, bool v) {
  if (v) {
    rows_[i] |= u64{1} << j;
  } else {
    rows_[i] &= ~(u64{1} << j);
  }
}

unsigned BitMatrix::ones() const {
  unsigned c = 0;
  for (u64 r : rows_) c += static_cast<unsigned>(std::popcount(r));
  return c;
}

std::optional<Submatrix> find_allone_submatrix(const BitMatrix& m, unsigned t,
                                               unsigned s) {
  if (t == 0 || s == 0 || t > 4 || s > 4) {
    throw Error(ErrorCode::kInvalidArgument, "need 1 <= t, s <= 4");
  }
  const unsigned n = m.n();
  std::vector<unsigned> rows;
  std::function<std::optional<Submatrix>(unsigned, u64)> rec =
      [&](unsigned start, u64 common) -> std::optional<Submatrix> {
    if (static_cast<unsigned>(std::popcount(common)) < s) return std::nullopt;
    if (rows.size() == t) {
      Submatrix out{rows, {}};
      for (unsigned j = 0; j < n && out.cols.size() < s; ++j) {
        if (common >> j & 1) out.cols.push_back(j);
      }
      return out;
    }
    for (unsigned i = start; i < n; ++i) {
      rows.push_back(i);
      if (auto r = rec(i + 1, common & m.rows()[i])) return r;
      rows.pop_back();
    }
    return std::nullopt;
  };
  return rec(0, ~u64{0});
}

double zarankiewicz_formula(double n, unsigned s, unsigned t) {
  if (t < 2) throw Error(ErrorCode::kInvalidArgument, "need t >= 2");
  if (t > s) {
    throw Error(ErrorCode::kInvalidOrder,
                "bound is stated for t <= s (t=" + std::to_string(t) +
                    ", s=" + std::to_string(s) + ")");
  }
  const double td = t;
  return std::pow(static_cast<double>(s), 1.0 / td) * std::pow(n, 2.0 - 1.0 / td);
}

ZarankiewiczResult max_ones_exhaustive(unsigned n, unsigned s, unsigned t) {
  if (n > 5) throw Error(ErrorCode::kTooLarge, "exhaustive search needs n <= 5");
  if (s == 0 || t == 0) throw Error(ErrorCode::kInvalidArgument, "s, t >= 1");
  ZarankiewiczResult best;
  best.witness = BitMatrix(n);
  if (n == 0) return best;
  const u64 limit = u64{1} << n;
  std::vector<u64> rows;
  unsigned ones = 0;

  // Does adding `r` complete a forbidden t-row set with some t-1 earlier rows?
  std::function<bool(std::size_t, unsigned, u64)> forbidden =
      [&](std::size_t start, unsigned left, u64 common) -> bool {
    if (static_cast<unsigned>(std::popcount(common)) < s) return false;
    if (left == 0) return true;
    for (std::size_t i = start; i < rows.size(); ++i) {
      if (forbidden(i + 1, left - 1, common & rows[i])) return true;
    }
    return false;
  };

  // Rows are nondecreasing as integers: row permutations are symmetries.
  std::function<void(u64)> rec = [&](u64 min_row) {
    if (rows.size() == n) {
      if (ones > best.count) {
        best.count = ones;
        best.witness = BitMatrix(n, rows);
      }
      return;
    }
    const unsigned remaining = n - static_cast<unsigned>(rows.size());
    if (ones + remaining * n <= best.count) return;
    for (u64 r = limit; r-- > min_row;) {
      const unsigned w = static_cast<unsigned>(std::popcount(r));
      if (ones + w + (remaining - 1) * n <= best.count) continue;
      if (forbidden(0, t - 1, r)) continue;
      rows.push_back(r);
      ones += w;
      rec(r);
      ones -= w;
      rows.pop_back();
    }
  };
  rec(0);
  return best;
}

BipartiteGraph::BipartiteGraph(unsigned left, unsigned right)
    : left_(left), right_(right), adj_(left, 0) {
  if (left > 64 || right > 64) {
    throw Error(ErrorCode::kTooLarge, "graph sides hold at most 64 vertices");
  }
}

BipartiteGraph BipartiteGraph::from_matrix(const BitMatrix& m) {
  BipartiteGraph g(m.n(), m.n());
  g.adj_ = m.rows();
  return g;
}

void BipartiteGraph::add_edge(unsigned l, unsigned r) {
  if (l >= left_ || r >= right_) {
    throw Error(ErrorCode::kInvalidArgument, "vertex out of range");
  }
  adj_[l] |= u64{1} << r;
}

unsigned BipartiteGraph::edges() const {
  unsigned c = 0;
  for (u64 a : adj_) c += static_cast<unsigned>(std::popcount(a));
  return c;
}

std::optional<Cycle> find_cycle_2k(const BipartiteGraph& g, unsigned k) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "need k >= 2");
  std::vector<u64> used(g.left(), 0);  // edges already on the walk
  Cycle walk;
  std::function<bool(unsigned, unsigned)> rec = [&](unsigned start,
                                                    unsigned at) -> bool {
    const std::size_t depth = walk.right.size();
    if (depth == k) return at == start;
    // Leave `at` along an unused edge, then return to a left vertex.
    u64 out = g.neighbours(at) & ~used[at];
    while (out) {
      const unsigned r = static_cast<unsigned>(std::countr_zero(out));
      out &= out - 1;
      used[at] |= u64{1} << r;
      walk.right.push_back(r);
      const bool last = depth + 1 == k;
      for (unsigned l = last ? start : 0; l < (last ? start + 1 : g.left()); ++l) {
        if (!g.has_edge(l, r) || (used[l] >> r & 1)) continue;
        used[l] |= u64{1} << r;
        if (!last) walk.left.push_back(l);
        if (rec(start, l)) return true;
        if (!last) walk.left.pop_back();
        used[l] &= ~(u64{1} << r);
      }
      walk.right.pop_back();
      used[at] &= ~(u64{1} << r);
    }
    return false;
  };
  for (unsigned s = 0; s < g.left(); ++s) {
    walk = Cycle{{s}, {}};
    if (rec(s, s)) return walk;
  }
  return std::nullopt;
}

double naor_verstraete_formula(double n, unsigned k) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "need k >= 2");
  return 2.0 * k * std::pow(n, 1.0 + 1.0 / k);
}

BitMatrix difference_matrix(const ConstrainedSet& set, const PointSet& xs,
                            const PointSet& ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::kInvalidArgument, "|X| must equal |Y|");
  }
  const PrimeModulus& p = set.modulus();
  BitMatrix m(static_cast<unsigned>(xs.size()));
  std::vector<bool> taken(p.value(), false);
  for (unsigned i = 0; i < xs.size(); ++i) {
    for (unsigned j = 0; j < ys.size(); ++j) {
      const u64 d = p.sub(xs.points()[i], ys.points()[j]);
      if (set.contains(d) && !taken[d]) {
        taken[d] = true;
        m.set(i, j);
      }
    }
  }
  return m;
}

}  // namespace cdlp
