#ifndef CDLP_EXTREMAL_HPP_
#define CDLP_EXTREMAL_HPP_

#include <optional>
#include <vector>

#include "cdlp/field.hpp"
#include "cdlp/lines.hpp"

namespace cdlp {

// n x n 0/1 matrix, n <= 64; bit j of rows[i] is entry (i, j).
class BitMatrix {
 public:
  explicit BitMatrix(unsigned n);
  BitMatrix(unsigned n, std::vector<u64> rows);

  unsigned n() const noexcept { return n_; }
  const std::vector<u64>& rows() const noexcept { return rows_; }
  bool get(unsigned i, unsigned j) const { return rows_[i] >> j & 1; }
  void set(unsigned i, unsigned j, bool v = true);
  unsigned ones() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  unsigned n_;
  std::vector<u64> rows_;
};

struct Submatrix {
  std::vector<unsigned> rows;
  std::vector<unsigned> cols;
};

// A t x s all-one submatrix (t rows, s columns), if any. t, s <= 4.
std::optional<Submatrix> find_allone_submatrix(const BitMatrix& m, unsigned t,
                                               unsigned s);

// s^(1/t) n^(2 - 1/t). Throws kInvalidOrder for t > s, kInvalidArgument t < 2.
double zarankiewicz_formula(double n, unsigned s, unsigned t);

struct ZarankiewiczResult {
  unsigned count = 0;
  BitMatrix witness{0};
};

// Z(n, s, t) by branch and bound over row-sorted matrices. Throws kTooLarge
// for n > 5.
ZarankiewiczResult max_ones_exhaustive(unsigned n, unsigned s, unsigned t);

class BipartiteGraph {
 public:
  BipartiteGraph(unsigned left, unsigned right);
  static BipartiteGraph from_matrix(const BitMatrix& m);

  unsigned left() const noexcept { return left_; }
  unsigned right() const noexcept { return right_; }
  void add_edge(unsigned l, unsigned r);
  bool has_edge(unsigned l, unsigned r) const { return adj_[l] >> r & 1; }
  u64 neighbours(unsigned l) const { return adj_[l]; }
  unsigned edges() const;

 private:
  unsigned left_;
  unsigned right_;
  std::vector<u64> adj_;
};

// Closed walk l0 r0 l1 r1 ... l_{k-1} r_{k-1} l0 with no edge used twice.
struct Cycle {
  std::vector<unsigned> left;
  std::vector<unsigned> right;
};

// k >= 2, sides of at most 64 vertices.
std::optional<Cycle> find_cycle_2k(const BipartiteGraph& g, unsigned k);

// 2k n^(1 + 1/k).
double naor_verstraete_formula(double n, unsigned k);

// Rows X, columns Y; for each s in S ∩ (X - Y) one entry (x, y) with
// x - y = s (the first in row-major order) is set.
BitMatrix difference_matrix(const ConstrainedSet& set, const PointSet& xs,
                            const PointSet& ys);

}  // namespace cdlp

#endif  // CDLP_EXTREMAL_HPP_
