// Brute-force reference implementations used to cross-check the library.
// Deliberately naive: plain loops, no shared helpers with core/.

#ifndef CDLP_TESTS_ORACLES_HPP_
#define CDLP_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 mulm(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}
inline u64 subm(u64 a, u64 b, u64 p) { return (a + p - b % p) % p; }
inline u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  for (; e; e >>= 1, a = mulm(a, a, p)) {
    if (e & 1) r = mulm(r, a, p);
  }
  return r;
}
inline u64 invm(u64 a, u64 p) { return powm(a, p - 2, p); }

inline bool prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Values x in [0, p) where two of the given lines agree, by evaluation.
inline std::set<u64> intersections(const std::vector<std::pair<u64, u64>>& lines,
                                   u64 p) {
  std::set<u64> hit;
  for (u64 x = 0; x < p; ++x) {
    std::set<u64> values;
    std::set<std::pair<u64, u64>> distinct(lines.begin(), lines.end());
    for (const auto& [a, b] : distinct) {
      const u64 v = (mulm(a % p, x, p) + b % p) % p;
      if (!values.insert(v).second) {
        hit.insert(x);
        break;
      }
    }
  }
  return hit;
}

inline u64 count_in(const std::set<u64>& hits, const std::vector<u64>& s) {
  u64 c = 0;
  for (u64 x : s) c += hits.count(x);
  return c;
}

// Calls f on every k-subset (as indices) of {0..n-1}; stops when f is true.
inline bool any_subset(u64 n, u64 k,
                       const std::function<bool(const std::vector<u64>&)>& f) {
  std::vector<u64> idx;
  std::function<bool(u64)> rec = [&](u64 start) -> bool {
    if (idx.size() == k) return f(idx);
    for (u64 i = start; i < n; ++i) {
      idx.push_back(i);
      if (rec(i + 1)) return true;
      idx.pop_back();
    }
    return false;
  };
  return rec(0);
}

// Least m such that some m lines recognize `need` elements of s.
inline u64 generic_complexity(const std::vector<u64>& s, u64 need, u64 p) {
  std::vector<std::pair<u64, u64>> all;
  for (u64 a = 0; a < p; ++a) {
    for (u64 b = 0; b < p; ++b) all.push_back({a, b});
  }
  for (u64 m = 2;; ++m) {
    const bool found = any_subset(all.size(), m, [&](const std::vector<u64>& ix) {
      std::vector<std::pair<u64, u64>> lines;
      for (u64 i : ix) lines.push_back(all[i]);
      return count_in(intersections(lines, p), s) >= need;
    });
    if (found) return m;
  }
}

// Least m with |L| = |C| = m, L of nonzero slope, covering `need` elements
// by { (c - b)/a }.
inline u64 bsgs_complexity(const std::vector<u64>& s, u64 need, u64 p) {
  std::vector<std::pair<u64, u64>> all;
  for (u64 a = 1; a < p; ++a) {
    for (u64 b = 0; b < p; ++b) all.push_back({a, b});
  }
  for (u64 m = 1;; ++m) {
    const bool found = any_subset(all.size(), m, [&](const std::vector<u64>& li) {
      return any_subset(p, m, [&](const std::vector<u64>& cs) {
        std::set<u64> hit;
        for (u64 i : li) {
          const auto [a, b] = all[i];
          for (u64 c : cs) hit.insert(mulm(subm(c, b, p), invm(a, p), p));
        }
        return count_in(hit, s) >= need;
      });
    });
    if (found) return m;
  }
}

// Least m with |X| = |Y| = m and |S ∩ (X - Y)| >= need.
inline u64 bsgs1_complexity(const std::vector<u64>& s, u64 need, u64 p) {
  for (u64 m = 1;; ++m) {
    const bool found = any_subset(p, m, [&](const std::vector<u64>& xs) {
      return any_subset(p, m, [&](const std::vector<u64>& ys) {
        std::set<u64> diff;
        for (u64 x : xs) {
          for (u64 y : ys) diff.insert(subm(x, y, p));
        }
        return count_in(diff, s) >= need;
      });
    });
    if (found) return m;
  }
}

// All sums of k distinct elements (mod m) distinct.
inline bool distinct_k_sums(const std::vector<u64>& s, u64 k, u64 m) {
  std::set<u64> sums;
  return !any_subset(s.size(), k, [&](const std::vector<u64>& ix) {
    u64 sum = 0;
    for (u64 i : ix) sum = (sum + s[i]) % m;
    return !sums.insert(sum).second;
  });
}

// Determinant mod p by Laplace expansion over column subsets (memoized).
inline u64 det(const std::vector<std::vector<u64>>& a, u64 p) {
  const std::size_t n = a.size();
  std::map<u64, u64> memo;  // columns used -> minor of the remaining rows
  std::function<u64(std::size_t, u64)> rec = [&](std::size_t row,
                                                 u64 used) -> u64 {
    if (row == n) return 1;
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    u64 total = 0;
    std::size_t free_index = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (used >> c & 1) continue;
      const u64 term = mulm(a[row][c] % p, rec(row + 1, used | (u64{1} << c)), p);
      total = free_index % 2 == 0 ? (total + term) % p : subm(total, term, p);
      ++free_index;
    }
    memo[used] = total;
    return total;
  };
  return rec(0, 0);
}

// Max ones in an n x n 0/1 matrix without a t x s all-one submatrix
// (t rows, s columns), over all 2^(n^2) matrices.
inline unsigned zarankiewicz(unsigned n, unsigned s, unsigned t) {
  unsigned best = 0;
  const u64 mask = (u64{1} << n) - 1;
  for (u64 bits = 0; bits < (u64{1} << (n * n)); ++bits) {
    std::vector<u64> rows(n);
    for (unsigned i = 0; i < n; ++i) rows[i] = bits >> (i * n) & mask;
    const bool bad = any_subset(n, t, [&](const std::vector<u64>& ri) {
      u64 common = mask;
      for (u64 r : ri) common &= rows[r];
      return static_cast<unsigned>(__builtin_popcountll(common)) >= s;
    });
    if (!bad) {
      best = std::max(best, static_cast<unsigned>(__builtin_popcountll(bits)));
    }
  }
  return best;
}

// A 4-cycle exists iff two rows share two columns.
inline bool has_c4(const std::vector<u64>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (__builtin_popcountll(rows[i] & rows[j]) >= 2) return true;
    }
  }
  return false;
}

}  // namespace oracle

#endif  // CDLP_TESTS_ORACLES_HPP_
