#include "cdlp/menelaus.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

namespace cdlp {

namespace {

const char* kLetterNames[3] = {"l_x", "l_y", "l_z"};

bool is_at_infinity(const ProjectiveLine& l) {
  return l.u == 0 && l.v == 0 && l.w == 1;
}

// Affine point (x, y), or nullopt-like flag when z == 0.
bool affine(const PrimeModulus& p, const ProjectivePoint& pt, u64& x, u64& y) {
  if (pt.z == 0) return false;
  const u64 inv = p.inv(pt.z);
  x = p.mul(pt.x, inv);
  y = p.mul(pt.y, inv);
  return true;
}

// Null space of a 4x4 matrix over Z_p (basis vectors).
std::vector<std::array<u64, 4>> kernel4(const PrimeModulus& p,
                                         std::array<std::array<u64, 4>, 4> m) {
  std::array<int, 4> pivot_col{-1, -1, -1, -1};
  std::array<bool, 4> is_pivot{};
  std::size_t row = 0;
  for (std::size_t col = 0; col < 4 && row < 4; ++col) {
    std::size_t sel = row;
    while (sel < 4 && m[sel][col] == 0) ++sel;
    if (sel == 4) continue;
    std::swap(m[sel], m[row]);
    const u64 inv = p.inv(m[row][col]);
    for (auto& v : m[row]) v = p.mul(v, inv);
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const u64 f = m[r][col];
      for (std::size_t c = 0; c < 4; ++c) {
        m[r][c] = p.sub(m[r][c], p.mul(f, m[row][c]));
      }
    }
    pivot_col[row] = static_cast<int>(col);
    is_pivot[col] = true;
    ++row;
  }
  std::vector<std::array<u64, 4>> basis;
  for (std::size_t free = 0; free < 4; ++free) {
    if (is_pivot[free]) continue;
    std::array<u64, 4> v{};
    v[free] = 1;
    for (std::size_t r = 0; r < row; ++r) {
      v[static_cast<std::size_t>(pivot_col[r])] = p.neg(m[r][free]);
    }
    basis.push_back(v);
  }
  return basis;
}

u64 minor2(const PrimeModulus& p, const std::array<u64, 4>& r0,
           const std::array<u64, 4>& r1, int c0, int c1) {
  return p.sub(p.mul(r0[c0], r1[c1]), p.mul(r0[c1], r1[c0]));
}

}  // namespace

ProjectiveLine make_line(const PrimeModulus& p, u64 u, u64 v, u64 w) {
  u %= p.value();
  v %= p.value();
  w %= p.value();
  u64 lead = u != 0 ? u : (v != 0 ? v : w);
  if (lead == 0) throw Error(ErrorCode::kInvalidArgument, "line (0:0:0)");
  const u64 inv = p.inv(lead);
  return {p.mul(u, inv), p.mul(v, inv), p.mul(w, inv)};
}

ProjectiveLine slope_line(const PrimeModulus& p, u64 slope, u64 intercept) {
  // slope*x - y + intercept = 0
  return make_line(p, slope, p.value() - 1, intercept);
}

ProjectiveLine vertical_line(const PrimeModulus& p, u64 c) {
  return make_line(p, 1, 0, p.neg(c % p.value()));
}

bool is_vertical(const ProjectiveLine& l) { return l.v == 0 && l.u != 0; }

ProjectivePoint meet(const PrimeModulus& p, const ProjectiveLine& a,
                     const ProjectiveLine& b) {
  return {p.sub(p.mul(a.v, b.w), p.mul(a.w, b.v)),
          p.sub(p.mul(a.w, b.u), p.mul(a.u, b.w)),
          p.sub(p.mul(a.u, b.v), p.mul(a.v, b.u))};
}

ProjectiveLine line_through(const PrimeModulus& p, const ProjectivePoint& a,
                            const ProjectivePoint& b) {
  const ProjectiveLine as_line_a{a.x, a.y, a.z};
  const ProjectiveLine as_line_b{b.x, b.y, b.z};
  const ProjectivePoint c = meet(p, as_line_a, as_line_b);
  if (c.x == 0 && c.y == 0 && c.z == 0) {
    throw Error(ErrorCode::kNoIntersection, "points coincide");
  }
  return make_line(p, c.x, c.y, c.z);
}

u64 project_intersection(const PrimeModulus& p, const ProjectiveLine& l1,
                         const ProjectiveLine& l2) {
  if (is_at_infinity(l1) || is_at_infinity(l2)) {
    throw Error(ErrorCode::kAtInfinity, "line at infinity has no finite points");
  }
  const ProjectivePoint pt = meet(p, l1, l2);
  if (pt.x == 0 && pt.y == 0 && pt.z == 0) {
    throw Error(ErrorCode::kNoIntersection, "lines are equal");
  }
  if (pt.z == 0) throw Error(ErrorCode::kNoIntersection, "lines are parallel");
  return p.div(pt.x, pt.z);
}

void Grid7::validate(const PrimeModulus& p) const {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      try {
        project_intersection(p, numbered[i], letters[j]);
      } catch (const Error& e) {
        throw Error(e.code(), "l_" + std::to_string(i + 1) + " vs " +
                                  kLetterNames[j] + ": " + e.what());
      }
    }
  }
}

TwelvePoints grid_points(const PrimeModulus& p, const Grid7& g) {
  g.validate(p);
  TwelvePoints t;
  for (std::size_t i = 0; i < 4; ++i) {
    t.x[i] = project_intersection(p, g.numbered[i], g.letters[0]);
    t.y[i] = project_intersection(p, g.numbered[i], g.letters[1]);
    t.z[i] = project_intersection(p, g.numbered[i], g.letters[2]);
  }
  return t;
}

std::array<std::array<u64, 4>, 4> twelve_matrix(const PrimeModulus& p,
                                                const TwelvePoints& pts) {
  std::array<std::array<u64, 4>, 4> m;
  for (std::size_t i = 0; i < 4; ++i) {
    const u64 xy = p.sub(pts.x[i], pts.y[i]);
    const u64 xz = p.sub(pts.x[i], pts.z[i]);
    m[i] = {xy, xz, p.mul(pts.z[i], xy), p.mul(pts.y[i], xz)};
  }
  return m;
}

u64 twelve_det(const PrimeModulus& p, const TwelvePoints& pts) {
  const auto m = twelve_matrix(p, pts);
  // Laplace expansion along rows {0,1} against complementary minors of {2,3}.
  static constexpr int kPairs[6][4] = {{0, 1, 2, 3}, {0, 2, 1, 3},
                                       {0, 3, 1, 2}, {1, 2, 0, 3},
                                       {1, 3, 0, 2}, {2, 3, 0, 1}};
  u64 det = 0;
  for (const auto& pr : kPairs) {
    const u64 term = p.mul(minor2(p, m[0], m[1], pr[0], pr[1]),
                           minor2(p, m[2], m[3], pr[2], pr[3]));
    det = ((1 + pr[0] + pr[1]) % 2 == 0) ? p.add(det, term) : p.sub(det, term);
  }
  return det;
}

u64 det_mod(const PrimeModulus& p, std::vector<std::vector<u64>> m) {
  const std::size_t n = m.size();
  u64 det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m[sel][col] % p.value() == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      std::swap(m[sel], m[col]);
      det = p.neg(det);
    }
    const u64 pivot = m[col][col] % p.value();
    det = p.mul(det, pivot);
    const u64 inv = p.inv(pivot);
    for (std::size_t r = col + 1; r < n; ++r) {
      const u64 f = p.mul(m[r][col] % p.value(), inv);
      if (f == 0) continue;
      for (std::size_t c = col; c < n; ++c) {
        m[r][c] = p.sub(m[r][c] % p.value(), p.mul(f, m[col][c] % p.value()));
      }
    }
  }
  return det;
}

std::vector<std::vector<u64>> twelve_system_matrix(const PrimeModulus& p,
                                                   const TwelvePoints& pts) {
  std::vector<std::vector<u64>> m(12, std::vector<u64>(12, 0));
  const u64 minus_one = p.value() - 1;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::array<u64, 3> vals{pts.x[i], pts.y[i], pts.z[i]};
    for (std::size_t j = 0; j < 3; ++j) {
      auto& row = m[3 * i + j];
      if (i > 0) {
        row[2 * (i - 1)] = vals[j];
        row[2 * (i - 1) + 1] = 1;
      }
      row[6 + 2 * j] = p.neg(vals[j]);
      row[7 + 2 * j] = minus_one;
    }
  }
  return m;
}

CrossCheck twelve_det_cross_check(const PrimeModulus& p,
                                  const TwelvePoints& pts) {
  CrossCheck c;
  c.det_m = twelve_det(p, pts);
  c.det_m_prime = det_mod(p, twelve_system_matrix(p, pts));
  c.equal = c.det_m == c.det_m_prime;
  c.equal_up_to_sign = c.det_m_prime == p.neg(c.det_m);
  c.same_zero_status = (c.det_m == 0) == (c.det_m_prime == 0);
  return c;
}

std::pair<u64, u64> bipartite_product_identity(const PrimeModulus& p,
                                               const TwelvePoints& pts) {
  auto d = [&](u64 a, u64 b) { return p.sub(a, b); };
  auto prod = [&](std::initializer_list<u64> xs) {
    u64 r = 1;
    for (u64 v : xs) r = p.mul(r, v);
    return r;
  };
  const auto& x = pts.x;
  const auto& y = pts.y;
  const auto& z = pts.z;
  const u64 lhs = p.add(
      prod({d(x[0], x[2]), d(x[1], z[1]), d(x[3], z[3]), d(y[0], z[0]),
            d(y[1], y[3]), d(y[2], z[2])}),
      prod({d(x[1], x[3]), d(x[0], z[0]), d(x[2], z[2]), d(y[0], y[2]),
            d(y[1], z[1]), d(y[3], z[3])}));
  u64 rhs = prod({d(x[2], x[3]), d(x[0], z[0]), d(x[1], z[1]), d(y[0], y[1]),
                  d(y[2], z[2]), d(y[3], z[3])});
  rhs = p.add(rhs, prod({d(x[1], x[2]), d(x[0], z[0]), d(x[3], z[3]),
                         d(y[0], y[3]), d(y[1], z[1]), d(y[2], z[2])}));
  rhs = p.add(rhs, prod({d(x[0], x[1]), d(x[2], z[2]), d(x[3], z[3]),
                         d(y[0], z[0]), d(y[1], z[1]), d(y[2], y[3])}));
  rhs = p.add(rhs, prod({d(x[0], x[3]), d(x[1], z[1]), d(x[2], z[2]),
                         d(y[0], z[0]), d(y[1], y[2]), d(y[3], z[3])}));
  return {lhs, rhs};
}

u64 menelaus_product_form(const PrimeModulus& p, const MenelausPoints& m) {
  const u64 left =
      p.mul(p.mul(p.sub(m.a, m.d), p.sub(m.b, m.f)), p.sub(m.c, m.e));
  const u64 right =
      p.mul(p.mul(p.sub(m.b, m.d), p.sub(m.c, m.f)), p.sub(m.a, m.e));
  return p.sub(left, right);
}

u64 menelaus_det_form(const PrimeModulus& p, const MenelausPoints& m) {
  auto seg = [&](u64 from, u64 to) { return p.sub(to, from); };
  std::vector<std::vector<u64>> mat = {
      {seg(m.d, m.b), seg(m.a, m.d), seg(m.a, m.b)},
      {seg(m.b, m.c), seg(m.f, m.c), seg(m.b, m.f)},
      {seg(m.e, m.d), seg(m.d, m.f), seg(m.f, m.e)}};
  return det_mod(p, std::move(mat));
}

ClassicReport classic_menelaus_check(
    const PrimeModulus& p, const std::array<ProjectiveLine, 4>& lines) {
  const auto& [lp, lq, lr, lt] = lines;
  ClassicReport r;
  r.points.a = project_intersection(p, lp, lr);
  r.points.b = project_intersection(p, lp, lq);
  r.points.c = project_intersection(p, lq, lr);
  r.points.d = project_intersection(p, lp, lt);
  r.points.f = project_intersection(p, lq, lt);
  r.points.e = project_intersection(p, lr, lt);
  r.product_difference = menelaus_product_form(p, r.points);
  r.det = menelaus_det_form(p, r.points);
  r.product_holds = r.product_difference == 0;
  r.det_holds = r.det == 0;
  r.agree = r.product_holds == r.det_holds;
  return r;
}

bool eleven_distinct(const TwelvePoints& pts) {
  std::vector<u64> v(pts.x.begin(), pts.x.end());
  v.insert(v.end(), pts.y.begin(), pts.y.end());
  v.insert(v.end(), pts.z.begin(), pts.z.begin() + 3);
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

Completion complete_configuration(const PrimeModulus& p,
                                  const TwelvePoints& eleven, Seed seed) {
  if (!eleven_distinct(eleven)) {
    throw Error(ErrorCode::kDegenerate, "the eleven given values repeat");
  }
  TwelvePoints pts = eleven;
  pts.z[3] = 0;
  const u64 d0 = twelve_det(p, pts);
  pts.z[3] = 1;
  const u64 slope = p.sub(twelve_det(p, pts), d0);
  if (slope == 0) {
    throw Error(ErrorCode::kDegenerate,
                "determinant does not depend on z_4 for these values");
  }
  pts.z[3] = p.div(p.neg(d0), slope);

  // Rows (z(x-y), z-x, (z-x)y, x-y): a kernel vector (k1, k2, k3, k4) fixes
  // gamma = k2 and alpha + beta = k3 for l_y = (alpha : beta : gamma).
  std::array<std::array<u64, 4>, 4> n;
  for (std::size_t i = 0; i < 4; ++i) {
    const u64 xy = p.sub(pts.x[i], pts.y[i]);
    const u64 zx = p.sub(pts.z[i], pts.x[i]);
    n[i] = {p.mul(pts.z[i], xy), zx, p.mul(zx, pts.y[i]), xy};
  }
  const ProjectiveLine la = make_line(p, 1, p.value() - 1, 0);
  Rng rng(seed);
  Completion out;
  out.z4 = pts.z[3];
  constexpr u64 kCandidateCap = 1000;
  for (const auto& k : kernel4(p, n)) {
    const u64 gamma = k[1];
    const u64 s = k[2];
    if (gamma == 0 && s == 0) continue;
    for (u64 attempt = 0; attempt < kCandidateCap; ++attempt) {
      ++out.candidates_tried;
      const u64 beta = 1 + rng.uniform(p.value() - 1);
      const u64 alpha = p.sub(s, beta);
      try {
        const ProjectiveLine lb = make_line(p, alpha, beta, gamma);
        Grid7 g;
        std::vector<ProjectivePoint> cs;
        for (std::size_t i = 0; i < 4; ++i) {
          const ProjectivePoint a{pts.x[i], pts.x[i], 1};
          const ProjectivePoint b{p.mul(beta, pts.y[i]),
                                  p.sub(p.neg(gamma), p.mul(alpha, pts.y[i])),
                                  beta};
          g.numbered[i] = line_through(p, a, b);
          cs.push_back(meet(p, g.numbered[i], vertical_line(p, pts.z[i])));
        }
        bool found = false;
        ProjectiveLine lc;
        for (std::size_t i = 0; i < 4 && !found; ++i) {
          for (std::size_t j = i + 1; j < 4 && !found; ++j) {
            u64 xi, yi, xj, yj;
            if (!affine(p, cs[i], xi, yi) || !affine(p, cs[j], xj, yj)) continue;
            if (xi == xj && yi == yj) continue;
            lc = line_through(p, cs[i], cs[j]);
            found = true;
          }
        }
        if (!found) continue;
        g.letters = {la, lb, lc};
        if (grid_points(p, g) == pts) {
          out.witness = g;
          return out;
        }
      } catch (const Error&) {
        // Degenerate candidate (coincident points or parallel lines).
      }
    }
  }
  throw Error(ErrorCode::kWitnessSearchFailed,
              "no realizing grid after " + std::to_string(out.candidates_tried) +
                  " candidates");
}

Case2Report case2_reduction_check(const PrimeModulus& p, const Grid7& g) {
  const TwelvePoints t = grid_points(p, g);
  const auto& x = t.x;
  const auto& y = t.y;
  const auto& z = t.z;
  if (x[0] != z[0] || y[1] != z[1] || x[2] != y[2]) {
    throw Error(ErrorCode::kPreconditionFailed,
                "grid lacks the coincidences A1=C1, B2=C2, A3=B3");
  }
  Case2Report r;
  const u64 left =
      p.mul(p.mul(p.sub(x[2], x[0]), p.sub(y[3], y[1])), p.sub(z[3], x[3]));
  const u64 right =
      p.mul(p.mul(p.sub(y[2], y[1]), p.sub(z[3], y[3])), p.sub(x[3], x[0]));
  r.reduced_identity = left == right;
  r.det_zero = twelve_det(p, t) == 0;
  return r;
}

namespace {

ProjectiveLine random_slope_line(const PrimeModulus& p, Rng& rng) {
  return slope_line(p, rng.uniform(p.value()), rng.uniform(p.value()));
}

ProjectiveLine random_line_through(const PrimeModulus& p, Rng& rng,
                                   const ProjectivePoint& pt) {
  u64 x, y;
  if (!affine(p, pt, x, y)) {
    throw Error(ErrorCode::kNoIntersection, "point at infinity");
  }
  const u64 slope = rng.uniform(p.value());
  return slope_line(p, slope, p.sub(y, p.mul(slope, x)));
}

void require_sampling_modulus(const PrimeModulus& p) {
  if (p.value() < 13) {
    throw Error(ErrorCode::kInvalidArgument, "grid sampling needs p >= 13");
  }
}

}  // namespace

Grid7 sample_grid(const PrimeModulus& p, Seed seed, bool allow_vertical) {
  require_sampling_modulus(p);
  Rng rng(seed);
  for (u64 attempt = 0; attempt < kSamplingCap; ++attempt) {
    Grid7 g;
    for (auto& l : g.letters) l = random_slope_line(p, rng);
    for (auto& l : g.numbered) l = random_slope_line(p, rng);
    if (allow_vertical) {
      if (rng.uniform(2) == 0) {
        g.letters[rng.uniform(3)] = vertical_line(p, rng.uniform(p.value()));
      } else {
        const u64 mask = 1 + rng.uniform(15);  // nonempty subset of l_1..l_4
        for (std::size_t i = 0; i < 4; ++i) {
          if (mask >> i & 1) g.numbered[i] = vertical_line(p, rng.uniform(p.value()));
        }
      }
    }
    try {
      g.validate(p);
      return g;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::kSamplingFailed, "no valid grid within sampling cap");
}

Grid7 sample_case2_grid(const PrimeModulus& p, Seed seed, bool concurrent) {
  require_sampling_modulus(p);
  Rng rng(seed);
  for (u64 attempt = 0; attempt < kSamplingCap; ++attempt) {
    try {
      Grid7 g;
      if (concurrent) {
        const ProjectivePoint centre{rng.uniform(p.value()),
                                     rng.uniform(p.value()), 1};
        for (auto& l : g.letters) l = random_line_through(p, rng, centre);
      } else {
        for (auto& l : g.letters) l = random_slope_line(p, rng);
      }
      const ProjectivePoint xz = meet(p, g.letters[0], g.letters[2]);
      const ProjectivePoint yz = meet(p, g.letters[1], g.letters[2]);
      const ProjectivePoint xy = meet(p, g.letters[0], g.letters[1]);
      g.numbered[0] = random_line_through(p, rng, xz);
      g.numbered[1] = random_line_through(p, rng, yz);
      g.numbered[2] = random_line_through(p, rng, xy);
      g.numbered[3] = random_slope_line(p, rng);
      g.validate(p);
      return g;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::kSamplingFailed, "no valid degenerate grid within cap");
}

}  // namespace cdlp
