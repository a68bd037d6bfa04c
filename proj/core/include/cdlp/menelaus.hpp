#ifndef CDLP_MENELAUS_HPP_
#define CDLP_MENELAUS_HPP_

#include <array>
#include <utility>
#include <vector>

#include "cdlp/field.hpp"

namespace cdlp {

// u*x + v*y + w = 0, scaled so the first nonzero coordinate is 1.
struct ProjectiveLine {
  u64 u = 0;
  u64 v = 0;
  u64 w = 0;

  friend bool operator==(const ProjectiveLine&, const ProjectiveLine&) = default;
};

struct ProjectivePoint {
  u64 x = 0;
  u64 y = 0;
  u64 z = 0;
};

// Throws kInvalidArgument for (0:0:0).
ProjectiveLine make_line(const PrimeModulus& p, u64 u, u64 v, u64 w);
// y = slope*x + intercept.
ProjectiveLine slope_line(const PrimeModulus& p, u64 slope, u64 intercept);
// x = c.
ProjectiveLine vertical_line(const PrimeModulus& p, u64 c);
ProjectiveLine line_through(const PrimeModulus& p, const ProjectivePoint& a,
                            const ProjectivePoint& b);
bool is_vertical(const ProjectiveLine& l);

ProjectivePoint meet(const PrimeModulus& p, const ProjectiveLine& a,
                     const ProjectiveLine& b);

// x-coordinate of l1 ∩ l2. Throws kNoIntersection for equal or parallel
// lines, kAtInfinity when either line is the line at infinity.
u64 project_intersection(const PrimeModulus& p, const ProjectiveLine& l1,
                         const ProjectiveLine& l2);

// Three letter lines (x, y, z) and four numbered lines.
struct Grid7 {
  std::array<ProjectiveLine, 3> letters;
  std::array<ProjectiveLine, 4> numbered;

  // Throws kNoIntersection / kAtInfinity naming the offending pair.
  void validate(const PrimeModulus& p) const;
};

struct TwelvePoints {
  std::array<u64, 4> x{};
  std::array<u64, 4> y{};
  std::array<u64, 4> z{};

  friend bool operator==(const TwelvePoints&, const TwelvePoints&) = default;
};

TwelvePoints grid_points(const PrimeModulus& p, const Grid7& g);

// det of the 4x4 matrix with rows
// (x_i - y_i, x_i - z_i, z_i (x_i - y_i), y_i (x_i - z_i)).
u64 twelve_det(const PrimeModulus& p, const TwelvePoints& pts);
std::array<std::array<u64, 4>, 4> twelve_matrix(const PrimeModulus& p,
                                                const TwelvePoints& pts);

// Determinant of a square matrix over Z_p by elimination.
u64 det_mod(const PrimeModulus& p, std::vector<std::vector<u64>> m);

// The 12x12 linear system for the line parameters (unknowns relative to l_x).
std::vector<std::vector<u64>> twelve_system_matrix(const PrimeModulus& p,
                                                   const TwelvePoints& pts);

struct CrossCheck {
  u64 det_m = 0;
  u64 det_m_prime = 0;
  bool equal = false;            // det(M') == det(M)
  bool equal_up_to_sign = false;  // det(M') == -det(M)
  bool same_zero_status = false;
};

CrossCheck twelve_det_cross_check(const PrimeModulus& p,
                                  const TwelvePoints& pts);

// Both sides of the signed six-product form; lhs - rhs == twelve_det.
std::pair<u64, u64> bipartite_product_identity(const PrimeModulus& p,
                                               const TwelvePoints& pts);

// Six abscissas of four lines p, q, r, t:
// A = p∩r, B = p∩q, C = q∩r, D = p∩t, F = q∩t, E = r∩t.
struct MenelausPoints {
  u64 a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
};

// (A-D)(B-F)(C-E) - (B-D)(C-F)(A-E)
u64 menelaus_product_form(const PrimeModulus& p, const MenelausPoints& m);
// det[[DB, AD, AB], [BC, FC, BF], [ED, DF, FE]] with XY = x_Y - x_X.
u64 menelaus_det_form(const PrimeModulus& p, const MenelausPoints& m);

struct ClassicReport {
  MenelausPoints points;
  u64 product_difference = 0;
  u64 det = 0;
  bool product_holds = false;
  bool det_holds = false;
  bool agree = false;  // both vanish or neither does
  bool ok() const { return product_holds && det_holds && agree; }
};

ClassicReport classic_menelaus_check(const PrimeModulus& p,
                                     const std::array<ProjectiveLine, 4>& lines);

struct Completion {
  u64 z4 = 0;
  Grid7 witness;
  u64 candidates_tried = 0;
};

// x1..x4, y1..y4, z1..z3 pairwise distinct.
bool eleven_distinct(const TwelvePoints& pts);

// Solves twelve_det = 0 for z_4 (pts.z[3] is ignored) and realizes a grid
// through the twelve values. Throws kDegenerate (repeated values, or z_4
// undetermined), kWitnessSearchFailed.
Completion complete_configuration(const PrimeModulus& p,
                                  const TwelvePoints& eleven, Seed seed = {});

struct Case2Report {
  bool reduced_identity = false;
  bool det_zero = false;
  bool ok() const { return reduced_identity && det_zero; }
};

// Requires A1 = C1, B2 = C2, A3 = B3 (x1 = z1, y2 = z2, x3 = y3); throws
// kPreconditionFailed otherwise.
Case2Report case2_reduction_check(const PrimeModulus& p, const Grid7& g);

constexpr u64 kSamplingCap = 10000;

// Requires p >= 13. With allow_vertical, either one letter line or some
// numbered lines are vertical. Throws kSamplingFailed.
Grid7 sample_grid(const PrimeModulus& p, Seed seed, bool allow_vertical);
// l1 through l_x∩l_z, l2 through l_y∩l_z, l3 through l_x∩l_y. With
// concurrent, the letter lines share one point.
Grid7 sample_case2_grid(const PrimeModulus& p, Seed seed, bool concurrent);

}  // namespace cdlp

#endif  // CDLP_MENELAUS_HPP_
