#ifndef CDLP_LINES_HPP_
#define CDLP_LINES_HPP_

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cdlp/field.hpp"

namespace cdlp {

// The linear polynomial a*x + b over Z_p.
struct Line {
  u64 a = 0;
  u64 b = 0;

  auto operator<=>(const Line&) const = default;
};

// Pairwise-distinct lines, kept sorted.
class QuerySet {
 public:
  explicit QuerySet(const PrimeModulus& p) : modulus_(p) {}
  // Reduces coefficients mod p, sorts and drops duplicates.
  QuerySet(const PrimeModulus& p, std::vector<Line> lines);

  const PrimeModulus& modulus() const noexcept { return modulus_; }
  const std::vector<Line>& lines() const noexcept { return lines_; }
  std::size_t size() const noexcept { return lines_.size(); }
  bool empty() const noexcept { return lines_.empty(); }

  friend bool operator==(const QuerySet&, const QuerySet&) = default;

 private:
  PrimeModulus modulus_;
  std::vector<Line> lines_;
};

// Distinct residues, kept sorted.
class PointSet {
 public:
  explicit PointSet(const PrimeModulus& p) : modulus_(p) {}
  // Throws kInvalidArgument on values >= p; duplicates are dropped.
  PointSet(const PrimeModulus& p, std::vector<u64> points);

  const PrimeModulus& modulus() const noexcept { return modulus_; }
  const std::vector<u64>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  bool contains(u64 x) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  PrimeModulus modulus_;
  std::vector<u64> points_;
};

struct Provenance {
  std::string kind = "explicit";
  nlohmann::json params = nlohmann::json::object();
  u64 seed = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// S subset of Z_p with a record of how it was produced.
class ConstrainedSet {
 public:
  // Sorts and checks distinctness / range (kInvalidArgument otherwise).
  ConstrainedSet(const PrimeModulus& p, std::vector<u64> elements,
                 Provenance provenance = {});

  const PrimeModulus& modulus() const noexcept { return modulus_; }
  const std::vector<u64>& elements() const noexcept { return elements_; }
  const Provenance& provenance() const noexcept { return provenance_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(u64 x) const;

  friend bool operator==(const ConstrainedSet&, const ConstrainedSet&) = default;

 private:
  PrimeModulus modulus_;
  std::vector<u64> elements_;
  Provenance provenance_;
};

// I(L): abscissas where two distinct lines of L meet.
PointSet intersection_set(const QuerySet& lines);

// I(L, C): { (c - b)/a : (a,b) in L, a != 0, c in C }.
PointSet intersection_set_bsgs(const QuerySet& lines, const PointSet& points);

struct Recognition {
  std::size_t count = 0;
  Rational fraction;

  bool recognizes(const Rational& alpha) const { return fraction >= alpha; }
};

// |S ∩ I| and |S ∩ I| / |S|. Throws kEmptySet, kModulusMismatch.
Recognition recognized_fraction(const ConstrainedSet& set, const PointSet& hits);

// (uS + v, L') with L' = {(a/u, b - a v/u)}, so that I(L') = u I(L) + v.
// Throws kNonInvertible for u == 0.
std::pair<ConstrainedSet, QuerySet> affine_transport(u64 u, u64 v,
                                                     const ConstrainedSet& set,
                                                     const QuerySet& lines);

// Image of a point set under x -> u x + v.
PointSet affine_image(u64 u, u64 v, const PointSet& points);

}  // namespace cdlp

#endif  // CDLP_LINES_HPP_
