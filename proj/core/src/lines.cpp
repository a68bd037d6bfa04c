#include "cdlp/lines.hpp"

#include <algorithm>
#include <string>

namespace cdlp {

namespace {

void sort_unique(std::vector<u64>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void require_reduced(const std::vector<u64>& v, const PrimeModulus& p) {
  for (u64 x : v) {
    if (x >= p.value()) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::to_string(x) + " is not reduced mod " +
                      std::to_string(p.value()));
    }
  }
}

}  // namespace

QuerySet::QuerySet(const PrimeModulus& p, std::vector<Line> lines)
    : modulus_(p), lines_(std::move(lines)) {
  for (Line& l : lines_) {
    l.a %= p.value();
    l.b %= p.value();
  }
  std::sort(lines_.begin(), lines_.end());
  lines_.erase(std::unique(lines_.begin(), lines_.end()), lines_.end());
}

PointSet::PointSet(const PrimeModulus& p, std::vector<u64> points)
    : modulus_(p), points_(std::move(points)) {
  require_reduced(points_, p);
  sort_unique(points_);
}

bool PointSet::contains(u64 x) const {
  return std::binary_search(points_.begin(), points_.end(), x);
}

ConstrainedSet::ConstrainedSet(const PrimeModulus& p, std::vector<u64> elements,
                               Provenance provenance)
    : modulus_(p),
      elements_(std::move(elements)),
      provenance_(std::move(provenance)) {
  require_reduced(elements_, p);
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) !=
      elements_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "set elements must be distinct");
  }
}

bool ConstrainedSet::contains(u64 x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

PointSet intersection_set(const QuerySet& lines) {
  const PrimeModulus& p = lines.modulus();
  const auto& ls = lines.lines();
  std::vector<u64> out;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      if (ls[i].a == ls[j].a) continue;
      // a x + b = a' x + b'  =>  x = (b' - b)/(a - a')
      out.push_back(p.div(p.sub(ls[j].b, ls[i].b), p.sub(ls[i].a, ls[j].a)));
    }
  }
  return PointSet(p, std::move(out));
}

PointSet intersection_set_bsgs(const QuerySet& lines, const PointSet& points) {
  const PrimeModulus& p = lines.modulus();
  if (!(points.modulus() == p)) {
    throw Error(ErrorCode::kModulusMismatch, "lines and points differ in p");
  }
  std::vector<u64> out;
  for (const Line& l : lines.lines()) {
    if (l.a == 0) continue;
    const u64 inv_a = p.inv(l.a);
    for (u64 c : points.points()) out.push_back(p.mul(p.sub(c, l.b), inv_a));
  }
  return PointSet(p, std::move(out));
}

Recognition recognized_fraction(const ConstrainedSet& set,
                                const PointSet& hits) {
  if (set.empty()) throw Error(ErrorCode::kEmptySet, "S is empty");
  if (!(set.modulus() == hits.modulus())) {
    throw Error(ErrorCode::kModulusMismatch, "S and I differ in p");
  }
  std::size_t count = 0;
  for (u64 s : set.elements()) count += hits.contains(s) ? 1 : 0;
  return {count, Rational(static_cast<i64>(count), static_cast<i64>(set.size()))};
}

std::pair<ConstrainedSet, QuerySet> affine_transport(u64 u, u64 v,
                                                     const ConstrainedSet& set,
                                                     const QuerySet& lines) {
  const PrimeModulus& p = set.modulus();
  if (!(lines.modulus() == p)) {
    throw Error(ErrorCode::kModulusMismatch, "S and L differ in p");
  }
  u %= p.value();
  v %= p.value();
  const u64 inv_u = p.inv(u);
  std::vector<u64> elems;
  elems.reserve(set.size());
  for (u64 s : set.elements()) elems.push_back(p.add(p.mul(u, s), v));
  Provenance prov{"affine",
                  {{"u", u}, {"v", v}, {"source", set.provenance().kind}},
                  set.provenance().seed};
  std::vector<Line> out;
  out.reserve(lines.size());
  for (const Line& l : lines.lines()) {
    const u64 a2 = p.mul(l.a, inv_u);
    out.push_back({a2, p.sub(l.b, p.mul(a2, v))});
  }
  return {ConstrainedSet(p, std::move(elems), std::move(prov)),
          QuerySet(p, std::move(out))};
}

PointSet affine_image(u64 u, u64 v, const PointSet& points) {
  const PrimeModulus& p = points.modulus();
  std::vector<u64> out;
  out.reserve(points.size());
  for (u64 x : points.points()) {
    out.push_back(p.add(p.mul(u % p.value(), x), v % p.value()));
  }
  return PointSet(p, std::move(out));
}

}  // namespace cdlp
