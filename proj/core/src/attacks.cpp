#include "cdlp/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

namespace cdlp {

std::string_view attack_status_name(AttackStatus status) {
  switch (status) {
    case AttackStatus::kRecovered: return "recovered";
    case AttackStatus::kGuessed: return "guessed";
    case AttackStatus::kNotFound: return "not-found";
  }
  return "unknown";
}

namespace {

AttackOutcome finish(DlpInstance& inst, u64 start, std::string method,
                     std::optional<u64> answer, AttackStatus status) {
  AttackOutcome out;
  out.method = std::move(method);
  out.queries = inst.queries() - start;
  out.recovered = answer;
  out.status = status;
  out.success = answer && inst.check_answer(*answer);
  return out;
}

// Weight-w subsets of the given bit positions, as integers.
std::vector<u64> weight_values(const std::vector<unsigned>& bits, unsigned w) {
  std::vector<u64> out;
  if (w > bits.size()) return out;
  std::vector<std::size_t> idx(w);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    u64 v = 0;
    for (std::size_t i : idx) v |= u64{1} << bits[i];
    out.push_back(v);
    std::size_t i = w;
    while (i > 0 && idx[i - 1] == bits.size() - w + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

AttackOutcome bsgs_interval_attack(DlpInstance& inst, u64 lo, u64 hi) {
  const PrimeModulus& p = inst.modulus();
  if (lo >= hi || hi > p.value()) {
    throw Error(ErrorCode::kInvalidArgument, "need 0 <= lo < hi <= p");
  }
  const u64 start = inst.queries();
  const u64 width = hi - lo;
  const u64 lambda = isqrt_ceil(width);
  const EncodedElement g = inst.generator();
  const EncodedElement gx = inst.target();
  std::map<EncodedElement, u64> baby;
  for (u64 i = 0; i < lambda; ++i) {
    // sigma(g^{x - lo - i})
    baby.emplace(inst.query(gx, g, 1, p.neg((lo + i) % p.value())), i);
  }
  const u64 giants = (width + lambda - 1) / lambda;
  for (u64 j = 0; j < giants; ++j) {
    auto it = baby.find(inst.query(g, g, mul_mod(lambda, j, p.value()), 0));
    if (it != baby.end()) {
      const u64 x = (lo + it->second + lambda * j) % p.value();
      return finish(inst, start, "bsgs", x, AttackStatus::kRecovered);
    }
  }
  return finish(inst, start, "bsgs", std::nullopt, AttackStatus::kNotFound);
}

AttackOutcome difference_cover_attack(DlpInstance& inst, const PointSet& xs,
                                      const PointSet& ys) {
  const PrimeModulus& p = inst.modulus();
  const u64 start = inst.queries();
  const EncodedElement g = inst.generator();
  const EncodedElement gx = inst.target();
  std::map<EncodedElement, u64> giant;
  for (u64 xi : xs.points()) giant.emplace(inst.query(g, g, xi, 0), xi);
  for (u64 yj : ys.points()) {
    auto it = giant.find(inst.query(gx, g, 1, yj));
    if (it != giant.end()) {
      return finish(inst, start, "diff-cover", p.sub(it->second, yj),
                    AttackStatus::kRecovered);
    }
  }
  return finish(inst, start, "diff-cover", std::nullopt, AttackStatus::kNotFound);
}

AttackOutcome queryset_attack(DlpInstance& inst, const QuerySet& lines,
                              const ConstrainedSet& set) {
  const PrimeModulus& p = inst.modulus();
  const u64 start = inst.queries();
  const EncodedElement g = inst.generator();
  const EncodedElement gx = inst.target();
  std::map<EncodedElement, Line> answers;
  for (const Line& l : lines.lines()) {
    const EncodedElement e = inst.query(gx, g, l.a, l.b);
    auto [it, fresh] = answers.emplace(e, l);
    if (!fresh && it->second.a != l.a) {
      const Line& o = it->second;
      const u64 x = p.div(p.sub(o.b, l.b), p.sub(l.a, o.a));
      return finish(inst, start, "queryset", x, AttackStatus::kRecovered);
    }
  }
  if (set.empty()) {
    return finish(inst, start, "queryset", std::nullopt, AttackStatus::kNotFound);
  }
  const PointSet covered = intersection_set(lines);
  u64 guess = set.elements().front();
  for (u64 s : set.elements()) {
    if (!covered.contains(s)) {
      guess = s;
      break;
    }
  }
  return finish(inst, start, "queryset", guess, AttackStatus::kGuessed);
}

double low_weight_expected_rounds(unsigned n_bits, unsigned t) {
  const unsigned n1 = (n_bits + 1) / 2;
  const unsigned t1 = (t + 1) / 2;
  if (t1 > n1 || t - t1 > n_bits - n1) return INFINITY;
  const double good = static_cast<double>(binomial(t, t1)) *
                      static_cast<double>(binomial(n_bits - t, n1 - t1));
  return static_cast<double>(binomial(n_bits, n1)) / good;
}

AttackOutcome low_weight_attack(DlpInstance& inst, unsigned n_bits, unsigned t,
                                Seed seed) {
  const PrimeModulus& p = inst.modulus();
  if (t > n_bits || n_bits > 62 || (u64{1} << n_bits) > p.value()) {
    throw Error(ErrorCode::kInvalidArgument,
                "need t <= n_bits and 2^n_bits <= p");
  }
  const u64 start = inst.queries();
  const EncodedElement g = inst.generator();
  const EncodedElement gx = inst.target();
  if (t == 0) {
    const bool zero = inst.query(g, g, 0, 0) == gx;
    AttackOutcome out = finish(inst, start, "low-weight",
                               zero ? std::optional<u64>(0) : std::nullopt,
                               zero ? AttackStatus::kRecovered
                                    : AttackStatus::kNotFound);
    out.rounds = 1;
    return out;
  }
  const unsigned n1 = (n_bits + 1) / 2;
  const unsigned t1 = (t + 1) / 2;
  const unsigned t2 = t / 2;
  const double expected = low_weight_expected_rounds(n_bits, t);
  const u64 cap = std::isfinite(expected)
                      ? static_cast<u64>(std::ceil(64.0 * expected))
                      : 0;
  Rng rng(seed);
  std::vector<unsigned> positions(n_bits);
  std::iota(positions.begin(), positions.end(), 0u);
  u64 rounds = 0;
  while (rounds < cap) {
    ++rounds;
    rng.shuffle(std::span<unsigned>(positions));
    std::vector<unsigned> b1(positions.begin(), positions.begin() + n1);
    std::vector<unsigned> b2(positions.begin() + n1, positions.end());
    std::sort(b1.begin(), b1.end());
    std::sort(b2.begin(), b2.end());
    std::map<EncodedElement, u64> giant;
    for (u64 u : weight_values(b1, t1)) {
      giant.emplace(inst.query(gx, g, 1, p.neg(u % p.value())), u);  // x - u
    }
    for (u64 v : weight_values(b2, t2)) {
      auto it = giant.find(inst.query(g, g, v, 0));
      if (it != giant.end()) {
        AttackOutcome out = finish(inst, start, "low-weight", it->second + v,
                                   AttackStatus::kRecovered);
        out.rounds = rounds;
        return out;
      }
    }
  }
  AttackOutcome out =
      finish(inst, start, "low-weight", std::nullopt, AttackStatus::kNotFound);
  out.rounds = rounds;
  return out;
}

}  // namespace cdlp
