#include "cdlp/sets.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <unordered_map>

#include "cdlp/extension_field.hpp"
#include "cdlp/menelaus.hpp"

namespace cdlp {

namespace {

// Advances idx (strictly increasing, values < n) to the next k-combination.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

// Distinct uniform indices into [0, n) via a partial Fisher-Yates shuffle.
void draw_distinct(Rng& rng, std::vector<std::size_t>& pool, std::size_t count,
                   std::vector<std::size_t>& out) {
  out.clear();
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.uniform(pool.size() - i));
    std::swap(pool[i], pool[j]);
    out.push_back(pool[i]);
  }
}

CertificateReport vacuous(CertificateKind kind, unsigned k, std::size_t size,
                          std::size_t needed) {
  CertificateReport r;
  r.kind = kind;
  r.k = k;
  r.verified = true;
  r.mode = CheckMode::kExhaustive;
  r.note = "vacuous: |S| = " + std::to_string(size) + " < " +
           std::to_string(needed) + " distinct elements required";
  return r;
}

}  // namespace

ConstrainedSet random_subset(const PrimeModulus& p, u64 size, Seed seed) {
  if (size == 0) throw Error(ErrorCode::kInvalidArgument, "empty sets are disallowed");
  if (size > p.value()) {
    throw Error(ErrorCode::kTooLarge, "size exceeds p");
  }
  Rng rng(seed);
  std::vector<u64> chosen;
  if (size * 2 > p.value()) {
    std::vector<u64> all(p.value());
    std::iota(all.begin(), all.end(), 0);
    for (u64 i = 0; i < size; ++i) {
      std::swap(all[i], all[i + rng.uniform(p.value() - i)]);
    }
    chosen.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
  } else {
    std::vector<u64> sorted;
    while (chosen.size() < size) {
      u64 x = rng.uniform(p.value());
      auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
      if (it != sorted.end() && *it == x) continue;
      sorted.insert(it, x);
      chosen.push_back(x);
    }
  }
  return ConstrainedSet(p, std::move(chosen),
                        {"random", {{"size", size}}, seed.value});
}

std::vector<u64> snk_evaluate(const PrimeModulus& p, u64 n,
                              const std::vector<u64>& key) {
  std::vector<u64> values;
  values.reserve(n);
  for (u64 i = 1; i <= n; ++i) {
    u64 acc = 0;  // Horner from a_{k-1} down
    for (std::size_t j = key.size(); j-- > 0;) {
      acc = p.add(p.mul(acc, i % p.value()), key[j] % p.value());
    }
    values.push_back(acc);
  }
  return values;
}

SnkSample sample_snk(const PrimeModulus& p, u64 n, unsigned k,
                     const std::vector<u64>& key) {
  if (n == 0 || k == 0) throw Error(ErrorCode::kInvalidArgument, "N, k >= 1");
  if (n >= p.value()) throw Error(ErrorCode::kInvalidArgument, "N must be < p");
  if (key.size() != k) {
    throw Error(ErrorCode::kInvalidArgument, "key must have exactly k entries");
  }
  std::vector<u64> values = snk_evaluate(p, n, key);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const bool full = values.size() == n;
  Provenance prov{"snk", {{"N", n}, {"k", k}, {"key", key}}, 0};
  return {ConstrainedSet(p, std::move(values), std::move(prov)), key, n, full};
}

SnkSample sample_snk(const PrimeModulus& p, u64 n, unsigned k, Seed seed) {
  Rng rng(seed);
  std::vector<u64> key(k);
  for (auto& a : key) a = rng.uniform(p.value());
  SnkSample s = sample_snk(p, n, k, key);
  Provenance prov = s.set.provenance();
  prov.seed = seed.value;
  s.set = ConstrainedSet(p, s.set.elements(), std::move(prov));
  return s;
}

SnkBounds snk_event_bounds(const PrimeModulus& p, u64 n, unsigned k, u64 d) {
  if (d == 0) throw Error(ErrorCode::kInvalidArgument, "d must be >= 1");
  constexpr u128 kMax = static_cast<u128>(INT64_MAX);
  const u128 n2 = static_cast<u128>(n) * n;
  u128 nk = d;
  for (unsigned i = 0; i < k && nk <= kMax; ++i) nk *= n;
  if (n2 > kMax || nk > kMax) {
    throw Error(ErrorCode::kTooLarge, "N^k d exceeds 64-bit rationals");
  }
  const i64 pp = static_cast<i64>(p.value());
  return {Rational(static_cast<i64>(n2), pp), Rational(static_cast<i64>(nk), pp)};
}

std::vector<u64> bose_chowla_set(u64 q, unsigned k) {
  const ExtensionField f = build_extension_field(q, k);
  std::vector<ExtElement> shifted;
  shifted.reserve(q);
  for (u64 c = 0; c < q; ++c) shifted.push_back(f.add(f.theta, f.constant(c)));
  std::vector<u64> logs = ext_discrete_logs(f, shifted);
  std::sort(logs.begin(), logs.end());
  return logs;
}

ConstrainedSet embed_bk_mod_p(const PrimeModulus& p, unsigned k) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "k must be >= 2");
  const u64 root = iroot_floor(p.value(), k);
  if (root <= 3) {
    throw Error(ErrorCode::kInvalidArgument, "p^(1/k) must exceed 3");
  }
  const u64 q = largest_prime_below(root + 1);
  const std::vector<u64> bc = bose_chowla_set(q, k);
  u64 qk = 1;
  for (unsigned i = 0; i < k; ++i) qk *= q;
  const u64 width = (qk + k - 1) / k;
  const u64 want = (q + k - 1) / k;
  for (unsigned j = 0; j < k; ++j) {
    std::vector<u64> inside;
    for (u64 e : bc) {
      if (e >= j * width && e < (j + 1) * width) inside.push_back(e);
    }
    if (inside.size() >= want) {
      const u64 base = inside.front();
      for (auto& e : inside) e -= base;
      return ConstrainedSet(
          p, std::move(inside),
          {"bose-chowla",
           {{"k", k}, {"q", q}, {"interval", j}, {"shift", base}},
           0});
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "pigeonhole interval not found");
}

ConstrainedSet small_squares_set(const PrimeModulus& p) {
  if (p.value() < 5) throw Error(ErrorCode::kInvalidArgument, "p must be >= 5");
  std::vector<u64> out;
  const u64 r = isqrt_floor(p.value());
  for (u64 x = 1; x <= r; ++x) out.push_back(x * x);
  return ConstrainedSet(p, std::move(out), {"squares", nlohmann::json::object(), 0});
}

ConstrainedSet hamming_weight_set(const PrimeModulus& p, unsigned n_bits,
                                  unsigned t) {
  if (t > n_bits || n_bits > 61) {
    throw Error(ErrorCode::kInvalidArgument, "need t <= n_bits <= 61");
  }
  if (p.value() <= (u64{1} << n_bits)) {
    throw Error(ErrorCode::kInvalidArgument, "p must exceed 2^n_bits");
  }
  if (binomial(n_bits, t) > kSumCheckCap) {
    throw Error(ErrorCode::kTooLarge, "C(n_bits, t) exceeds 10^6");
  }
  std::vector<u64> out;
  if (t == 0) {
    out.push_back(0);
  } else {
    const u64 limit = u64{1} << n_bits;
    u64 v = (u64{1} << t) - 1;
    while (v < limit) {
      out.push_back(v);
      // Gosper's hack: next integer with the same popcount.
      const u64 c = v & (~v + 1);
      const u64 r = v + c;
      v = (((r ^ v) >> 2) / c) | r;
    }
  }
  return ConstrainedSet(p, std::move(out),
                        {"hamming", {{"bits", n_bits}, {"t", t}}, 0});
}

GreedyResult greedy_weak_sidon(const PrimeModulus& p, u64 target_size) {
  if (target_size < 2) throw Error(ErrorCode::kInvalidArgument, "target >= 2");
  std::vector<u64> chosen;
  std::vector<bool> sums(p.value(), false);  // sums < p because x <= p/2
  for (u64 x = 0; x <= p.value() / 2 && chosen.size() < target_size; ++x) {
    bool ok = !sums[2 * x];
    for (u64 c : chosen) ok = ok && !sums[c + x];
    if (!ok) continue;
    for (u64 c : chosen) sums[c + x] = true;
    sums[2 * x] = true;
    chosen.push_back(x);
  }
  const bool reached = chosen.size() == target_size;
  return {ConstrainedSet(p, std::move(chosen),
                         {"greedy-sidon", {{"target", target_size}}, 0}),
          reached};
}

std::string_view certificate_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kWeakSidon: return "weak-sidon";
    case CertificateKind::kBk: return "bk";
    case CertificateKind::kDet2x2: return "det2x2";
    case CertificateKind::kTwelve: return "twelve";
  }
  return "unknown";
}

CertificateKind parse_certificate(std::string_view name) {
  if (name == "weak-sidon") return CertificateKind::kWeakSidon;
  if (name == "bk") return CertificateKind::kBk;
  if (name == "det2x2") return CertificateKind::kDet2x2;
  if (name == "twelve") return CertificateKind::kTwelve;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown certificate '" + std::string(name) + "'");
}

std::string_view check_mode_name(CheckMode mode) {
  return mode == CheckMode::kExhaustive ? "exhaustive" : "randomized";
}

std::vector<u64> find_sum_collision(const std::vector<u64>& elements,
                                    unsigned k, u64 modulus) {
  if (k == 0 || elements.size() < k) return {};
  std::unordered_map<u64, std::vector<std::size_t>> seen;
  std::vector<std::size_t> idx = first_combination(k);
  do {
    u64 s = 0;
    for (std::size_t i : idx) s = add_mod(s, elements[i] % modulus, modulus);
    auto [it, fresh] = seen.emplace(s, idx);
    if (!fresh) {
      std::vector<u64> out;
      for (std::size_t i : it->second) out.push_back(elements[i]);
      for (std::size_t i : idx) out.push_back(elements[i]);
      return out;
    }
  } while (next_combination(idx, elements.size()));
  return {};
}

CertificateReport check_bk_sums(const ConstrainedSet& set, unsigned k) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "k must be >= 2");
  const CertificateKind kind =
      k == 2 ? CertificateKind::kWeakSidon : CertificateKind::kBk;
  if (set.size() < k) return vacuous(kind, k, set.size(), k);
  const u64 combos = binomial(set.size(), k);
  if (combos > kSumCheckCap) {
    throw Error(ErrorCode::kTooLarge, "C(|S|, k) exceeds 10^6");
  }
  CertificateReport r;
  r.kind = kind;
  r.k = k;
  r.mode = CheckMode::kExhaustive;
  r.counterexample = find_sum_collision(set.elements(), k, set.modulus().value());
  r.verified = r.counterexample.empty();
  r.violations = r.verified ? 0 : 1;
  r.trials = combos;
  return r;
}

CertificateReport check_weak_sidon(const ConstrainedSet& set) {
  return check_bk_sums(set, 2);
}

u64 det2x2_value(const PrimeModulus& p, u64 x1, u64 x2, u64 y1, u64 y2, u64 z1,
                 u64 z2) {
  return p.sub(p.mul(p.sub(x1, y1), p.sub(y2, z2)),
               p.mul(p.sub(x2, y2), p.sub(y1, z1)));
}

CertificateReport check_det2x2(const ConstrainedSet& set, CheckMode mode,
                               u64 trials, Seed seed) {
  const PrimeModulus& p = set.modulus();
  const auto& s = set.elements();
  const std::size_t n = s.size();
  if (n < 6) return vacuous(CertificateKind::kDet2x2, 2, n, 6);
  CertificateReport r;
  r.kind = CertificateKind::kDet2x2;
  r.mode = mode;
  r.note = "distinct read as pairwise distinct across all six variables";
  if (mode == CheckMode::kExhaustive) {
    if (n > kDet2x2ExhaustiveMax) {
      throw Error(ErrorCode::kTooLarge, "exhaustive det2x2 needs |S| <= 12");
    }
    std::array<std::size_t, 6> t{};
    std::vector<bool> used(n, false);
    // Depth-first over ordered tuples of pairwise-distinct indices.
    auto rec = [&](auto&& self, std::size_t depth) -> bool {
      if (depth == 6) {
        ++r.trials;
        if (det2x2_value(p, s[t[0]], s[t[1]], s[t[2]], s[t[3]], s[t[4]],
                         s[t[5]]) == 0) {
          for (std::size_t i : t) r.counterexample.push_back(s[i]);
          return true;
        }
        return false;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        used[i] = true;
        t[depth] = i;
        const bool hit = self(self, depth + 1);
        used[i] = false;
        if (hit) return true;
      }
      return false;
    };
    rec(rec, 0);
  } else {
    Rng rng(seed);
    std::vector<std::size_t> pool(n), pick;
    std::iota(pool.begin(), pool.end(), 0);
    for (u64 i = 0; i < trials; ++i) {
      draw_distinct(rng, pool, 6, pick);
      ++r.trials;
      if (det2x2_value(p, s[pick[0]], s[pick[1]], s[pick[2]], s[pick[3]],
                       s[pick[4]], s[pick[5]]) == 0) {
        if (r.counterexample.empty()) {
          for (std::size_t j : pick) r.counterexample.push_back(s[j]);
        }
        ++r.violations;
      }
    }
    r.note += "; randomized: no claim of full verification";
  }
  r.verified = r.counterexample.empty();
  if (mode == CheckMode::kExhaustive) r.violations = r.verified ? 0 : 1;
  return r;
}

namespace {

using Row = std::array<u64, 4>;

Row twelve_row(const PrimeModulus& p, u64 x, u64 y, u64 z) {
  const u64 xy = p.sub(x, y);
  const u64 xz = p.sub(x, z);
  return {xy, xz, p.mul(z, xy), p.mul(y, xz)};
}

constexpr int kMinorPairs[6][2] = {{0, 1}, {0, 2}, {0, 3},
                                   {1, 2}, {1, 3}, {2, 3}};
constexpr int kOrient[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                               {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

void minors(const PrimeModulus& p, const Row& a, const Row& b,
            std::array<u64, 6>& out) {
  for (int i = 0; i < 6; ++i) {
    const int c0 = kMinorPairs[i][0];
    const int c1 = kMinorPairs[i][1];
    out[i] = p.sub(p.mul(a[c0], b[c1]), p.mul(a[c1], b[c0]));
  }
}

// det from minors of rows {0,1} (m01) and rows {2,3} (m23).
u64 laplace(const PrimeModulus& p, const std::array<u64, 6>& m01,
            const std::array<u64, 6>& m23) {
  // Complement of pair i is pair 5 - i; sign (-1)^(1 + c0 + c1).
  u64 det = 0;
  for (int i = 0; i < 6; ++i) {
    const u64 term = p.mul(m01[i], m23[5 - i]);
    const int parity = (1 + kMinorPairs[i][0] + kMinorPairs[i][1]) % 2;
    det = parity == 0 ? p.add(det, term) : p.sub(det, term);
  }
  return det;
}

// Exhaustive search over one 12-element subset modulo row order and letter
// order: 15400 partitions into triples times 216 orientations.
bool twelve_subset_search(const PrimeModulus& p, const std::array<u64, 12>& v,
                          CertificateReport& r) {
  std::array<std::array<std::size_t, 3>, 4> triples{};
  std::array<bool, 12> used{};
  std::array<std::array<Row, 6>, 4> rows{};

  auto evaluate = [&]() -> bool {
    for (std::size_t t = 0; t < 4; ++t) {
      for (int o = 0; o < 6; ++o) {
        rows[t][o] = twelve_row(p, v[triples[t][kOrient[o][0]]],
                                v[triples[t][kOrient[o][1]]],
                                v[triples[t][kOrient[o][2]]]);
      }
    }
    std::array<u64, 6> m01, m23;
    for (int o1 = 0; o1 < 6; ++o1) {
      minors(p, rows[0][0], rows[1][o1], m01);
      for (int o2 = 0; o2 < 6; ++o2) {
        for (int o3 = 0; o3 < 6; ++o3) {
          minors(p, rows[2][o2], rows[3][o3], m23);
          ++r.trials;
          if (laplace(p, m01, m23) != 0) continue;
          const int orient[4] = {0, o1, o2, o3};
          std::vector<u64> xs, ys, zs;
          for (std::size_t t = 0; t < 4; ++t) {
            xs.push_back(v[triples[t][kOrient[orient[t]][0]]]);
            ys.push_back(v[triples[t][kOrient[orient[t]][1]]]);
            zs.push_back(v[triples[t][kOrient[orient[t]][2]]]);
          }
          r.counterexample = xs;
          r.counterexample.insert(r.counterexample.end(), ys.begin(), ys.end());
          r.counterexample.insert(r.counterexample.end(), zs.begin(), zs.end());
          return true;
        }
      }
    }
    return false;
  };

  auto rec = [&](auto&& self, std::size_t t) -> bool {
    if (t == 4) return evaluate();
    std::size_t first = 0;
    while (used[first]) ++first;
    used[first] = true;
    for (std::size_t b = first + 1; b < 12; ++b) {
      if (used[b]) continue;
      used[b] = true;
      for (std::size_t c = b + 1; c < 12; ++c) {
        if (used[c]) continue;
        used[c] = true;
        triples[t] = {first, b, c};
        const bool hit = self(self, t + 1);
        used[c] = false;
        if (hit) {
          used[b] = false;
          used[first] = false;
          return true;
        }
      }
      used[b] = false;
    }
    used[first] = false;
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

CertificateReport check_twelve(const ConstrainedSet& set, CheckMode mode,
                               u64 trials, Seed seed) {
  const PrimeModulus& p = set.modulus();
  const auto& s = set.elements();
  const std::size_t n = s.size();
  if (n < 12) return vacuous(CertificateKind::kTwelve, 2, n, 12);
  CertificateReport r;
  r.kind = CertificateKind::kTwelve;
  r.mode = mode;
  r.note = "12-subsets with every role assignment";
  if (mode == CheckMode::kExhaustive) {
    if (n > kTwelveExhaustiveMax) {
      throw Error(ErrorCode::kTooLarge, "exhaustive twelve check needs |S| <= 13");
    }
    std::vector<std::size_t> idx = first_combination(12);
    do {
      std::array<u64, 12> v;
      for (std::size_t i = 0; i < 12; ++i) v[i] = s[idx[i]];
      if (twelve_subset_search(p, v, r)) break;
    } while (next_combination(idx, n));
    r.verified = r.counterexample.empty();
    r.violations = r.verified ? 0 : 1;
    r.note += " (up to row order and letter order, which preserve det = 0)";
    return r;
  }
  Rng rng(seed);
  std::vector<std::size_t> pool(n), pick;
  std::iota(pool.begin(), pool.end(), 0);
  for (u64 i = 0; i < trials; ++i) {
    draw_distinct(rng, pool, 12, pick);
    TwelvePoints t;
    for (std::size_t j = 0; j < 4; ++j) {
      t.x[j] = s[pick[j]];
      t.y[j] = s[pick[4 + j]];
      t.z[j] = s[pick[8 + j]];
    }
    ++r.trials;
    if (twelve_det(p, t) == 0) {
      if (r.counterexample.empty()) {
        for (std::size_t j : pick) r.counterexample.push_back(s[j]);
      }
      ++r.violations;
    }
  }
  r.verified = r.counterexample.empty();
  r.note += "; randomized: no claim of full verification";
  return r;
}

bool counterexample_is_genuine(const CertificateReport& report,
                               const PrimeModulus& p) {
  const auto& c = report.counterexample;
  auto all_distinct = [&] {
    std::vector<u64> v = c;
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  switch (report.kind) {
    case CertificateKind::kWeakSidon:
    case CertificateKind::kBk: {
      const std::size_t k = report.k;
      if (c.size() != 2 * k) return false;
      std::vector<u64> a(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
      std::vector<u64> b(c.begin() + static_cast<std::ptrdiff_t>(k), c.end());
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a == b) return false;
      if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
      if (std::adjacent_find(b.begin(), b.end()) != b.end()) return false;
      u64 sa = 0, sb = 0;
      for (u64 x : a) sa = p.add(sa, x % p.value());
      for (u64 x : b) sb = p.add(sb, x % p.value());
      return sa == sb;
    }
    case CertificateKind::kDet2x2:
      return c.size() == 6 && all_distinct() &&
             det2x2_value(p, c[0], c[1], c[2], c[3], c[4], c[5]) == 0;
    case CertificateKind::kTwelve: {
      if (c.size() != 12 || !all_distinct()) return false;
      TwelvePoints t;
      for (std::size_t j = 0; j < 4; ++j) {
        t.x[j] = c[j];
        t.y[j] = c[4 + j];
        t.z[j] = c[8 + j];
      }
      return twelve_det(p, t) == 0;
    }
  }
  return false;
}

}  // namespace cdlp
