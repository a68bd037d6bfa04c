#include "cdlp/complexity.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

namespace cdlp {

Fraction::Fraction(i64 num, i64 den) {
  if (den <= 0 || num <= 0 || num > den) {
    throw Error(ErrorCode::kInvalidArgument,
                "alpha must lie in (0, 1], got " + std::to_string(num) + "/" +
                    std::to_string(den));
  }
  const i64 g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Fraction Fraction::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    i64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw Error(ErrorCode::kParseError,
                  "bad fraction '" + std::string(text) + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_int(text), 1);
  return Fraction(parse_int(text.substr(0, slash)),
                  parse_int(text.substr(slash + 1)));
}

std::string Fraction::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

u64 Fraction::needed(u64 n) const {
  const u128 prod = static_cast<u128>(n) * static_cast<u64>(num_);
  const u128 den = static_cast<u64>(den_);
  return static_cast<u64>((prod + den - 1) / den);
}

std::string_view kind_name(ComplexityKind kind) {
  switch (kind) {
    case ComplexityKind::kGeneric: return "generic";
    case ComplexityKind::kBsgs: return "bsgs";
    case ComplexityKind::kBsgs1: return "bsgs1";
  }
  return "unknown";
}

ComplexityKind parse_kind(std::string_view name) {
  if (name == "generic") return ComplexityKind::kGeneric;
  if (name == "bsgs") return ComplexityKind::kBsgs;
  if (name == "bsgs1") return ComplexityKind::kBsgs1;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown complexity kind '" + std::string(name) + "'");
}

PointSet witness_intersection(const ComplexityResult& r) {
  switch (r.kind) {
    case ComplexityKind::kGeneric:
      return intersection_set(*r.lines);
    case ComplexityKind::kBsgs:
      return intersection_set_bsgs(*r.lines, *r.points);
    case ComplexityKind::kBsgs1: {
      // X - Y as I({(1, y)}, X).
      const PrimeModulus& p = r.diff_x->modulus();
      std::vector<Line> ls;
      for (u64 y : r.diff_y->points()) ls.push_back({1, y});
      return intersection_set_bsgs(QuerySet(p, std::move(ls)), *r.diff_x);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown kind");
}

u64 grid_lambda(const PrimeModulus& p, const Fraction& alpha) {
  // Smallest lambda with lambda^2 * den >= num * p.
  const u128 target = static_cast<u128>(alpha.num()) * p.value();
  u64 lambda = isqrt_floor(static_cast<u64>(target / alpha.den()));
  while (static_cast<u128>(lambda) * lambda * alpha.den() < target) ++lambda;
  while (lambda > 0 &&
         static_cast<u128>(lambda - 1) * (lambda - 1) * alpha.den() >= target) {
    --lambda;
  }
  return lambda;
}

GenericBounds generic_bounds(const ConstrainedSet& set, const Fraction& alpha) {
  if (set.empty()) throw Error(ErrorCode::kEmptySet, "S is empty");
  const double a_size = alpha.to_double() * static_cast<double>(set.size());
  GenericBounds b;
  b.lower = std::sqrt(2.0 * a_size);
  b.grid_upper = 2 * grid_lambda(set.modulus(), alpha);
  b.upper = std::min(a_size / 2.0 + 3.0, static_cast<double>(b.grid_upper));
  return b;
}

QuerySet pairing_construction(const ConstrainedSet& set, const Fraction& alpha) {
  const PrimeModulus& p = set.modulus();
  u64 two_m = alpha.needed(set.size());
  two_m += two_m % 2;
  if (two_m > set.size()) {
    throw Error(ErrorCode::kInsufficientElements,
                "need " + std::to_string(two_m) + " elements, |S| = " +
                    std::to_string(set.size()));
  }
  std::vector<Line> lines = {{0, 0}, {0, 1}};
  const auto& s = set.elements();
  for (u64 i = 0; i < two_m; i += 2) {
    const u64 x1 = s[i];
    const u64 x2 = s[i + 1];
    // Through (x1, 0) and (x2, 1).
    lines.push_back({p.inv(p.sub(x2, x1)), p.div(x1, p.sub(x1, x2))});
  }
  return QuerySet(p, std::move(lines));
}

QuerySet grid_construction(const PrimeModulus& p, const Fraction& alpha) {
  const u64 lambda = grid_lambda(p, alpha);
  std::vector<Line> lines;
  for (u64 i = 0; i < lambda; ++i) {
    lines.push_back({0, i % p.value()});
    lines.push_back({1, p.neg(p.mul(lambda % p.value(), i % p.value()))});
  }
  return QuerySet(p, std::move(lines));
}

SolverCaps solver_caps(ComplexityKind kind) {
  switch (kind) {
    case ComplexityKind::kGeneric: return {11, 4};
    case ComplexityKind::kBsgs: return {11, 3};
    case ComplexityKind::kBsgs1: return {31, 4};
  }
  return {0, 0};
}

namespace {

using Mask = u64;
using Tuple = std::vector<std::size_t>;

// Processes items 0..count-1 (lexicographically ordered by their leading
// component) and returns the success with the smallest item index, so the
// answer does not depend on the number of workers.
template <typename Fn>
std::optional<Tuple> first_success(std::size_t count, unsigned workers, Fn fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (count == 0) return std::nullopt;
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (auto r = fn(i)) return r;
    }
    return std::nullopt;
  }
  std::atomic<std::size_t> best(count);
  std::vector<std::optional<Tuple>> found(count);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) {
        if (i > best.load()) return;
        if (auto r = fn(i)) {
          found[i] = std::move(r);
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  const std::size_t b = best.load();
  if (b == count) return std::nullopt;
  return found[b];
}

std::vector<int> set_positions(const ConstrainedSet& set) {
  std::vector<int> pos(set.modulus().value(), -1);
  for (std::size_t i = 0; i < set.size(); ++i) {
    pos[set.elements()[i]] = static_cast<int>(i);
  }
  return pos;
}

Mask bit_of(const std::vector<int>& pos, u64 x) {
  return pos[x] < 0 ? 0 : Mask{1} << pos[x];
}

std::vector<std::vector<u64>> all_combinations(u64 n, u64 k) {
  std::vector<std::vector<u64>> out;
  std::vector<u64> cur;
  auto rec = [&](auto&& self, u64 start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (u64 v = start; v + (k - cur.size()) <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// --- generic ---

std::optional<Tuple> search_generic(const PrimeModulus& p,
                                    const std::vector<int>& pos, u64 need,
                                    std::size_t m, unsigned workers) {
  const std::size_t n = p.value() * p.value();
  std::vector<Mask> pair(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const u64 ai = i / p.value(), bi = i % p.value();
    for (std::size_t j = i + 1; j < n; ++j) {
      const u64 aj = j / p.value(), bj = j % p.value();
      if (ai == aj) continue;
      const Mask mk = bit_of(pos, p.div(p.sub(bj, bi), p.sub(ai, aj)));
      pair[i * n + j] = mk;
      pair[j * n + i] = mk;
    }
  }
  const u64 total_pairs = m * (m - 1) / 2;
  return first_success(n, workers, [&](std::size_t first) -> std::optional<Tuple> {
    Tuple chosen{first};
    auto rec = [&](auto&& self, Mask mask) -> bool {
      const std::size_t d = chosen.size();
      if (d == m) return static_cast<u64>(std::popcount(mask)) >= need;
      // Pairs still to be added once line d is in place.
      const u64 later = total_pairs - (d + 1) * d / 2;
      for (std::size_t c = chosen.back() + 1; c + (m - d) <= n; ++c) {
        Mask next = mask;
        for (std::size_t t : chosen) next |= pair[t * n + c];
        if (static_cast<u64>(std::popcount(next)) + later < need) continue;
        chosen.push_back(c);
        if (self(self, next)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (rec(rec, 0)) return chosen;
    return std::nullopt;
  });
}

// --- bsgs ---

std::optional<Tuple> search_bsgs(const PrimeModulus& p,
                                 const std::vector<int>& pos, u64 need,
                                 std::size_t m, unsigned workers,
                                 const std::vector<std::vector<u64>>& cs) {
  const std::size_t n = p.value() * (p.value() - 1);
  const std::size_t nc = cs.size();
  std::vector<Mask> hit(n * nc, 0);
  for (std::size_t l = 0; l < n; ++l) {
    const u64 a = 1 + l / p.value(), b = l % p.value();
    const u64 inv_a = p.inv(a);
    for (std::size_t ci = 0; ci < nc; ++ci) {
      Mask mk = 0;
      for (u64 c : cs[ci]) mk |= bit_of(pos, p.mul(p.sub(c, b), inv_a));
      hit[l * nc + ci] = mk;
    }
  }
  return first_success(n, workers, [&](std::size_t first) -> std::optional<Tuple> {
    Tuple chosen{first};
    std::vector<std::vector<Mask>> acc(m + 1, std::vector<Mask>(nc, 0));
    for (std::size_t ci = 0; ci < nc; ++ci) acc[1][ci] = hit[first * nc + ci];
    std::size_t found_c = nc;
    auto rec = [&](auto&& self) -> bool {
      const std::size_t d = chosen.size();
      if (d == m) {
        for (std::size_t ci = 0; ci < nc; ++ci) {
          if (static_cast<u64>(std::popcount(acc[d][ci])) >= need) {
            found_c = ci;
            return true;
          }
        }
        return false;
      }
      for (std::size_t l = chosen.back() + 1; l + (m - d) <= n; ++l) {
        for (std::size_t ci = 0; ci < nc; ++ci) {
          acc[d + 1][ci] = acc[d][ci] | hit[l * nc + ci];
        }
        chosen.push_back(l);
        if (self(self)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (!rec(rec)) return std::nullopt;
    chosen.push_back(found_c);  // C index rides at the end
    return chosen;
  });
}

// --- bsgs1 ---

std::optional<Tuple> search_bsgs1(const PrimeModulus& p,
                                  const std::vector<int>& pos, u64 need,
                                  std::size_t m, unsigned workers) {
  const u64 pv = p.value();
  // X = {0} ∪ rest with rest a lexicographic (m-1)-subset of [1, p).
  std::vector<std::vector<u64>> xs;
  for (auto& rest : all_combinations(pv - 1, m - 1)) {
    std::vector<u64> x{0};
    for (u64 r : rest) x.push_back(r + 1);
    xs.push_back(std::move(x));
  }
  return first_success(xs.size(), workers,
                       [&](std::size_t xi) -> std::optional<Tuple> {
    const auto& x = xs[xi];
    std::vector<Mask> dmask(pv, 0);
    for (u64 y = 0; y < pv; ++y) {
      for (u64 xv : x) dmask[y] |= bit_of(pos, p.sub(xv, y));
    }
    Tuple ys;
    auto rec = [&](auto&& self, u64 start, Mask mask) -> bool {
      const std::size_t d = ys.size();
      if (d == m) return static_cast<u64>(std::popcount(mask)) >= need;
      if (static_cast<u64>(std::popcount(mask)) + (m - d) * m < need) return false;
      for (u64 y = start; y + (m - d) <= pv; ++y) {
        ys.push_back(y);
        if (self(self, y + 1, mask | dmask[y])) return true;
        ys.pop_back();
      }
      return false;
    };
    if (!rec(rec, 0, 0)) return std::nullopt;
    Tuple out{xi};
    out.insert(out.end(), ys.begin(), ys.end());
    return out;
  });
}

}  // namespace

ComplexityResult exact_complexity(const ConstrainedSet& set,
                                  const Fraction& alpha, ComplexityKind kind,
                                  const SolverOptions& options) {
  if (set.empty()) throw Error(ErrorCode::kEmptySet, "S is empty");
  const PrimeModulus& p = set.modulus();
  const SolverCaps caps = solver_caps(kind);
  if (p.value() > caps.max_p) {
    throw Error(ErrorCode::kSearchTooLarge,
                std::string(kind_name(kind)) + " solver needs p <= " +
                    std::to_string(caps.max_p));
  }
  const std::vector<int> pos = set_positions(set);
  const u64 need = alpha.needed(set.size());
  ComplexityResult r;
  r.kind = kind;
  r.alpha = alpha;
  r.exact = true;

  // Smallest m not ruled out by counting: C(m,2) points for generic, m^2 for
  // the line-vs-point kinds.
  u64 m = 1;
  if (kind == ComplexityKind::kGeneric) {
    m = 2;
    while (m * (m - 1) / 2 < need) ++m;
  } else {
    while (m * m < need) ++m;
  }
  for (; m <= caps.max_value; ++m) {
    switch (kind) {
      case ComplexityKind::kGeneric: {
        auto w = search_generic(p, pos, need, m, options.workers);
        if (!w) continue;
        std::vector<Line> ls;
        for (std::size_t idx : *w) ls.push_back({idx / p.value(), idx % p.value()});
        r.lines = QuerySet(p, std::move(ls));
        r.value = m;
        return r;
      }
      case ComplexityKind::kBsgs: {
        const auto cs = all_combinations(p.value(), m);
        auto w = search_bsgs(p, pos, need, m, options.workers, cs);
        if (!w) continue;
        std::vector<Line> ls;
        for (std::size_t i = 0; i < m; ++i) {
          ls.push_back({1 + (*w)[i] / p.value(), (*w)[i] % p.value()});
        }
        r.lines = QuerySet(p, std::move(ls));
        r.points = PointSet(p, cs[w->back()]);
        r.value = m;
        return r;
      }
      case ComplexityKind::kBsgs1: {
        auto w = search_bsgs1(p, pos, need, m, options.workers);
        if (!w) continue;
        std::vector<u64> x{0};
        // Rebuild X from its index among the (m-1)-subsets of [1, p).
        const auto rests = all_combinations(p.value() - 1, m - 1);
        for (u64 v : rests[(*w)[0]]) x.push_back(v + 1);
        std::vector<u64> y(w->begin() + 1, w->end());
        r.diff_x = PointSet(p, std::move(x));
        r.diff_y = PointSet(p, std::move(y));
        r.value = m;
        return r;
      }
    }
  }
  throw Error(ErrorCode::kSearchTooLarge,
              std::string(kind_name(kind)) + " complexity exceeds the cap of " +
                  std::to_string(caps.max_value));
}

ComplexityKind certificate_target(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kWeakSidon:
    case CertificateKind::kBk: return ComplexityKind::kBsgs1;
    case CertificateKind::kDet2x2: return ComplexityKind::kBsgs;
    case CertificateKind::kTwelve: return ComplexityKind::kGeneric;
  }
  return ComplexityKind::kGeneric;
}

double certificate_formula(CertificateKind kind, unsigned k, double a) {
  switch (kind) {
    case CertificateKind::kWeakSidon:
      return std::pow(a / std::sqrt(2.0), 2.0 / 3.0);
    case CertificateKind::kBk: {
      const double kk = static_cast<double>(k);
      return std::pow(a / (2.0 * kk), kk / (kk + 1.0));
    }
    case CertificateKind::kDet2x2:
      return std::pow(a / std::sqrt(3.0), 2.0 / 3.0);
    case CertificateKind::kTwelve:
      return std::pow(a / std::cbrt(4.0), 3.0 / 5.0);
  }
  return 0;
}

CertifiedBound certificate_lower_bound(const ConstrainedSet& set,
                                       const Fraction& alpha,
                                       const CertificateReport& report) {
  if (!report.verified) {
    throw Error(ErrorCode::kUncertifiedSet,
                std::string(certificate_name(report.kind)) +
                    " certificate not verified for S");
  }
  CertifiedBound b;
  b.certificate = report.kind;
  b.bounds = certificate_target(report.kind);
  b.randomized_caveat = report.mode == CheckMode::kRandomized;
  b.value = certificate_formula(
      report.kind, report.k,
      alpha.to_double() * static_cast<double>(set.size()));
  return b;
}

ChainReport verify_chain(const ConstrainedSet& set, const Fraction& alpha,
                         const SolverOptions& options) {
  ChainReport c{exact_complexity(set, alpha, ComplexityKind::kGeneric, options),
                exact_complexity(set, alpha, ComplexityKind::kBsgs, options),
                exact_complexity(set, alpha, ComplexityKind::kBsgs1, options)};
  c.generic_le_twice_bsgs = c.generic.value <= 2 * c.bsgs.value;
  c.bsgs_le_bsgs1 = c.bsgs.value <= c.bsgs1.value;
  return c;
}

}  // namespace cdlp
