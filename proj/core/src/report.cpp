#include "cdlp/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include "cdlp/serialize.hpp"
#include "cdlp/sets.hpp"
#include "cdlp/suites.hpp"

namespace cdlp {

json to_json(const ExperimentReport& report) {
  return {{"command", report.command},
          {"seed", report.seed},
          {"version", std::string(kVersion)},
          {"result", report.result},
          {"timing_ms", report.timing_ms}};
}

std::string BoundsTable::to_csv() const {
  std::ostringstream out;
  out << "family,p,set_size,alpha,bound_kind,value,log_p_value\n";
  for (const auto& r : rows) {
    out << r.family << ',' << r.p << ',' << r.set_size << ',' << r.alpha << ','
        << r.bound_kind << ',' << format_real(r.value) << ','
        << format_real(r.log_p_value) << '\n';
  }
  return out.str();
}

namespace {

class TableBuilder {
 public:
  TableBuilder(BoundsTable& table, const Fraction& alpha)
      : table_(table), alpha_(alpha) {}

  // Emits the triangle rows and returns the trivial lower bound.
  double add_triangle(const std::string& family, const ConstrainedSet& s) {
    const GenericBounds b = generic_bounds(s, alpha_);
    add(family, s, "trivial_lower", b.lower);
    add(family, s, "upper", b.upper);
    add(family, s, "grid_upper", static_cast<double>(b.grid_upper));
    return b.lower;
  }

  void add(const std::string& family, const ConstrainedSet& s,
           const std::string& kind, double value) {
    const double lp = std::log(static_cast<double>(s.modulus().value()));
    table_.rows.push_back({family, s.modulus().value(), s.size(), alpha_.str(),
                           kind, value, std::log(value) / lp});
  }

  // Adds the certificate row if the report verifies; returns the bound or 0.
  double add_certificate(const std::string& family, const ConstrainedSet& s,
                         const CertificateReport& report) {
    if (!report.verified || s.size() == 0) return 0;
    const CertifiedBound b = certificate_lower_bound(s, alpha_, report);
    add(family, s,
        std::string(certificate_name(report.kind)) + "_lower_" +
            std::string(kind_name(b.bounds)),
        b.value);
    return b.value;
  }

 private:
  BoundsTable& table_;
  Fraction alpha_;
};

}  // namespace

BoundsTable bounds_table(const ReportOptions& options, Seed seed) {
  BoundsTable table;
  TableBuilder tb(table, options.alpha);
  for (u64 pv : options.primes) {
    const PrimeModulus p(pv);

    {
      const ConstrainedSet s = greedy_weak_sidon(p, pv).set;
      const double lo = tb.add_triangle("weak-sidon", s);
      tb.add_certificate("weak-sidon", s, check_weak_sidon(s));
      tb.add("weak-sidon", s, "effective_lower_generic", lo);
    }

    for (unsigned k = 2; k <= 4; ++k) {
      if (iroot_floor(pv, k) <= 3) continue;
      const std::string family = "b" + std::to_string(k);
      const ConstrainedSet s = embed_bk_mod_p(p, k);
      if (binomial(s.size(), k) > kSumCheckCap) continue;
      const double lo = tb.add_triangle(family, s);
      tb.add_certificate(family, s, check_bk_sums(s, k));
      tb.add(family, s, "effective_lower_generic", lo);
    }

    {
      const ConstrainedSet s = small_squares_set(p);
      const double lo = tb.add_triangle("squares", s);
      tb.add("squares", s, "effective_lower_generic", lo);
    }

    {
      const ConstrainedSet s =
          random_subset(p, isqrt_floor(pv), derive_seed(seed, pv, 1));
      const double lo = tb.add_triangle("random", s);
      tb.add("random", s, "effective_lower_generic", lo);
    }

    // S(N, 12) with N = p^(1/4); the twelve certificate is randomized.
    const u64 n = iroot_floor(pv, 4);
    if (n >= 12) {
      const ConstrainedSet s =
          sample_snk(p, n, 12, derive_seed(seed, pv, 2)).set;
      const double lo = tb.add_triangle("snk12", s);
      const double c = tb.add_certificate(
          "snk12", s,
          check_twelve(s, CheckMode::kRandomized, options.twelve_trials,
                       derive_seed(seed, pv, 3)));
      tb.add("snk12", s, "effective_lower_generic", std::max(lo, c));
    }
  }
  return table;
}

std::vector<BoundsRow> triangle_violations(const BoundsTable& table) {
  using Key = std::tuple<std::string, u64, u64>;
  std::map<Key, std::pair<double, double>> range;
  for (const auto& r : table.rows) {
    auto& [lo, hi] = range[{r.family, r.p, r.set_size}];
    if (r.bound_kind == "trivial_lower") lo = r.value;
    if (r.bound_kind == "upper") hi = r.value;
  }
  std::vector<BoundsRow> bad;
  for (const auto& r : table.rows) {
    if (r.bound_kind != "trivial_lower" && r.bound_kind != "upper" &&
        r.bound_kind != "effective_lower_generic") {
      continue;
    }
    const auto& [lo, hi] = range.at({r.family, r.p, r.set_size});
    if (r.value < lo || r.value > hi) bad.push_back(r);
  }
  return bad;
}

}  // namespace cdlp
