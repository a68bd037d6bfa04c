#ifndef CDLP_REPORT_HPP_
#define CDLP_REPORT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cdlp/complexity.hpp"
#include "cdlp/field.hpp"

namespace cdlp {

constexpr std::string_view kVersion = "0.1.0";

// Envelope for every --json output of the command-line tool.
struct ExperimentReport {
  std::vector<std::string> command;  // argv echo
  u64 seed = 0;
  nlohmann::json result;
  double timing_ms = 0;
};

nlohmann::json to_json(const ExperimentReport& report);

// Bound kinds emitted per set:
//   trivial_lower            sqrt(2 alpha |S|)
//   upper                    min(alpha |S| / 2 + 3, 2 ceil(sqrt(alpha p)))
//   grid_upper               2 ceil(sqrt(alpha p))
//   <cert>_lower_<kind>      certificate formula, when the certificate holds
//   effective_lower_generic  max(trivial_lower, generic certificates)
struct BoundsRow {
  std::string family;
  u64 p = 0;
  u64 set_size = 0;
  std::string alpha;
  std::string bound_kind;
  double value = 0;
  double log_p_value = 0;  // ln(value) / ln(p)
};

struct BoundsTable {
  std::vector<BoundsRow> rows;

  // Header plus one line per row.
  std::string to_csv() const;
};

struct ReportOptions {
  std::vector<u64> primes = {101, 1009, 10007, 100003, 1000003};
  Fraction alpha{1, 1};
  u64 twelve_trials = 2000;
};

BoundsTable bounds_table(const ReportOptions& options, Seed seed);

// Rows of kind trivial_lower, upper and effective_lower_generic that fall
// outside [trivial_lower, upper] of their set.
std::vector<BoundsRow> triangle_violations(const BoundsTable& table);

}  // namespace cdlp

#endif  // CDLP_REPORT_HPP_
