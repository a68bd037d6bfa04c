#ifndef CDLP_SUITES_HPP_
#define CDLP_SUITES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cdlp/field.hpp"
#include "cdlp/generic_group.hpp"
#include "cdlp/lines.hpp"

namespace cdlp {

struct SuiteItem {
  std::string name;
  bool pass = false;
  nlohmann::json measured = nlohmann::json::object();
};

struct SuiteReport {
  std::string id;
  nlohmann::json params;  // defaults merged with overrides
  std::vector<SuiteItem> items;

  bool passed() const;
};

// Bumped whenever a default changes.
constexpr int kDefaultsVersion = 1;

const std::vector<std::string>& suite_ids();

// {"version": n, "suites": {id: {param: value}}}
const nlohmann::json& suite_defaults();

// Throws kInvalidArgument for an unknown id or an unknown parameter.
SuiteReport run_suite(std::string_view id, const nlohmann::json& overrides,
                      Seed seed);

// Queries sigma(g^{a x + b}) for each line in order. A label collision between
// two lines of different slope (the inputs g and g^x count as (0,1) and (1,0))
// yields x; otherwise answers fallback_guess.
Adversary line_query_adversary(std::vector<Line> lines, u64 fallback_guess);

// Deterministic child seed for (seed, a, b, c).
Seed derive_seed(Seed seed, u64 a, u64 b = 0, u64 c = 0);

nlohmann::json to_json(const SuiteReport& report);

}  // namespace cdlp

#endif  // CDLP_SUITES_HPP_
