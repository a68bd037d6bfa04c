#ifndef CDLP_SERIALIZE_HPP_
#define CDLP_SERIALIZE_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "cdlp/attacks.hpp"
#include "cdlp/complexity.hpp"
#include "cdlp/menelaus.hpp"
#include "cdlp/sets.hpp"

namespace cdlp {

using nlohmann::json;

// {"p", "elements", "provenance": {"kind", "params", "seed"}}
json to_json(const ConstrainedSet& set);
// Throws kParseError on malformed documents.
ConstrainedSet constrained_set_from_json(const json& j);

json to_json(const QuerySet& lines);
json to_json(const PointSet& points);
json to_json(const ComplexityResult& result);
json to_json(const CertificateReport& report);
json to_json(const AttackOutcome& outcome);
json to_json(const ProjectiveLine& line);
json to_json(const Grid7& grid);
json to_json(const TwelvePoints& pts);
json to_json(const Rational& r);  // "num/den"

Grid7 grid_from_json(const PrimeModulus& p, const json& j);
TwelvePoints twelve_points_from_json(const json& j);

// Real numbers with 12 significant digits.
std::string format_real(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace cdlp

#endif  // CDLP_SERIALIZE_HPP_
