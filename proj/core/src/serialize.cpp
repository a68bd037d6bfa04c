#include "cdlp/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cdlp {

json to_json(const ConstrainedSet& set) {
  return {{"p", set.modulus().value()},
          {"elements", set.elements()},
          {"provenance",
           {{"kind", set.provenance().kind},
            {"params", set.provenance().params},
            {"seed", set.provenance().seed}}}};
}

ConstrainedSet constrained_set_from_json(const json& j) {
  try {
    const PrimeModulus p(j.at("p").get<u64>());
    Provenance prov;
    if (j.contains("provenance")) {
      const json& pj = j.at("provenance");
      prov.kind = pj.value("kind", std::string("explicit"));
      prov.params = pj.value("params", json::object());
      prov.seed = pj.value("seed", u64{0});
    }
    return ConstrainedSet(p, j.at("elements").get<std::vector<u64>>(),
                          std::move(prov));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("set file: ") + e.what());
  }
}

json to_json(const QuerySet& lines) {
  json out = json::array();
  for (const Line& l : lines.lines()) out.push_back({l.a, l.b});
  return out;
}

json to_json(const PointSet& points) { return points.points(); }

json to_json(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json to_json(const ComplexityResult& r) {
  json j{{"kind", std::string(kind_name(r.kind))},
         {"alpha", r.alpha.str()},
         {"value", r.value},
         {"exact", r.exact}};
  json w = json::object();
  if (r.lines) w["lines"] = to_json(*r.lines);
  if (r.points) w["points"] = to_json(*r.points);
  if (r.diff_x) w["x"] = to_json(*r.diff_x);
  if (r.diff_y) w["y"] = to_json(*r.diff_y);
  j["witness"] = w;
  return j;
}

json to_json(const CertificateReport& r) {
  json j{{"certificate", std::string(certificate_name(r.kind))},
         {"verified", r.verified},
         {"mode", std::string(check_mode_name(r.mode))},
         {"trials", r.trials},
         {"violations", r.violations},
         {"note", r.note}};
  if (r.kind == CertificateKind::kBk) j["k"] = r.k;
  j["counterexample"] =
      r.counterexample.empty() ? json(nullptr) : json(r.counterexample);
  return j;
}

json to_json(const AttackOutcome& o) {
  json j{{"method", o.method},
         {"status", std::string(attack_status_name(o.status))},
         {"queries", o.queries},
         {"success", o.success}};
  j["recovered"] = o.recovered ? json(*o.recovered) : json(nullptr);
  if (o.method == "low-weight") j["rounds"] = o.rounds;
  return j;
}

json to_json(const ProjectiveLine& l) { return {l.u, l.v, l.w}; }

json to_json(const Grid7& g) {
  json letters = json::array();
  for (const auto& l : g.letters) letters.push_back(to_json(l));
  json numbered = json::array();
  for (const auto& l : g.numbered) numbered.push_back(to_json(l));
  return {{"letters", letters}, {"numbered", numbered}};
}

json to_json(const TwelvePoints& t) {
  return {{"x", t.x}, {"y", t.y}, {"z", t.z}};
}

Grid7 grid_from_json(const PrimeModulus& p, const json& j) {
  try {
    Grid7 g;
    auto line = [&](const json& t) {
      const auto v = t.get<std::vector<u64>>();
      if (v.size() != 3) throw Error(ErrorCode::kParseError, "line needs 3 entries");
      return make_line(p, v[0], v[1], v[2]);
    };
    const json& letters = j.at("letters");
    const json& numbered = j.at("numbered");
    if (letters.size() != 3 || numbered.size() != 4) {
      throw Error(ErrorCode::kParseError, "grid needs 3 letter and 4 numbered lines");
    }
    for (std::size_t i = 0; i < 3; ++i) g.letters[i] = line(letters[i]);
    for (std::size_t i = 0; i < 4; ++i) g.numbered[i] = line(numbered[i]);
    return g;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("grid: ") + e.what());
  }
}

TwelvePoints twelve_points_from_json(const json& j) {
  try {
    TwelvePoints t;
    auto take = [&](const char* key, std::array<u64, 4>& out, std::size_t need) {
      const auto v = j.at(key).get<std::vector<u64>>();
      if (v.size() < need || v.size() > 4) {
        throw Error(ErrorCode::kParseError,
                    std::string("'") + key + "' has the wrong length");
      }
      for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    };
    take("x", t.x, 4);
    take("y", t.y, 4);
    take("z", t.z, 3);
    return t;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("points: ") + e.what());
  }
}

std::string format_real(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << contents;
}

}  // namespace cdlp
