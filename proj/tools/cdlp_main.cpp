// cdlp: command-line front end for the constrained-DLP toolkit.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cdlp/attacks.hpp"
#include "cdlp/complexity.hpp"
#include "cdlp/menelaus.hpp"
#include "cdlp/report.hpp"
#include "cdlp/serialize.hpp"
#include "cdlp/sets.hpp"
#include "cdlp/suites.hpp"

namespace {

using namespace cdlp;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

struct Globals {
  u64 seed = 0;
  bool json = false;
  std::string out;
  std::vector<std::string> argv;
};

// What a command produced. `payload` is the artifact written by --out
// (defaults to result.dump); `text` is the human-readable summary.
struct Output {
  json result;
  std::string text;
  std::optional<std::string> payload;
  bool ok = true;
};

int emit(const Globals& g, const Output& o, double ms) {
  const std::string payload = o.payload ? *o.payload : o.result.dump(2) + "\n";
  if (!g.out.empty()) write_file(g.out, payload);
  if (g.json) {
    ExperimentReport rep{g.argv, g.seed, o.result, ms};
    std::cout << to_json(rep).dump(2) << "\n";
  } else if (!g.out.empty() || !o.payload) {
    std::cout << o.text;
  } else {
    std::cout << payload;
  }
  return o.ok ? kOk : kFailed;
}

ConstrainedSet load_set(const std::string& path) {
  return constrained_set_from_json(json::parse(read_file(path)));
}

json load_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
}

std::string join(const std::vector<u64>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

// --- construct ---

struct ConstructArgs {
  std::string kind;
  u64 p = 0;
  u64 size = 0;
  u64 n = 0;
  unsigned k = 2;
  unsigned bits = 0;
  unsigned t = 0;
  std::vector<u64> key;
};

Output run_construct(const Globals& g, const ConstructArgs& a) {
  const PrimeModulus p(a.p);
  std::optional<ConstrainedSet> s;
  if (a.kind == "random") {
    s = random_subset(p, a.size, Seed{g.seed});
  } else if (a.kind == "snk") {
    s = a.key.empty() ? sample_snk(p, a.n, a.k, Seed{g.seed}).set
                      : sample_snk(p, a.n, a.k, a.key).set;
  } else if (a.kind == "bose-chowla") {
    s = embed_bk_mod_p(p, a.k);
  } else if (a.kind == "squares") {
    s = small_squares_set(p);
  } else if (a.kind == "hamming") {
    s = hamming_weight_set(p, a.bits, a.t);
  } else {
    s = greedy_weak_sidon(p, a.size ? a.size : a.p).set;
  }
  Output o;
  o.result = to_json(*s);
  o.payload = o.result.dump(2) + "\n";
  std::ostringstream text;
  text << s->size() << " elements mod " << a.p << " (" << s->provenance().kind
       << " " << s->provenance().params.dump() << ", seed "
       << s->provenance().seed << ")\n";
  o.text = text.str();
  return o;
}

// --- check ---

struct CheckArgs {
  std::string set;
  std::string cert;
  unsigned k = 2;
  std::string mode = "exhaustive";
  u64 trials = 1000;
};

Output run_check(const Globals& g, const CheckArgs& a) {
  const ConstrainedSet s = load_set(a.set);
  const CheckMode mode =
      a.mode == "randomized" ? CheckMode::kRandomized : CheckMode::kExhaustive;
  CertificateReport r;
  switch (parse_certificate(a.cert)) {
    case CertificateKind::kWeakSidon: r = check_weak_sidon(s); break;
    case CertificateKind::kBk: r = check_bk_sums(s, a.k); break;
    case CertificateKind::kDet2x2:
      r = check_det2x2(s, mode, a.trials, Seed{g.seed});
      break;
    case CertificateKind::kTwelve:
      r = check_twelve(s, mode, a.trials, Seed{g.seed});
      break;
  }
  Output o;
  o.result = to_json(r);
  o.ok = r.verified;
  std::ostringstream text;
  text << certificate_name(r.kind) << ": "
       << (r.verified ? "verified" : "FAILED") << " (" << check_mode_name(r.mode)
       << ", " << r.trials << " tuples, " << r.violations << " violations)\n";
  if (!r.counterexample.empty()) {
    text << "counterexample: " << join(r.counterexample) << "\n";
  }
  if (!r.note.empty()) text << r.note << "\n";
  o.text = text.str();
  return o;
}

// --- complexity ---

struct ComplexityArgs {
  std::string set;
  std::string kind = "generic";
  std::string alpha = "1";
  unsigned workers = 1;
};

Output run_complexity(const Globals&, const ComplexityArgs& a) {
  const ConstrainedSet s = load_set(a.set);
  const Fraction alpha = Fraction::parse(a.alpha);
  const ComplexityResult r =
      exact_complexity(s, alpha, parse_kind(a.kind), SolverOptions{a.workers});
  const GenericBounds b = generic_bounds(s, alpha);
  Output o;
  o.result = to_json(r);
  o.result["generic_bounds"] = {{"lower", b.lower},
                                {"upper", b.upper},
                                {"grid_upper", b.grid_upper}};
  std::ostringstream text;
  text << a.kind << " complexity at alpha=" << alpha.str() << ": " << r.value
       << "\n";
  if (r.lines) text << "lines: " << to_json(*r.lines).dump() << "\n";
  if (r.points) text << "points: " << join(r.points->points()) << "\n";
  if (r.diff_x) text << "X: " << join(r.diff_x->points()) << "\n";
  if (r.diff_y) text << "Y: " << join(r.diff_y->points()) << "\n";
  o.text = text.str();
  return o;
}

// --- attack ---

struct AttackArgs {
  std::string method;
  u64 p = 0;
  std::optional<u64> secret;
  std::optional<u64> lo;
  std::optional<u64> hi;
  std::string set;
  std::string lines = "pairing";
  std::string alpha = "1";
  std::vector<u64> xs;
  std::vector<u64> ys;
  unsigned bits = 0;
  unsigned t = 0;
};

Output run_attack(const Globals& g, const AttackArgs& a) {
  Rng rng(Seed{g.seed});
  AttackOutcome out;
  u64 secret = 0;
  if (a.method == "queryset") {
    const ConstrainedSet s = load_set(a.set);
    const Fraction alpha = Fraction::parse(a.alpha);
    const QuerySet lines = a.lines == "grid"
                               ? grid_construction(s.modulus(), alpha)
                               : pairing_construction(s, alpha);
    secret = a.secret ? *a.secret : s.elements()[rng.uniform(s.size())];
    DlpInstance inst = new_instance(s.modulus(), secret, Seed{rng.next()});
    out = queryset_attack(inst, lines, s);
  } else {
    const PrimeModulus p(a.p);
    if (a.method == "bsgs") {
      const u64 lo = a.lo.value_or(0);
      const u64 hi = a.hi.value_or(a.p);
      if (lo >= hi) throw Error(ErrorCode::kInvalidArgument, "empty interval");
      secret = a.secret ? *a.secret : rng.uniform_range(lo, hi - 1);
      DlpInstance inst = new_instance(p, secret, Seed{rng.next()});
      out = bsgs_interval_attack(inst, lo, hi);
    } else if (a.method == "difference-cover") {
      secret = a.secret ? *a.secret : rng.uniform(a.p);
      DlpInstance inst = new_instance(p, secret, Seed{rng.next()});
      out = difference_cover_attack(inst, PointSet(p, a.xs), PointSet(p, a.ys));
    } else {
      if (a.bits == 0 || a.bits > 62 || a.t > a.bits) {
        throw Error(ErrorCode::kInvalidArgument, "need 0 < t <= bits <= 62");
      }
      if (!a.secret) {
        std::vector<unsigned> pos(a.bits);
        for (unsigned i = 0; i < a.bits; ++i) pos[i] = i;
        rng.shuffle(std::span<unsigned>(pos));
        for (unsigned i = 0; i < a.t; ++i) secret |= u64{1} << pos[i];
      } else {
        secret = *a.secret;
      }
      DlpInstance inst = new_instance(p, secret % a.p, Seed{rng.next()});
      out = low_weight_attack(inst, a.bits, a.t, Seed{rng.next()});
    }
  }
  Output o;
  o.result = to_json(out);
  o.result["secret"] = secret;
  o.ok = out.success;
  std::ostringstream text;
  text << out.method << ": " << attack_status_name(out.status) << " after "
       << out.queries << " queries";
  if (out.recovered) text << ", answer " << *out.recovered;
  text << (out.success ? " (correct)" : " (wrong)") << "\n";
  o.text = text.str();
  return o;
}

// --- menelaus ---

struct MenelausArgs {
  std::string file;
  u64 p = 0;
  bool vertical = false;
  bool case2 = false;
  bool concurrent = false;
};

Output run_menelaus_verify(const Globals&, const MenelausArgs& a) {
  const json doc = load_json(a.file);
  const PrimeModulus p(doc.at("p").get<u64>());
  Output o;
  TwelvePoints pts;
  if (doc.contains("grid")) {
    const Grid7 grid = grid_from_json(p, doc.at("grid"));
    grid.validate(p);
    pts = grid_points(p, grid);
  } else {
    pts = twelve_points_from_json(doc.at("points"));
  }
  const u64 det = twelve_det(p, pts);
  const CrossCheck c = twelve_det_cross_check(p, pts);
  const auto [lhs, rhs] = bipartite_product_identity(p, pts);
  o.result = {{"points", to_json(pts)},
              {"det", det},
              {"det_m_prime", c.det_m_prime},
              {"det_m_prime_equals_minus_det", c.equal_up_to_sign},
              {"product_lhs", lhs},
              {"product_rhs", rhs}};
  o.ok = det == 0;
  o.text = std::string("twelve determinant ") + std::to_string(det) +
           (det == 0 ? " (vanishes)\n" : " (does not vanish)\n");
  return o;
}

Output run_menelaus_complete(const Globals& g, const MenelausArgs& a) {
  const json doc = load_json(a.file);
  const PrimeModulus p(doc.at("p").get<u64>());
  const TwelvePoints pts = twelve_points_from_json(doc.at("points"));
  const Completion c = complete_configuration(p, pts, Seed{g.seed});
  Output o;
  o.result = {{"z4", c.z4},
              {"grid", to_json(c.witness)},
              {"points", to_json(grid_points(p, c.witness))},
              {"candidates_tried", c.candidates_tried}};
  o.text = "z4 = " + std::to_string(c.z4) + "\n";
  return o;
}

Output run_menelaus_sample(const Globals& g, const MenelausArgs& a) {
  const PrimeModulus p(a.p);
  const Grid7 grid = a.case2 ? sample_case2_grid(p, Seed{g.seed}, a.concurrent)
                             : sample_grid(p, Seed{g.seed}, a.vertical);
  const TwelvePoints pts = grid_points(p, grid);
  Output o;
  o.result = {{"p", a.p},
              {"grid", to_json(grid)},
              {"points", to_json(pts)},
              {"det", twelve_det(p, pts)}};
  o.text = o.result.dump(2) + "\n";
  return o;
}

// --- verify-theorem ---

struct TheoremArgs {
  std::string id;
  std::optional<u64> p;
  std::vector<u64> m;
  std::optional<u64> trials;
  std::vector<std::string> alpha;
  std::optional<u64> size;
  std::vector<std::string> params;
};

json parse_value(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    return text;
  }
}

Output run_theorem(const Globals& g, const TheoremArgs& a) {
  json overrides = json::object();
  if (a.p) overrides["p"] = *a.p;
  if (!a.m.empty()) overrides["m"] = a.m;
  if (a.trials) overrides["trials"] = *a.trials;
  if (!a.alpha.empty()) overrides["alpha"] = a.alpha;
  if (a.size) overrides["size"] = *a.size;
  for (const auto& kv : a.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "--param expects key=value");
    }
    overrides[kv.substr(0, eq)] = parse_value(kv.substr(eq + 1));
  }
  const SuiteReport rep = run_suite(a.id, overrides, Seed{g.seed});
  Output o;
  o.result = to_json(rep);
  o.ok = rep.passed();
  std::ostringstream text;
  for (const auto& item : rep.items) {
    text << (item.pass ? "PASS " : "FAIL ") << item.name << " "
         << item.measured.dump() << "\n";
  }
  text << rep.id << ": " << (rep.passed() ? "all assertions hold" : "FAILED")
       << "\n";
  o.text = text.str();
  return o;
}

// --- report ---

struct ReportArgs {
  std::vector<u64> primes;
  std::string alpha = "1";
  u64 trials = 2000;
};

Output run_report(const Globals& g, const ReportArgs& a) {
  ReportOptions opts;
  if (!a.primes.empty()) opts.primes = a.primes;
  opts.alpha = Fraction::parse(a.alpha);
  opts.twelve_trials = a.trials;
  const BoundsTable t = bounds_table(opts, Seed{g.seed});
  Output o;
  o.result = json::array();
  for (const auto& r : t.rows) {
    o.result.push_back({{"family", r.family},
                        {"p", r.p},
                        {"set_size", r.set_size},
                        {"alpha", r.alpha},
                        {"bound_kind", r.bound_kind},
                        {"value", r.value},
                        {"log_p_value", r.log_p_value}});
  }
  o.payload = t.to_csv();
  o.text = std::to_string(t.rows.size()) + " rows\n";
  return o;
}

std::string defaults_footer() {
  const json& d = suite_defaults();
  std::string s = "Suite defaults (table version " +
                  std::to_string(d.at("version").get<int>()) + "):\n";
  for (const auto& [id, params] : d.at("suites").items()) {
    s += "  " + id + ": " + params.dump() + "\n";
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  for (int i = 1; i < argc; ++i) g.argv.emplace_back(argv[i]);

  CLI::App app{"Constrained discrete logarithm toolkit (v" +
               std::string(kVersion) + ")"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(defaults_footer());
  app.add_option("--seed", g.seed, "Seed for every random choice")
      ->default_val(0);
  app.add_flag("--json", g.json, "Print a JSON experiment report");
  app.add_option("--out", g.out, "Write the primary artifact to this path");

  std::function<Output()> run;

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a constrained set");
  construct
      ->add_option("--kind", ca.kind)
      ->required()
      ->check(CLI::IsMember({"random", "snk", "bose-chowla", "squares",
                             "hamming", "greedy-sidon"}));
  construct->add_option("--p", ca.p, "Prime modulus")->required();
  construct->add_option("--size", ca.size, "Set size (random, greedy-sidon)");
  construct->add_option("--n", ca.n, "N for snk");
  construct->add_option("--k", ca.k, "k for snk and bose-chowla")->default_val(2);
  construct->add_option("--bits", ca.bits, "Bit length for hamming");
  construct->add_option("--t", ca.t, "Weight for hamming");
  construct->add_option("--key", ca.key, "Explicit snk key a_0 .. a_{k-1}");
  construct->callback([&] { run = [&] { return run_construct(g, ca); }; });

  CheckArgs ka;
  auto* check = app.add_subcommand("check", "Verify a certificate for a set");
  check->add_option("--set", ka.set, "Set file")->required();
  check->add_option("--cert", ka.cert)
      ->required()
      ->check(CLI::IsMember({"weak-sidon", "bk", "det2x2", "twelve"}));
  check->add_option("--k", ka.k, "Summand count for bk")->default_val(2);
  check->add_option("--mode", ka.mode)
      ->default_val("exhaustive")
      ->check(CLI::IsMember({"exhaustive", "randomized"}));
  check->add_option("--trials", ka.trials, "Randomized trials")
      ->default_val(1000);
  check->callback([&] { run = [&] { return run_check(g, ka); }; });

  ComplexityArgs xa;
  auto* complexity =
      app.add_subcommand("complexity", "Exact alpha-complexity of a set");
  complexity->add_option("--set", xa.set, "Set file")->required();
  complexity->add_option("--kind", xa.kind)
      ->default_val("generic")
      ->check(CLI::IsMember({"generic", "bsgs", "bsgs1"}));
  complexity->add_option("--alpha", xa.alpha)->default_val("1");
  complexity->add_option("--workers", xa.workers)->default_val(1);
  complexity->callback([&] { run = [&] { return run_complexity(g, xa); }; });

  AttackArgs aa;
  auto* attack = app.add_subcommand("attack", "Run an attack on a fresh instance");
  attack->add_option("--method", aa.method)
      ->required()
      ->check(CLI::IsMember({"bsgs", "difference-cover", "queryset",
                             "low-weight"}));
  attack->add_option("--p", aa.p, "Prime modulus");
  attack->add_option("--secret", aa.secret, "Fixed secret (default random)");
  attack->add_option("--lo", aa.lo, "Interval start for bsgs");
  attack->add_option("--hi", aa.hi, "Interval end (exclusive) for bsgs");
  attack->add_option("--set", aa.set, "Set file for queryset");
  attack->add_option("--lines", aa.lines)
      ->default_val("pairing")
      ->check(CLI::IsMember({"pairing", "grid"}));
  attack->add_option("--alpha", aa.alpha)->default_val("1");
  attack->add_option("--x", aa.xs, "Giant-step set X");
  attack->add_option("--y", aa.ys, "Baby-step set Y");
  attack->add_option("--bits", aa.bits, "Exponent bit length for low-weight");
  attack->add_option("--t", aa.t, "Exponent weight for low-weight");
  attack->callback([&] {
    if (aa.method == "queryset" && aa.set.empty()) {
      throw CLI::ValidationError("--set", "required for queryset");
    }
    if (aa.method != "queryset" && aa.p == 0) {
      throw CLI::ValidationError("--p", "required for " + aa.method);
    }
    run = [&] { return run_attack(g, aa); };
  });

  MenelausArgs ma;
  auto* menelaus = app.add_subcommand("menelaus", "Grid determinant tools");
  menelaus->require_subcommand(1);
  auto* m_verify =
      menelaus->add_subcommand("verify", "Evaluate the twelve determinant");
  m_verify->add_option("--file", ma.file, "{p, grid} or {p, points}")
      ->required();
  m_verify->callback([&] { run = [&] { return run_menelaus_verify(g, ma); }; });
  auto* m_complete =
      menelaus->add_subcommand("complete", "Solve for z4 and realize a grid");
  m_complete->add_option("--file", ma.file, "{p, points}")->required();
  m_complete->callback(
      [&] { run = [&] { return run_menelaus_complete(g, ma); }; });
  auto* m_sample = menelaus->add_subcommand("sample", "Sample a grid");
  m_sample->add_option("--p", ma.p)->required();
  m_sample->add_flag("--vertical", ma.vertical, "Allow vertical lines");
  m_sample->add_flag("--case2", ma.case2, "Sample a case II grid");
  m_sample->add_flag("--concurrent", ma.concurrent,
                     "Case II with concurrent letter lines");
  m_sample->callback([&] { run = [&] { return run_menelaus_sample(g, ma); }; });

  TheoremArgs ta;
  auto* theorem = app.add_subcommand(
      "verify-theorem", "Run a verification suite at desk-scale defaults");
  theorem->add_option("--id", ta.id)->required()->check(
      CLI::IsMember(suite_ids()));
  theorem->add_option("--p", ta.p);
  theorem->add_option("--m", ta.m);
  theorem->add_option("--trials", ta.trials);
  theorem->add_option("--alpha", ta.alpha);
  theorem->add_option("--size", ta.size);
  theorem->add_option("--param", ta.params, "Any suite parameter as key=value");
  theorem->footer(defaults_footer());
  theorem->callback([&] { run = [&] { return run_theorem(g, ta); }; });

  ReportArgs ra;
  auto* report = app.add_subcommand("report", "Bounds table as CSV");
  report->add_option("--primes", ra.primes, "Comma-separated primes")->delimiter(',');
  report->add_option("--alpha", ra.alpha)->default_val("1");
  report->add_option("--trials", ra.trials, "Randomized twelve trials")
      ->default_val(2000);
  report->callback([&] { run = [&] { return run_report(g, ra); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Output o = run();
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    return emit(g, o, ms);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
