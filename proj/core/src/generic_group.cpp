#include "cdlp/generic_group.hpp"

#include <cstdio>
#include <set>
#include <string>

namespace cdlp {

namespace {

EncodedElement draw_label(Rng& rng) {
  EncodedElement e;
  e.hi = rng.next();
  e.lo = rng.next();
  return e;
}

std::string hex_label(const EncodedElement& e) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%016llx%016llx",
                static_cast<unsigned long long>(e.hi),
                static_cast<unsigned long long>(e.lo));
  return buf;
}

// Budget enforcement shared by the simulator and the real harness.
class BudgetedOracle : public GroupOracle {
 public:
  BudgetedOracle(GroupOracle& inner, u64 budget)
      : inner_(inner), budget_(budget), start_(inner.queries()) {}

  const PrimeModulus& modulus() const override { return inner_.modulus(); }
  EncodedElement generator() const override { return inner_.generator(); }
  EncodedElement target() const override { return inner_.target(); }
  EncodedElement query(const EncodedElement& h1, const EncodedElement& h2,
                       u64 alpha, u64 beta) override {
    if (inner_.queries() - start_ >= budget_) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "adversary exceeded budget of " + std::to_string(budget_) +
                      " queries");
    }
    return inner_.query(h1, h2, alpha, beta);
  }
  u64 queries() const override { return inner_.queries() - start_; }

 private:
  GroupOracle& inner_;
  u64 budget_;
  u64 start_;
};

// Lazy simulator: group elements are linear polynomials in the unknown x.
class Simulator : public GroupOracle {
 public:
  Simulator(const PrimeModulus& p, Rng& rng) : modulus_(p), rng_(rng) {
    append({0, 1});  // 1
    append({1, 0});  // x
  }

  const PrimeModulus& modulus() const override { return modulus_; }
  EncodedElement generator() const override { return t_.encodings[0]; }
  EncodedElement target() const override { return t_.encodings[1]; }

  EncodedElement query(const EncodedElement& h1, const EncodedElement& h2,
                       u64 alpha, u64 beta) override {
    const std::size_t i = index_of(h1);
    const std::size_t j = index_of(h2);
    const PrimeModulus& p = modulus_;
    alpha %= p.value();
    beta %= p.value();
    const LinearPoly& pi = t_.polys[i];
    const LinearPoly& pj = t_.polys[j];
    LinearPoly r{p.add(p.mul(alpha, pi.a), p.mul(beta, pj.a)),
                 p.add(p.mul(alpha, pi.b), p.mul(beta, pj.b))};
    auto it = by_poly_.find(r);
    std::size_t result = it != by_poly_.end() ? it->second : append(r);
    t_.queries.push_back({i, j, alpha, beta, result});
    return t_.encodings[result];
  }
  u64 queries() const override { return t_.queries.size(); }

  Transcript take() { return std::move(t_); }
  const Transcript& transcript() const { return t_; }

 private:
  std::size_t index_of(const EncodedElement& e) const {
    auto it = by_label_.find(e);
    if (it == by_label_.end()) {
      throw Error(ErrorCode::kUnknownEncoding, "label " + hex_label(e));
    }
    return it->second;
  }

  std::size_t append(const LinearPoly& poly) {
    EncodedElement label;
    do {
      label = draw_label(rng_);
    } while (by_label_.count(label));
    const std::size_t idx = t_.polys.size();
    t_.polys.push_back(poly);
    t_.encodings.push_back(label);
    by_poly_.emplace(poly, idx);
    by_label_.emplace(label, idx);
    return idx;
  }

  PrimeModulus modulus_;
  Rng& rng_;
  Transcript t_;
  std::map<LinearPoly, std::size_t> by_poly_;
  std::map<EncodedElement, std::size_t> by_label_;
};

}  // namespace

DlpInstance::DlpInstance(const PrimeModulus& p, u64 secret, Seed seed)
    : modulus_(p), secret_(secret), rng_(seed) {
  if (secret >= p.value()) {
    throw Error(ErrorCode::kInvalidArgument, "secret must lie in [0, p)");
  }
  sigma_g_ = encode(1);
  sigma_gx_ = encode(secret_);
}

EncodedElement DlpInstance::encode(u64 exponent) {
  auto it = label_of_.find(exponent);
  if (it != label_of_.end()) return it->second;
  EncodedElement label;
  do {
    label = draw_label(rng_);
  } while (exponent_of_.count(label));
  label_of_.emplace(exponent, label);
  exponent_of_.emplace(label, exponent);
  return label;
}

EncodedElement DlpInstance::query(const EncodedElement& h1,
                                  const EncodedElement& h2, u64 alpha,
                                  u64 beta) {
  auto i1 = exponent_of_.find(h1);
  auto i2 = exponent_of_.find(h2);
  if (i1 == exponent_of_.end() || i2 == exponent_of_.end()) {
    throw Error(ErrorCode::kUnknownEncoding,
                "label " + hex_label(i1 == exponent_of_.end() ? h1 : h2) +
                    " was never issued by this instance");
  }
  const PrimeModulus& p = modulus_;
  const u64 e = p.add(p.mul(alpha % p.value(), i1->second),
                      p.mul(beta % p.value(), i2->second));
  ++op_counter_;
  return encode(e);
}

bool DlpInstance::check_answer(u64 answer) const {
  if (answer >= modulus_.value()) return false;
  auto it = label_of_.find(answer);
  return it != label_of_.end() && it->second == sigma_gx_;
}

std::optional<u64> DlpInstance::decode_for_testing(
    const EncodedElement& e) const {
  auto it = exponent_of_.find(e);
  if (it == exponent_of_.end()) return std::nullopt;
  return it->second;
}

DlpInstance new_instance(const PrimeModulus& p, std::optional<u64> secret,
                         Seed seed) {
  if (secret) return DlpInstance(p, *secret, seed);
  Rng rng(seed);
  const u64 x = rng.uniform(p.value());
  return DlpInstance(p, x, Seed{rng.next()});
}

DlpInstance new_instance(const ConstrainedSet& set, Seed seed) {
  if (set.empty()) throw Error(ErrorCode::kEmptySet, "cannot sample from empty S");
  Rng rng(seed);
  const u64 x = set.elements()[rng.uniform(set.size())];
  return DlpInstance(set.modulus(), x, Seed{rng.next()});
}

GameOutcome simulate_game(const Adversary& adversary, const PrimeModulus& p,
                          u64 budget,
                          const std::optional<ConstrainedSet>& sample_set,
                          Seed seed) {
  if (sample_set) {
    if (!(sample_set->modulus() == p)) {
      throw Error(ErrorCode::kModulusMismatch, "sample set modulus differs");
    }
    if (sample_set->empty()) throw Error(ErrorCode::kEmptySet, "empty sample set");
  }
  Rng label_rng(seed);
  Rng star_rng = label_rng.fork();
  Simulator sim(p, label_rng);
  BudgetedOracle bounded(sim, budget);
  const u64 answer = adversary(bounded) % p.value();

  GameOutcome out;
  out.x_star = sample_set
                   ? sample_set->elements()[star_rng.uniform(sample_set->size())]
                   : star_rng.uniform(p.value());
  // Step 2: the simulation fails iff two distinct polynomials agree at x*.
  std::set<u64> values;
  for (const LinearPoly& poly : sim.transcript().polys) {
    if (!values.insert(p.add(p.mul(poly.a, out.x_star), poly.b)).second) {
      out.simulator_failed = true;
      break;
    }
  }
  out.result.answer = answer;
  out.result.queries_used = sim.queries();
  out.result.success = answer == out.x_star;
  out.transcript = sim.take();
  return out;
}

AdversaryResult run_adversary(const Adversary& adversary, DlpInstance& inst,
                              u64 budget) {
  BudgetedOracle bounded(inst, budget);
  AdversaryResult r;
  r.answer = adversary(bounded) % inst.modulus().value();
  r.queries_used = bounded.queries();
  r.success = inst.check_answer(r.answer);
  return r;
}

SuccessBound success_bound(u64 m, const PrimeModulus& p) {
  const i64 num = static_cast<i64>((m + 2) * (m + 2) + 2);
  const i64 den = static_cast<i64>(2 * p.value());
  SuccessBound b{Rational(num, den), false};
  b.vacuous = b.value >= Rational(1);
  return b;
}

RecordingOracle::RecordingOracle(GroupOracle& inner) : inner_(inner) {
  outputs_.push_back(inner.generator());
  outputs_.push_back(inner.target());
}

EncodedElement RecordingOracle::query(const EncodedElement& h1,
                                      const EncodedElement& h2, u64 alpha,
                                      u64 beta) {
  EncodedElement e = inner_.query(h1, h2, alpha, beta);
  outputs_.push_back(e);
  return e;
}

std::vector<std::size_t> collision_pattern(
    const std::vector<EncodedElement>& labels) {
  std::map<EncodedElement, std::size_t> first;
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out.push_back(first.emplace(labels[i], i).first->second);
  }
  return out;
}

nlohmann::json to_json(const Transcript& t) {
  nlohmann::json j;
  j["encodings"] = nlohmann::json::array();
  for (const auto& e : t.encodings) j["encodings"].push_back(hex_label(e));
  j["polys"] = nlohmann::json::array();
  for (const auto& poly : t.polys) j["polys"].push_back({poly.a, poly.b});
  j["queries"] = nlohmann::json::array();
  for (const auto& q : t.queries) {
    j["queries"].push_back({q.index1, q.index2, q.alpha, q.beta, q.result});
  }
  return j;
}

}  // namespace cdlp
