#ifndef CDLP_GENERIC_GROUP_HPP_
#define CDLP_GENERIC_GROUP_HPP_

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "cdlp/field.hpp"
#include "cdlp/lines.hpp"

namespace cdlp {

// Opaque 128-bit label sigma(g^e).
struct EncodedElement {
  u64 hi = 0;
  u64 lo = 0;

  auto operator<=>(const EncodedElement&) const = default;
};

// What an adversary sees: p, sigma(g), sigma(g^x) and the operation oracle
// <h1, h2, alpha, beta> -> sigma(e1^alpha e2^beta).
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;
  virtual const PrimeModulus& modulus() const = 0;
  virtual EncodedElement generator() const = 0;
  virtual EncodedElement target() const = 0;
  // alpha and beta are reduced mod p. Throws kUnknownEncoding.
  virtual EncodedElement query(const EncodedElement& h1,
                               const EncodedElement& h2, u64 alpha,
                               u64 beta) = 0;
  virtual u64 queries() const = 0;
};

// A real encoded group of prime order p with a hidden exponent.
class DlpInstance : public GroupOracle {
 public:
  DlpInstance(const PrimeModulus& p, u64 secret, Seed seed);

  const PrimeModulus& modulus() const override { return modulus_; }
  EncodedElement generator() const override { return sigma_g_; }
  EncodedElement target() const override { return sigma_gx_; }
  EncodedElement query(const EncodedElement& h1, const EncodedElement& h2,
                       u64 alpha, u64 beta) override;
  u64 queries() const override { return op_counter_; }

  // Referee check used by harnesses after an adversary answers: compares the
  // label of g^answer against sigma(g^x). Not counted as a query.
  bool check_answer(u64 answer) const;

  // Exponent behind a label, for test oracles only.
  std::optional<u64> decode_for_testing(const EncodedElement& e) const;

 private:
  EncodedElement encode(u64 exponent);

  PrimeModulus modulus_;
  u64 secret_;
  Rng rng_;
  std::unordered_map<u64, EncodedElement> label_of_;
  std::map<EncodedElement, u64> exponent_of_;
  EncodedElement sigma_g_;
  EncodedElement sigma_gx_;
  u64 op_counter_ = 0;
};

// secret defaults to a uniform draw from the seeded stream.
DlpInstance new_instance(const PrimeModulus& p, std::optional<u64> secret,
                         Seed seed);
// Constrained DLP: the secret is uniform over S.
DlpInstance new_instance(const ConstrainedSet& set, Seed seed);

using Adversary = std::function<u64(GroupOracle&)>;

// Linear polynomial a*x + b in the simulator's list L2.
struct LinearPoly {
  u64 a = 0;
  u64 b = 0;

  auto operator<=>(const LinearPoly&) const = default;
};

struct QueryRecord {
  std::size_t index1 = 0;
  std::size_t index2 = 0;
  u64 alpha = 0;
  u64 beta = 0;
  std::size_t result = 0;
};

struct Transcript {
  std::vector<EncodedElement> encodings;  // L1
  std::vector<LinearPoly> polys;          // L2
  std::vector<QueryRecord> queries;
};

struct AdversaryResult {
  u64 answer = 0;
  u64 queries_used = 0;
  bool success = false;
};

struct GameOutcome {
  Transcript transcript;
  AdversaryResult result;
  u64 x_star = 0;
  bool simulator_failed = false;
};

// The lazy-polynomial simulator game. Throws kBudgetExceeded when the
// adversary issues more than `budget` queries.
GameOutcome simulate_game(const Adversary& adversary, const PrimeModulus& p,
                          u64 budget,
                          const std::optional<ConstrainedSet>& sample_set,
                          Seed seed);

// Runs an adversary against a real instance and judges the answer.
AdversaryResult run_adversary(const Adversary& adversary, DlpInstance& inst,
                              u64 budget);

struct SuccessBound {
  Rational value;
  bool vacuous = false;  // value >= 1
};

// (m+2)^2/(2p) + 1/p.
SuccessBound success_bound(u64 m, const PrimeModulus& p);

// Wraps an oracle and records every label it hands out (inputs first).
class RecordingOracle : public GroupOracle {
 public:
  explicit RecordingOracle(GroupOracle& inner);

  const PrimeModulus& modulus() const override { return inner_.modulus(); }
  EncodedElement generator() const override { return inner_.generator(); }
  EncodedElement target() const override { return inner_.target(); }
  EncodedElement query(const EncodedElement& h1, const EncodedElement& h2,
                       u64 alpha, u64 beta) override;
  u64 queries() const override { return inner_.queries(); }

  const std::vector<EncodedElement>& outputs() const { return outputs_; }

 private:
  GroupOracle& inner_;
  std::vector<EncodedElement> outputs_;
};

// Canonical collision pattern: entry i is the index of the first label equal
// to labels[i].
std::vector<std::size_t> collision_pattern(
    const std::vector<EncodedElement>& labels);

nlohmann::json to_json(const Transcript& t);

}  // namespace cdlp

#endif  // CDLP_GENERIC_GROUP_HPP_
