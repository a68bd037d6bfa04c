#ifndef CDLP_ATTACKS_HPP_
#define CDLP_ATTACKS_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "cdlp/generic_group.hpp"
#include "cdlp/lines.hpp"

namespace cdlp {

enum class AttackStatus { kRecovered, kGuessed, kNotFound };

std::string_view attack_status_name(AttackStatus status);

struct AttackOutcome {
  std::optional<u64> recovered;
  u64 queries = 0;  // op_counter delta of the instance
  std::string method;
  AttackStatus status = AttackStatus::kNotFound;
  bool success = false;  // referee check against sigma(g^x)
  u64 rounds = 0;        // low-weight only
};

// Secret promised in [lo, hi). At most 2 ceil(sqrt(hi - lo)) queries.
AttackOutcome bsgs_interval_attack(DlpInstance& inst, u64 lo, u64 hi);

// Giant steps sigma(g^{x_i}), baby steps sigma(g^{x + y_j}).
AttackOutcome difference_cover_attack(DlpInstance& inst, const PointSet& xs,
                                      const PointSet& ys);

// One query sigma(g^{a x + b}) per line; falls back to guessing the least
// element of S \ I(L).
AttackOutcome queryset_attack(DlpInstance& inst, const QuerySet& lines,
                              const ConstrainedSet& set);

// Expected number of random balanced splits until the t set bits split
// ceil(t/2) / floor(t/2).
double low_weight_expected_rounds(unsigned n_bits, unsigned t);

// Coppersmith's randomized split. Round cap 64 * expected rounds.
AttackOutcome low_weight_attack(DlpInstance& inst, unsigned n_bits, unsigned t,
                                Seed seed);

}  // namespace cdlp

#endif  // CDLP_ATTACKS_HPP_
