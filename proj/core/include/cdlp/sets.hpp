#ifndef CDLP_SETS_HPP_
#define CDLP_SETS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "cdlp/field.hpp"
#include "cdlp/lines.hpp"

namespace cdlp {

// --- constructors ---

// Uniform sample without replacement. Throws kTooLarge (size > p) and
// kInvalidArgument (size == 0).
ConstrainedSet random_subset(const PrimeModulus& p, u64 size, Seed seed);

struct SnkSample {
  ConstrainedSet set;
  std::vector<u64> key;  // a_0 .. a_{k-1}
  u64 requested = 0;     // N
  bool full_size = false;  // |S| == N
};

// (f_a(1), ..., f_a(N)) in index order.
std::vector<u64> snk_evaluate(const PrimeModulus& p, u64 n,
                              const std::vector<u64>& key);

// { f_a(i) : 1 <= i <= N } with f_a(x) = a_{k-1} x^{k-1} + ... + a_0.
SnkSample sample_snk(const PrimeModulus& p, u64 n, unsigned k,
                     const std::vector<u64>& key);
SnkSample sample_snk(const PrimeModulus& p, u64 n, unsigned k, Seed seed);

struct SnkBounds {
  Rational duplicate;   // N^2 / p
  Rational polynomial;  // N^k d / p
};

// Throws kTooLarge when N^k d does not fit a 64-bit rational.
SnkBounds snk_event_bounds(const PrimeModulus& p, u64 n, unsigned k, u64 d);

// { log_theta(theta + c) : c in GF(q) }, sorted, as residues mod q^k - 1.
std::vector<u64> bose_chowla_set(u64 q, unsigned k);

// Bose-Chowla set for the largest prime q <= p^(1/k), restricted to the
// fullest of k equal intervals of [0, q^k) and translated to start at 0.
ConstrainedSet embed_bk_mod_p(const PrimeModulus& p, unsigned k);

// { x^2 : 1 <= x <= floor(sqrt(p)) }.
ConstrainedSet small_squares_set(const PrimeModulus& p);

// All n_bits-bit integers with exactly t ones. Requires p > 2^n_bits.
ConstrainedSet hamming_weight_set(const PrimeModulus& p, unsigned n_bits,
                                  unsigned t);

struct GreedyResult {
  ConstrainedSet set;
  bool target_reached = false;
};

// Mian-Chowla greedy strong Sidon set inside [0, floor(p/2)].
GreedyResult greedy_weak_sidon(const PrimeModulus& p, u64 target_size);

// --- certificate checkers ---

enum class CertificateKind { kWeakSidon, kBk, kDet2x2, kTwelve };
enum class CheckMode { kExhaustive, kRandomized };

std::string_view certificate_name(CertificateKind kind);
CertificateKind parse_certificate(std::string_view name);
std::string_view check_mode_name(CheckMode mode);

struct CertificateReport {
  CertificateKind kind = CertificateKind::kWeakSidon;
  unsigned k = 2;  // summand count for kBk
  bool verified = false;
  CheckMode mode = CheckMode::kExhaustive;
  u64 trials = 0;      // tuples evaluated
  u64 violations = 0;  // zero determinants / colliding sums seen
  // Sums: the two colliding k-subsets back to back. det2x2: (x1,x2,y1,y2,
  // z1,z2). twelve: (x1..x4, y1..y4, z1..z4).
  std::vector<u64> counterexample;
  std::string note;
};

constexpr u64 kSumCheckCap = 1000000;
constexpr std::size_t kDet2x2ExhaustiveMax = 12;
constexpr std::size_t kTwelveExhaustiveMax = 13;

// First colliding pair of k-subsets (in lexicographic order of the second
// subset) among sums taken mod `modulus`; empty when all sums differ.
std::vector<u64> find_sum_collision(const std::vector<u64>& elements,
                                    unsigned k, u64 modulus);

CertificateReport check_weak_sidon(const ConstrainedSet& set);
// Throws kTooLarge when C(|S|, k) > 10^6.
CertificateReport check_bk_sums(const ConstrainedSet& set, unsigned k);
// Exhaustive mode throws kTooLarge above 12 elements.
CertificateReport check_det2x2(const ConstrainedSet& set, CheckMode mode,
                               u64 trials, Seed seed);
// Exhaustive mode throws kTooLarge above 13 elements.
CertificateReport check_twelve(const ConstrainedSet& set, CheckMode mode,
                               u64 trials, Seed seed);

// (x1-y1)(y2-z2) - (x2-y2)(y1-z1)
u64 det2x2_value(const PrimeModulus& p, u64 x1, u64 x2, u64 y1, u64 y2, u64 z1,
                 u64 z2);

// Re-evaluates a reported counterexample from scratch.
bool counterexample_is_genuine(const CertificateReport& report,
                               const PrimeModulus& p);

}  // namespace cdlp

#endif  // CDLP_SETS_HPP_
