#ifndef CDLP_COMPLEXITY_HPP_
#define CDLP_COMPLEXITY_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "cdlp/field.hpp"
#include "cdlp/lines.hpp"
#include "cdlp/sets.hpp"

namespace cdlp {

// alpha = num/den in (0, 1], kept reduced.
class Fraction {
 public:
  Fraction(i64 num, i64 den);
  // "1", "1/2", ...; throws kParseError.
  static Fraction parse(std::string_view text);

  i64 num() const noexcept { return num_; }
  i64 den() const noexcept { return den_; }
  Rational value() const { return Rational(num_, den_); }
  double to_double() const { return static_cast<double>(num_) / den_; }
  std::string str() const;

  // ceil(alpha * n): the number of hits needed to recognize an alpha-fraction.
  u64 needed(u64 n) const;

  friend bool operator==(const Fraction&, const Fraction&) = default;

 private:
  i64 num_;
  i64 den_;
};

enum class ComplexityKind { kGeneric, kBsgs, kBsgs1 };

std::string_view kind_name(ComplexityKind kind);
ComplexityKind parse_kind(std::string_view name);

struct ComplexityResult {
  ComplexityKind kind = ComplexityKind::kGeneric;
  Fraction alpha{1, 1};
  u64 value = 0;
  // generic: lines. bsgs: lines (baby steps) and points (giant steps C).
  // bsgs1: diff_x and diff_y with S ∩ (X - Y) large enough.
  std::optional<QuerySet> lines;
  std::optional<PointSet> points;
  std::optional<PointSet> diff_x;
  std::optional<PointSet> diff_y;
  bool exact = false;
};

// The abscissas the witness recognizes.
PointSet witness_intersection(const ComplexityResult& result);

struct GenericBounds {
  double lower = 0;  // sqrt(2 alpha |S|), strict
  double upper = 0;  // min(alpha |S| / 2 + 3, 2 ceil(sqrt(alpha p)))
  u64 grid_upper = 0;  // 2 ceil(sqrt(alpha p))
};

GenericBounds generic_bounds(const ConstrainedSet& set, const Fraction& alpha);

// ceil(sqrt(alpha * p)) in exact arithmetic.
u64 grid_lambda(const PrimeModulus& p, const Fraction& alpha);

// (0,0), (0,1) and one line per consecutive pair of the smallest 2m elements.
// Throws kInsufficientElements.
QuerySet pairing_construction(const ConstrainedSet& set, const Fraction& alpha);

// {(0,i), (1,-lambda i) : 0 <= i < lambda}.
QuerySet grid_construction(const PrimeModulus& p, const Fraction& alpha);

struct SolverOptions {
  unsigned workers = 1;
};

struct SolverCaps {
  u64 max_p;
  u64 max_value;
};

SolverCaps solver_caps(ComplexityKind kind);

// Minimal witness size with the lexicographically least optimal witness.
// Throws kSearchTooLarge beyond the caps of solver_caps(kind), kEmptySet.
ComplexityResult exact_complexity(const ConstrainedSet& set,
                                  const Fraction& alpha, ComplexityKind kind,
                                  const SolverOptions& options = {});

struct CertifiedBound {
  double value = 0;
  ComplexityKind bounds = ComplexityKind::kGeneric;
  CertificateKind certificate = CertificateKind::kWeakSidon;
  bool randomized_caveat = false;
};

// Formula value only (no certificate check).
double certificate_formula(CertificateKind kind, unsigned k, double alpha_size);
ComplexityKind certificate_target(CertificateKind kind);

// Throws kUncertifiedSet unless the report verifies the certificate.
CertifiedBound certificate_lower_bound(const ConstrainedSet& set,
                                       const Fraction& alpha,
                                       const CertificateReport& report);

struct ChainReport {
  ComplexityResult generic;
  ComplexityResult bsgs;
  ComplexityResult bsgs1;
  bool generic_le_twice_bsgs = false;
  bool bsgs_le_bsgs1 = false;
  bool holds() const { return generic_le_twice_bsgs && bsgs_le_bsgs1; }
};

ChainReport verify_chain(const ConstrainedSet& set, const Fraction& alpha,
                         const SolverOptions& options = {});

}  // namespace cdlp

#endif  // CDLP_COMPLEXITY_HPP_
