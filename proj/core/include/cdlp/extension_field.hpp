#ifndef CDLP_EXTENSION_FIELD_HPP_
#define CDLP_EXTENSION_FIELD_HPP_

#include <vector>

#include "cdlp/field.hpp"

namespace cdlp {

// Element of GF(q^k): k coefficients over GF(q), lowest degree first.
using ExtElement = std::vector<u64>;

struct ExtensionField {
  u64 q = 0;
  unsigned k = 0;
  // Monic, length k + 1, lowest degree first (modulus_poly[k] == 1).
  std::vector<u64> modulus_poly;
  ExtElement theta;

  u64 order() const;  // q^k

  ExtElement zero() const { return ExtElement(k, 0); }
  ExtElement one() const;
  ExtElement constant(u64 c) const;
  ExtElement add(const ExtElement& a, const ExtElement& b) const;
  ExtElement mul(const ExtElement& a, const ExtElement& b) const;
  ExtElement pow(const ExtElement& a, u64 e) const;

  // Base-q digit encoding: sum c_i q^i.
  u64 encode(const ExtElement& a) const;
  ExtElement decode(u64 code) const;

  friend bool operator==(const ExtensionField&, const ExtensionField&) = default;
};

constexpr u64 kExtensionFieldCap = u64{1} << 24;

// Lexicographically least (by base-q code of the lower coefficients) monic
// irreducible modulus and least primitive element. Throws kTooLarge,
// kNotPrime, kInvalidArgument (k < 2).
ExtensionField build_extension_field(u64 q, unsigned k);

// Irreducibility of a monic polynomial (lowest degree first) over GF(q), by
// trial division with every monic polynomial of degree <= deg/2.
bool is_irreducible(const std::vector<u64>& poly, u64 q);

// e in [0, q^k - 1) with theta^e == y, by enumeration of powers.
// Throws kNoLogarithm for y == 0.
u64 ext_discrete_log(const ExtensionField& f, const ExtElement& y);

// Logs of several elements with a single sweep over the powers of theta.
std::vector<u64> ext_discrete_logs(const ExtensionField& f,
                                   const std::vector<ExtElement>& ys);

}  // namespace cdlp

#endif  // CDLP_EXTENSION_FIELD_HPP_
