#ifndef CDLP_FIELD_HPP_
#define CDLP_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "cdlp/errors.hpp"

namespace cdlp {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Exact rationals for probabilities, fractions and bounds. All quantities the
// library stores this way have numerators/denominators well below 2^63.
using Rational = boost::rational<i64>;

// --- raw modular helpers (modulus below 2^62, so u128 products never wrap) ---

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  if ((a | b) <= 0xffffffffULL) return a * b % m;
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}
inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return s >= m ? s - m : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }
inline u64 neg_mod(u64 a, u64 m) { return a == 0 ? 0 : m - a; }
u64 pow_mod(u64 base, u64 exp, u64 m);

// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(u64 n);

// Largest prime strictly below x. Throws kNoPrime when x <= 3.
u64 largest_prime_below(u64 x);

// floor(sqrt(n)) and ceil(sqrt(n)) in exact integer arithmetic.
u64 isqrt_floor(u64 n);
u64 isqrt_ceil(u64 n);
// floor(n^(1/k)), exact.
u64 iroot_floor(u64 n, unsigned k);

// Binomial coefficient; saturates at UINT64_MAX.
u64 binomial(u64 n, u64 k);

// Distinct prime factors in increasing order (trial division).
std::vector<u64> prime_factors(u64 n);

// --- strong types ---

class PrimeModulus {
 public:
  static constexpr u64 kMin = 3;
  static constexpr u64 kLimit = u64{1} << 62;

  // Throws kNotPrime / kInvalidArgument.
  explicit PrimeModulus(u64 p);

  u64 value() const noexcept { return p_; }

  u64 reduce(i64 v) const noexcept {
    i64 r = v % static_cast<i64>(p_);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(p_) : r);
  }
  u64 add(u64 a, u64 b) const noexcept { return add_mod(a, b, p_); }
  u64 sub(u64 a, u64 b) const noexcept { return sub_mod(a, b, p_); }
  u64 mul(u64 a, u64 b) const noexcept { return mul_mod(a, b, p_); }
  u64 neg(u64 a) const noexcept { return neg_mod(a, p_); }
  u64 pow(u64 a, u64 e) const noexcept { return pow_mod(a, e, p_); }
  // Throws kNonInvertible on 0.
  u64 inv(u64 a) const;
  u64 div(u64 a, u64 b) const { return mul(a, inv(b)); }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  u64 p_;
};

class Residue {
 public:
  // Throws kInvalidArgument unless value < p.
  Residue(u64 value, const PrimeModulus& modulus);
  static Residue from_signed(i64 value, const PrimeModulus& modulus);

  u64 value() const noexcept { return value_; }
  const PrimeModulus& modulus() const noexcept { return modulus_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator/(const Residue& o) const;
  Residue operator-() const;

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

 private:
  void require_same(const Residue& o) const;

  u64 value_;
  PrimeModulus modulus_;
};

// x * result == 1 (mod p). Throws kNonInvertible for x == 0.
Residue mod_inverse(const Residue& x);

// --- deterministic randomness ---

struct Seed {
  u64 value = 0;
};

// Seeded stream with platform-independent bounded draws (the standard
// distributions are implementation-defined, which would break reproducibility).
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed.value) {}

  u64 next() { return engine_(); }
  // Uniform in [0, bound). bound must be positive.
  u64 uniform(u64 bound);
  // Uniform in [lo, hi].
  u64 uniform_range(u64 lo, u64 hi) { return lo + uniform(hi - lo + 1); }
  double uniform_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Independent child stream, useful for splitting work deterministically.
  Rng fork() { return Rng(Seed{next() ^ 0x9e3779b97f4a7c15ULL}); }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cdlp

#endif  // CDLP_FIELD_HPP_
