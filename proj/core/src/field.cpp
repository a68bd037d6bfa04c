#include "cdlp/field.hpp"

#include <limits>
#include <string>

namespace cdlp {

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr u64 kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : kSmall) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kSmall) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 largest_prime_below(u64 x) {
  if (x <= 3) {
    throw Error(ErrorCode::kNoPrime,
                "no odd prime below " + std::to_string(x));
  }
  for (u64 c = x - 1; c >= 2; --c) {
    if (is_prime(c)) return c;
  }
  throw Error(ErrorCode::kNoPrime, "no prime below " + std::to_string(x));
}

u64 isqrt_floor(u64 n) {
  u64 r = static_cast<u64>(__builtin_sqrtl(static_cast<long double>(n)));
  while (static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

u64 isqrt_ceil(u64 n) {
  u64 r = isqrt_floor(n);
  return static_cast<u128>(r) * r == n ? r : r + 1;
}

namespace {

// base^k <= limit, without overflow.
bool power_at_most(u64 base, unsigned k, u64 limit) {
  u128 acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc *= base;
    if (acc > limit) return false;
  }
  return true;
}

}  // namespace

u64 iroot_floor(u64 n, unsigned k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "zeroth root");
  if (k == 1 || n < 2) return n;
  u64 lo = 1;
  u64 hi = u64{1} << (64 / k + 1);
  while (lo < hi) {
    u64 mid = lo + (hi - lo + 1) / 2;
    if (power_at_most(mid, k, n)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

u64 binomial(u64 n, u64 k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  u128 acc = 1;
  for (u64 i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<u64>::max()) {
      return std::numeric_limits<u64>::max();
    }
  }
  return static_cast<u64>(acc);
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

PrimeModulus::PrimeModulus(u64 p) : p_(p) {
  if (p < kMin || p >= kLimit) {
    throw Error(ErrorCode::kInvalidArgument,
                "modulus " + std::to_string(p) + " outside [3, 2^62)");
  }
  if (!is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
}

u64 PrimeModulus::inv(u64 a) const {
  a %= p_;
  if (a == 0) throw Error(ErrorCode::kNonInvertible, "zero has no inverse");
  // Extended Euclid on signed 128-bit values.
  __int128 t = 0, new_t = 1;
  __int128 r = p_, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<u64>(t);
}

Residue::Residue(u64 value, const PrimeModulus& modulus)
    : value_(value), modulus_(modulus) {
  if (value >= modulus.value()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(value) + " is not reduced mod " +
                    std::to_string(modulus.value()));
  }
}

Residue Residue::from_signed(i64 value, const PrimeModulus& modulus) {
  return Residue(modulus.reduce(value), modulus);
}

void Residue::require_same(const Residue& o) const {
  if (!(modulus_ == o.modulus_)) {
    throw Error(ErrorCode::kModulusMismatch,
                "residues mod " + std::to_string(modulus_.value()) + " and " +
                    std::to_string(o.modulus_.value()));
  }
}

Residue Residue::operator+(const Residue& o) const {
  require_same(o);
  return Residue(modulus_.add(value_, o.value_), modulus_);
}
Residue Residue::operator-(const Residue& o) const {
  require_same(o);
  return Residue(modulus_.sub(value_, o.value_), modulus_);
}
Residue Residue::operator*(const Residue& o) const {
  require_same(o);
  return Residue(modulus_.mul(value_, o.value_), modulus_);
}
Residue Residue::operator/(const Residue& o) const {
  require_same(o);
  return Residue(modulus_.div(value_, o.value_), modulus_);
}
Residue Residue::operator-() const {
  return Residue(modulus_.neg(value_), modulus_);
}

Residue mod_inverse(const Residue& x) {
  return Residue(x.modulus().inv(x.value()), x.modulus());
}

u64 Rng::uniform(u64 bound) {
  if (bound == 0) throw Error(ErrorCode::kInvalidArgument, "empty range");
  // Lemire-style rejection keeps draws exactly uniform.
  const u64 threshold = (0 - bound) % bound;
  for (;;) {
    u64 r = engine_();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace cdlp
