#include "cdlp/extension_field.hpp"

#include <string>
#include <unordered_map>

namespace cdlp {

namespace {

using Poly = std::vector<u64>;  // lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(q).
Poly poly_mod(Poly a, const Poly& b, u64 q) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    u64 lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = sub_mod(a[shift + i], mul_mod(lead, b[i], q), q);
    }
    trim(a);
  }
  return a;
}

Poly monic_from_code(u64 code, unsigned degree, u64 q) {
  Poly p(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i) {
    p[i] = code % q;
    code /= q;
  }
  p[degree] = 1;
  return p;
}

u64 ipow(u64 b, unsigned e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

bool is_irreducible(const std::vector<u64>& poly, u64 q) {
  if (poly.size() < 2) return false;
  const unsigned deg = static_cast<unsigned>(poly.size() - 1);
  if (deg == 1) return true;
  for (unsigned d = 1; d <= deg / 2; ++d) {
    const u64 count = ipow(q, d);
    for (u64 code = 0; code < count; ++code) {
      Poly r = poly_mod(poly, monic_from_code(code, d, q), q);
      if (r.empty()) return false;
    }
  }
  return true;
}

u64 ExtensionField::order() const { return ipow(q, k); }

ExtElement ExtensionField::one() const { return constant(1); }

ExtElement ExtensionField::constant(u64 c) const {
  ExtElement e(k, 0);
  e[0] = c % q;
  return e;
}

ExtElement ExtensionField::add(const ExtElement& a, const ExtElement& b) const {
  ExtElement r(k);
  for (unsigned i = 0; i < k; ++i) r[i] = add_mod(a[i], b[i], q);
  return r;
}

ExtElement ExtensionField::mul(const ExtElement& a, const ExtElement& b) const {
  Poly prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) {
      prod[i + j] = add_mod(prod[i + j], mul_mod(a[i], b[j], q), q);
    }
  }
  Poly r = poly_mod(std::move(prod), modulus_poly, q);
  r.resize(k, 0);
  return r;
}

ExtElement ExtensionField::pow(const ExtElement& a, u64 e) const {
  ExtElement result = one();
  ExtElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

u64 ExtensionField::encode(const ExtElement& a) const {
  u64 code = 0;
  for (unsigned i = k; i-- > 0;) code = code * q + a[i];
  return code;
}

ExtElement ExtensionField::decode(u64 code) const {
  ExtElement e(k);
  for (unsigned i = 0; i < k; ++i) {
    e[i] = code % q;
    code /= q;
  }
  return e;
}

ExtensionField build_extension_field(u64 q, unsigned k) {
  if (k < 2) {
    throw Error(ErrorCode::kInvalidArgument, "extension degree must be >= 2");
  }
  if (!is_prime(q)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(q) + " is not prime");
  }
  u128 size = 1;
  for (unsigned i = 0; i < k; ++i) {
    size *= q;
    if (size > kExtensionFieldCap) {
      throw Error(ErrorCode::kTooLarge,
                  "q^k exceeds 2^24 for q=" + std::to_string(q) +
                      ", k=" + std::to_string(k));
    }
  }
  ExtensionField f;
  f.q = q;
  f.k = k;
  const u64 n = static_cast<u64>(size);
  for (u64 code = 0; code < n; ++code) {
    Poly cand = monic_from_code(code, k, q);
    if (cand[0] != 0 && is_irreducible(cand, q)) {
      f.modulus_poly = std::move(cand);
      break;
    }
  }
  if (f.modulus_poly.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no irreducible polynomial found");
  }
  const u64 group_order = n - 1;
  const std::vector<u64> primes = prime_factors(group_order);
  for (u64 code = 1; code < n; ++code) {
    ExtElement cand = f.decode(code);
    bool primitive = true;
    for (u64 r : primes) {
      if (f.pow(cand, group_order / r) == f.one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      f.theta = std::move(cand);
      return f;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "no primitive element found");
}

u64 ext_discrete_log(const ExtensionField& f, const ExtElement& y) {
  return ext_discrete_logs(f, {y}).front();
}

std::vector<u64> ext_discrete_logs(const ExtensionField& f,
                                   const std::vector<ExtElement>& ys) {
  std::unordered_map<u64, std::vector<std::size_t>> wanted;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (ys[i].size() != f.k) {
      throw Error(ErrorCode::kInvalidArgument, "element has wrong length");
    }
    u64 code = f.encode(ys[i]);
    if (code == 0) throw Error(ErrorCode::kNoLogarithm, "log of zero");
    wanted[code].push_back(i);
  }
  std::vector<u64> out(ys.size(), 0);
  std::size_t remaining = wanted.size();
  ExtElement cur = f.one();
  const u64 group_order = f.order() - 1;
  for (u64 e = 0; e < group_order && remaining > 0; ++e) {
    auto it = wanted.find(f.encode(cur));
    if (it != wanted.end()) {
      for (std::size_t idx : it->second) out[idx] = e;
      wanted.erase(it);
      --remaining;
    }
    cur = f.mul(cur, f.theta);
  }
  if (remaining > 0) {
    throw Error(ErrorCode::kNoLogarithm, "element outside the field");
  }
  return out;
}

}  // namespace cdlp
