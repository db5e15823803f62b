#include "d2p/field.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace d2p {

namespace {

std::uint32_t checked_modulus(std::uint32_t modulus) {
  if (modulus < 2) throw std::invalid_argument("ZmodP: modulus must be >= 2");
  return modulus;
}

// Degree of a GF(2)[t] coefficient mask; -1 for the zero polynomial.
int poly2_degree(std::uint32_t m) { return static_cast<int>(std::bit_width(m)) - 1; }

// Remainder of a modulo b, both GF(2)[t] coefficient masks, b != 0.
std::uint32_t poly2_mod(std::uint32_t a, std::uint32_t b) {
  const int db = poly2_degree(b);
  while (a != 0 && poly2_degree(a) >= db) {
    a ^= b << (poly2_degree(a) - db);
  }
  return a;
}

bool poly2_irreducible(std::uint32_t f, std::uint32_t k) {
  // No nontrivial factor of degree <= k/2 means irreducible. Trial division
  // over all masks of those degrees is instant at k <= 16.
  for (std::uint32_t g = 2; poly2_degree(g) <= static_cast<int>(k / 2); ++g) {
    if (poly2_mod(f, g) == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

ZmodP::ZmodP(long long value, std::uint32_t modulus)
    : modulus_(checked_modulus(modulus)) {
  long long v = value % static_cast<long long>(modulus_);
  if (v < 0) v += modulus_;
  value_ = static_cast<std::uint32_t>(v);
}

ZmodP ZmodP::operator+(const ZmodP& o) const {
  if (modulus_ != o.modulus_) throw std::invalid_argument("ZmodP: modulus mismatch");
  return ZmodP(static_cast<long long>(value_) + o.value_, modulus_);
}

ZmodP ZmodP::operator-(const ZmodP& o) const {
  if (modulus_ != o.modulus_) throw std::invalid_argument("ZmodP: modulus mismatch");
  return ZmodP(static_cast<long long>(value_) - o.value_, modulus_);
}

ZmodP ZmodP::operator*(const ZmodP& o) const {
  if (modulus_ != o.modulus_) throw std::invalid_argument("ZmodP: modulus mismatch");
  return ZmodP(static_cast<long long>(value_) * o.value_, modulus_);
}

ZmodP ZmodP::operator-() const { return ZmodP(-static_cast<long long>(value_), modulus_); }

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t multiplicative_order_of_two(std::uint32_t p) {
  if (!is_odd_prime(p)) {
    throw std::invalid_argument("multiplicative_order_of_two: p must be an odd prime");
  }
  std::uint32_t k = 1;
  std::uint64_t pow = 2 % p;
  while (pow != 1) {
    pow = (pow * 2) % p;
    ++k;
  }
  return k;
}

BinaryFieldDescriptor build_field(std::uint32_t p) {
  std::uint32_t k = multiplicative_order_of_two(p);
  if (k > 16) {
    throw std::invalid_argument(
        "build_field: 2 has order " + std::to_string(k) + " mod " + std::to_string(p) +
        "; only fields up to GF(2^16) are supported");
  }

  BinaryFieldDescriptor f;
  f.p = p;
  f.k = k;

  // Monic degree-k masks run from 2^k to 2^(k+1)-1; an irreducible one with
  // a nonzero constant term always exists.
  for (std::uint32_t cand = (1u << k); cand < (2u << k); ++cand) {
    if ((cand & 1u) && poly2_irreducible(cand, k)) {
      f.modulus_poly = cand;
      break;
    }
  }

  const std::uint32_t q = (1u << k) - 1;  // multiplicative group order
  const std::vector<std::uint32_t> factors = prime_factors(q);
  std::uint32_t g = 0;
  for (std::uint32_t cand = 2; cand <= q; ++cand) {
    bool generator = true;
    for (std::uint32_t pr : factors) {
      if (gf_pow(f, cand, q / pr) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) {
      g = cand;
      break;
    }
  }

  f.zeta = gf_pow(f, g, q / p);
  return f;
}

std::uint32_t gf_add(std::uint32_t a, std::uint32_t b) { return a ^ b; }

std::uint32_t gf_mul(const BinaryFieldDescriptor& f, std::uint32_t a, std::uint32_t b) {
  std::uint32_t acc = 0;
  while (b != 0) {
    if (b & 1u) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (1u << f.k)) a ^= f.modulus_poly;
  }
  return acc;
}

std::uint32_t gf_pow(const BinaryFieldDescriptor& f, std::uint32_t a, std::uint64_t n) {
  std::uint32_t acc = 1;
  while (n != 0) {
    if (n & 1u) acc = gf_mul(f, acc, a);
    a = gf_mul(f, a, a);
    n >>= 1;
  }
  return acc;
}

}  // namespace d2p
