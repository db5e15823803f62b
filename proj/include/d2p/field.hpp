#pragma once

#include <cstdint>
#include <string>

namespace d2p {

// Residue arithmetic modulo a small integer m >= 2. Values are kept in
// [0, m). The modulus travels with the value so mixed-modulus arithmetic is
// caught at run time.
class ZmodP {
 public:
  ZmodP(long long value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  ZmodP operator+(const ZmodP& o) const;
  ZmodP operator-(const ZmodP& o) const;
  ZmodP operator*(const ZmodP& o) const;
  ZmodP operator-() const;

  bool operator==(const ZmodP& o) const = default;

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

// GF(2^k) together with a distinguished primitive p-th root of unity zeta,
// for k the multiplicative order of 2 mod p. Elements are k-bit masks; bit i
// holds the coefficient of t^i. modulus_poly is the (k+1)-bit mask of the
// irreducible polynomial used for reduction.
struct BinaryFieldDescriptor {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t modulus_poly = 0;
  std::uint32_t zeta = 0;

  bool operator==(const BinaryFieldDescriptor&) const = default;
};

bool is_odd_prime(std::uint32_t p);

// Smallest k >= 1 with 2^k == 1 (mod p). Requires odd prime p.
std::uint32_t multiplicative_order_of_two(std::uint32_t p);

// Deterministic field construction: the irreducible modulus of degree k with
// the smallest bitmask, the multiplicative generator with the smallest
// bitmask, and zeta = g^((2^k - 1) / p). Rejects p with k > 16.
BinaryFieldDescriptor build_field(std::uint32_t p);

std::uint32_t gf_add(std::uint32_t a, std::uint32_t b);
std::uint32_t gf_mul(const BinaryFieldDescriptor& f, std::uint32_t a, std::uint32_t b);
std::uint32_t gf_pow(const BinaryFieldDescriptor& f, std::uint32_t a, std::uint64_t n);

}  // namespace d2p
