#pragma once

#include <cstdint>
#include <map>

#include "d2p/rep.hpp"

namespace d2p {

// Polynomial with GF(2^k) coefficients, the coefficient-true side of the
// invariance oracle. The GF(2) polynomials the library works with embed via
// from_poly2; applying rho introduces genuine zeta powers, so invariance of
// an orbit sum is checked here rather than over GF(2).
class PolyK {
 public:
  PolyK() = default;

  static PolyK from_poly2(const Poly2& f);

  // Adds coeff * m (GF addition, i.e. xor); zero coefficients drop out.
  void add_term(const Monomial& m, std::uint32_t coeff);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, std::uint32_t>& terms() const { return terms_; }

  bool operator==(const PolyK&) const = default;

 private:
  std::map<Monomial, std::uint32_t> terms_;
};

PolyK apply_sigma(const DihedralRep& rep, const PolyK& f);
PolyK apply_rho(const DihedralRep& rep, const BinaryFieldDescriptor& field, const PolyK& f);

// Fixed by both generators, hence by the whole group.
bool is_invariant_poly(const DihedralRep& rep, const BinaryFieldDescriptor& field,
                       const PolyK& f);

}  // namespace d2p
