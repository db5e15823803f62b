#include "d2p/polyk.hpp"

#include <stdexcept>

namespace d2p {

PolyK PolyK::from_poly2(const Poly2& f) {
  PolyK out;
  for (const Monomial& m : f.terms()) out.add_term(m, 1);
  return out;
}

void PolyK::add_term(const Monomial& m, std::uint32_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second ^= coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyK apply_sigma(const DihedralRep& rep, const PolyK& f) {
  PolyK out;
  for (const auto& [m, c] : f.terms()) out.add_term(sigma(rep, m), c);
  return out;
}

PolyK apply_rho(const DihedralRep& rep, const BinaryFieldDescriptor& field, const PolyK& f) {
  if (field.p != rep.p()) {
    throw std::invalid_argument("field and representation disagree on p");
  }
  PolyK out;
  for (const auto& [m, c] : f.terms()) {
    const std::uint32_t w = rho_weight(rep, m).value();
    out.add_term(m, gf_mul(field, c, gf_pow(field, field.zeta, w)));
  }
  return out;
}

bool is_invariant_poly(const DihedralRep& rep, const BinaryFieldDescriptor& field,
                       const PolyK& f) {
  return apply_sigma(rep, f) == f && apply_rho(rep, field, f) == f;
}

}  // namespace d2p
