#pragma once

#include <cstdint>
#include <vector>

#include "d2p/field.hpp"
#include "d2p/poly.hpp"

namespace d2p {

// A characteristic-two representation of the dihedral group of order 2p
// (p odd), fixed by the data (p, r, s, weights): the reflection sigma swaps
// x_i <-> y_i and z_j <-> w_j; the rotation rho scales x_i by zeta^{a_i},
// y_i by zeta^{-a_i}, and fixes the z/w block. r + s >= 1; the weights a_i
// are nonzero mod p (all 1 when omitted). The action is faithful exactly
// when r >= 1; with r = 0 the rotation acts trivially.
class DihedralRep {
 public:
  DihedralRep(std::uint32_t p, std::uint32_t r, std::uint32_t s,
              std::vector<std::uint32_t> weights = {});

  std::uint32_t p() const { return p_; }
  std::uint32_t r() const { return layout_.r; }
  std::uint32_t s() const { return layout_.s; }
  const std::vector<std::uint32_t>& weights() const { return weights_; }
  const VarLayout& layout() const { return layout_; }
  std::size_t nvars() const { return layout_.nvars(); }

  bool p_is_prime() const;
  bool faithful() const { return layout_.r >= 1; }

  bool operator==(const DihedralRep&) const = default;

 private:
  std::uint32_t p_;
  VarLayout layout_;
  std::vector<std::uint32_t> weights_;
};

// Image of a monomial under the reflection: exponents of x_i/y_i swap, as do
// those of z_j/w_j.
Monomial sigma(const DihedralRep& rep, const Monomial& m);

// rho scales m by zeta^{rho_weight(m)}: the weight is sum a_i*(e_{x_i} -
// e_{y_i}) mod p. Weight zero means rho fixes m.
ZmodP rho_weight(const DihedralRep& rep, const Monomial& m);
bool is_rho_invariant(const DihedralRep& rep, const Monomial& m);

// Fixed by the whole group: rho-invariant and sigma-fixed.
bool is_g_invariant(const DihedralRep& rep, const Monomial& m);

// Orbit sum o(m) = m when sigma fixes m, else m + sigma(m). Defined only for
// rho-invariant m (throws otherwise); those orbit sums are the invariants
// that generate the Hilbert ideal.
Poly2 orbit_sum(const DihedralRep& rep, const Monomial& m);

}  // namespace d2p
