#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "d2p/rep.hpp"
#include "d2p/zerosum.hpp"

namespace d2p {

// The three families making up the explicit universal basis: orbit sums
// m + sigma(m) of rho-invariant, non-group-invariant monomials of degree at
// most p; variable multiples u*m of rho-invariant monomials of degree at
// most p; and the norm pairs x_i*y_i, z_j*w_j.
enum class GenFamily { OrbitSum, MonomialMultiple, NormPair };

const char* family_name(GenFamily family);
GenFamily family_from_name(const std::string& name);

struct TaggedPoly {
  GenFamily family;
  Poly2 poly;

  bool operator==(const TaggedPoly&) const = default;
};

struct GeneratorSet {
  std::vector<TaggedPoly> elements;

  std::vector<Poly2> polys() const;
  std::size_t count(GenFamily family) const;

  bool operator==(const GeneratorSet&) const = default;
};

// All rho-invariant monomials of degree <= dmax, ascending by degree and
// grevlex within a degree; includes the constant monomial.
std::vector<Monomial> enumerate_rho_invariant_monomials(const DihedralRep& rep,
                                                        std::uint32_t dmax);

// Orbit sums of the nonconstant rho-invariant monomials of degree <= p,
// deduplicated (m and sigma(m) give the same orbit sum). These invariants
// generate the Hilbert ideal; works for any odd p.
std::vector<Poly2> hilbert_ideal_generators(const DihedralRep& rep);

// The explicit universal basis of the Hilbert ideal: one Groebner basis for
// every monomial order. Elements are tagged by family, deduplicated within
// each family, listed family by family in enumeration order. Requires
// prime p (the degree bounds behind the construction fail for composite p).
GeneratorSet universal_basis(const DihedralRep& rep);

// Cosmetic pass: drops single-monomial elements strictly divisible by
// another single-monomial element. Keeps two-term elements and list order;
// idempotent.
GeneratorSet prune_redundant(const GeneratorSet& gens);

// Splits a rho-invariant monomial of degree >= p+1 into m1 * m2 with both
// factors rho-invariant and nonconstant, deg(m1) <= p. Works variable by
// variable: a z/w variable u splits off directly as (u, m/u); otherwise the
// first p+1 x/y occurrences feed the zero-sum engine and the witness pair
// plus completion forms m1. Requires prime p.
std::pair<Monomial, Monomial> monomial_decompose(const DihedralRep& rep, const Monomial& m);

// Given a variable u (by index) dividing a rho-invariant m of degree > p,
// returns m' with u | m' | m, m' rho-invariant, 1 <= deg(m') <= p: the
// certificate that u*m reduces to a small multiple inside the ideal.
// Requires prime p.
Monomial reduce_multiple_to_small(const DihedralRep& rep, std::size_t var_index,
                                  const Monomial& m);

}  // namespace d2p
