#pragma once

#include <cstdint>
#include <vector>

#include "d2p/basis.hpp"
#include "d2p/groebner.hpp"

namespace d2p {

// Vector-space data of the coinvariant algebra F[V]/I_H under one monomial
// order: the standard monomials form a basis, so dimension and top nonzero
// degree read off directly. Both numbers are order-independent facts of the
// ideal even though the monomial lists are not.
struct CoinvariantStats {
  std::uint32_t dimension = 0;
  std::uint32_t top_degree = 0;
  std::vector<Monomial> lt_generators;
  std::vector<Monomial> standard_monomials;
};

// Stats via the explicit universal basis (no completion needed: it is a
// Groebner basis for every order). Requires prime p.
CoinvariantStats coinvariant_stats(const DihedralRep& rep, const MonomialOrder& order);

// Same stats from an arbitrary generating set of an ideal, via Buchberger.
CoinvariantStats coinvariant_stats_of_ideal(const std::vector<Poly2>& gens, std::size_t nvars,
                                            const MonomialOrder& order,
                                            const BuchbergerOptions& opts = {});

// Closed form for the top degree of the coinvariant algebra: s + max(r, p)
// when r >= 1, else s. Requires prime p.
std::uint32_t top_degree_formula(const DihedralRep& rep);

// For a homogeneous system of parameters of degrees d_1..d_n the coinvariant
// top degree is at most sum (d_i - 1) and the dimension at most prod d_i.
struct HsopBounds {
  std::uint64_t top_degree_bound = 0;
  std::uint64_t dimension_bound = 1;
};

HsopBounds hsop_bounds(const std::vector<std::uint32_t>& degrees);

// The generic hsop of n norms, each of degree |G| = 2p.
HsopBounds hsop_bounds_uniform(std::size_t nvars, std::uint32_t group_order);

// Coefficients of prod (1 + t + ... + t^(d_i - 1)), the Hilbert series of a
// complete-intersection quotient with those degrees.
std::vector<std::uint64_t> hilbert_series_product(const std::vector<std::uint32_t>& degrees);

}  // namespace d2p
