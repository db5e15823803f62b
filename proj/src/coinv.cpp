#include "d2p/coinv.hpp"

#include <numeric>
#include <stdexcept>

namespace d2p {

namespace {

CoinvariantStats stats_from_basis(const std::vector<Poly2>& groebner, std::size_t nvars,
                                  const MonomialOrder& order) {
  CoinvariantStats stats;
  stats.lt_generators = lead_term_ideal(groebner, order);
  stats.standard_monomials = standard_monomials(stats.lt_generators, nvars);
  stats.dimension = static_cast<std::uint32_t>(stats.standard_monomials.size());
  for (const Monomial& m : stats.standard_monomials) {
    stats.top_degree = std::max(stats.top_degree, m.degree());
  }
  return stats;
}

}  // namespace

CoinvariantStats coinvariant_stats(const DihedralRep& rep, const MonomialOrder& order) {
  validate_order(order, rep.nvars());
  const GeneratorSet gens = universal_basis(rep);
  return stats_from_basis(gens.polys(), rep.nvars(), order);
}

CoinvariantStats coinvariant_stats_of_ideal(const std::vector<Poly2>& gens, std::size_t nvars,
                                            const MonomialOrder& order,
                                            const BuchbergerOptions& opts) {
  if (gens.empty()) throw std::invalid_argument("coinvariant stats of the zero ideal");
  const GroebnerBasis gb = buchberger(gens, order, opts);
  return stats_from_basis(gb.elements, nvars, order);
}

std::uint32_t top_degree_formula(const DihedralRep& rep) {
  if (!rep.p_is_prime()) {
    throw std::invalid_argument("top_degree_formula: requires prime p");
  }
  if (rep.r() >= 1) return rep.s() + std::max(rep.r(), rep.p());
  return rep.s();
}

HsopBounds hsop_bounds(const std::vector<std::uint32_t>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("hsop_bounds: empty degree list");
  HsopBounds out;
  for (std::uint32_t d : degrees) {
    if (d == 0) throw std::invalid_argument("hsop_bounds: degrees must be positive");
    out.top_degree_bound += d - 1;
    out.dimension_bound *= d;
  }
  return out;
}

HsopBounds hsop_bounds_uniform(std::size_t nvars, std::uint32_t group_order) {
  return hsop_bounds(std::vector<std::uint32_t>(nvars, group_order));
}

std::vector<std::uint64_t> hilbert_series_product(const std::vector<std::uint32_t>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("hilbert_series_product: empty degree list");
  std::vector<std::uint64_t> coeffs{1};
  for (std::uint32_t d : degrees) {
    if (d == 0) {
      throw std::invalid_argument("hilbert_series_product: degrees must be positive");
    }
    std::vector<std::uint64_t> next(coeffs.size() + d - 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      for (std::uint32_t j = 0; j < d; ++j) next[i + j] += coeffs[i];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

}  // namespace d2p
