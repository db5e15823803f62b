#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "d2p/poly.hpp"

namespace d2p {

// Raised when a computation exceeds its configured size cap; maps to a
// distinct process exit code so runaway configs are told apart from check
// failures.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BuchbergerOptions {
  std::size_t max_basis = 20000;  // element-count cap
};

struct GroebnerBasis {
  std::vector<Poly2> elements;
  MonomialOrder order;
  bool reduced = false;

  bool operator==(const GroebnerBasis&) const = default;
};

// Buchberger completion with the normal pair-selection strategy (smallest
// lcm degree first, ties by the order on the lcm, then by element indices)
// and the coprime-lead criterion. Zero generators are dropped. The returned
// basis is a Groebner basis of the input ideal, not yet reduced.
GroebnerBasis buchberger(const std::vector<Poly2>& gens, const MonomialOrder& order,
                         const BuchbergerOptions& opts = {});

// Canonical reduced Groebner basis from any Groebner basis of the ideal:
// minimal lead set, every element fully reduced against the others, sorted
// ascending by lead monomial. Over GF(2) there is no monic rescaling, so
// equality of reduced bases is plain equality of element lists.
std::vector<Poly2> reduce_basis(const std::vector<Poly2>& basis, const MonomialOrder& order);

GroebnerBasis reduced_groebner_basis(const std::vector<Poly2>& gens, const MonomialOrder& order,
                                     const BuchbergerOptions& opts = {});

struct SPairFailure {
  std::size_t i = 0;
  std::size_t j = 0;
  Poly2 remainder;

  bool operator==(const SPairFailure&) const = default;
};

struct GroebnerCheck {
  bool ok = true;
  std::vector<SPairFailure> failures;
};

// The generic oracle: checks every S-pair without shortcuts and reports the
// pairs whose S-polynomial fails to reduce to zero. Elements must be
// nonzero.
GroebnerCheck is_groebner_basis(const std::vector<Poly2>& basis, const MonomialOrder& order);

// Minimal generating set of the lead-term ideal, ascending by (degree,
// container order). Elements must be nonzero.
std::vector<Monomial> lead_term_ideal(const std::vector<Poly2>& basis,
                                      const MonomialOrder& order);

// Monomials outside the monomial ideal generated by lt_gens, ascending by
// (degree, grevlex). Throws unless the quotient is finite-dimensional, i.e.
// some pure power of every variable appears among the generators.
std::vector<Monomial> standard_monomials(const std::vector<Monomial>& lt_gens,
                                         std::size_t nvars);

}  // namespace d2p
