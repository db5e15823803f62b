#include "d2p/groebner.hpp"

#include <algorithm>
#include <queue>

namespace d2p {

namespace {

struct SPair {
  std::uint32_t lcm_degree;
  Monomial lcm;
  std::size_t i;
  std::size_t j;
};

// The normal strategy: process the pair with the smallest lcm degree first,
// ties by the monomial order on the lcm, then by indices.
bool pair_before(const SPair& a, const SPair& b, const MonomialOrder& order) {
  if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
  const Ordering c = compare(order, a.lcm, b.lcm);
  if (c != Ordering::Equal) return c == Ordering::Less;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

void check_nonzero(const std::vector<Poly2>& basis, const char* who) {
  for (const Poly2& g : basis) {
    if (g.is_zero()) throw std::invalid_argument(std::string(who) + ": zero element in basis");
  }
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Poly2>& gens, const MonomialOrder& order,
                         const BuchbergerOptions& opts) {
  std::vector<Poly2> basis;
  std::vector<Monomial> leads;
  for (const Poly2& g : gens) {
    if (!g.is_zero()) {
      basis.push_back(g);
      leads.push_back(leading_monomial(g, order));
    }
  }

  auto later = [&order](const SPair& a, const SPair& b) { return pair_before(b, a, order); };
  std::priority_queue<SPair, std::vector<SPair>, decltype(later)> queue(later);

  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (leads[i].coprime_with(leads[j])) continue;  // S-pair reduces to zero
      Monomial l = Monomial::lcm(leads[i], leads[j]);
      queue.push(SPair{l.degree(), std::move(l), i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  while (!queue.empty()) {
    const SPair pair = queue.top();
    queue.pop();
    const Poly2 s = s_polynomial(basis[pair.i], basis[pair.j], order);
    Poly2 r = normal_form(s, basis, order);
    if (r.is_zero()) continue;

    basis.push_back(std::move(r));
    leads.push_back(leading_monomial(basis.back(), order));
    if (basis.size() > opts.max_basis) {
      throw ResourceCapError("buchberger: basis exceeded " + std::to_string(opts.max_basis) +
                             " elements");
    }
    push_pairs_for(basis.size() - 1);
  }

  return GroebnerBasis{std::move(basis), order, false};
}

std::vector<Poly2> reduce_basis(const std::vector<Poly2>& basis, const MonomialOrder& order) {
  // Sort by lead (ascending), then by the container order for determinism
  // between equal leads, and drop exact duplicates.
  std::vector<Poly2> work;
  for (const Poly2& g : basis) {
    if (!g.is_zero()) work.push_back(g);
  }
  std::sort(work.begin(), work.end(), [&](const Poly2& a, const Poly2& b) {
    const Ordering c = compare(order, leading_monomial(a, order), leading_monomial(b, order));
    if (c != Ordering::Equal) return c == Ordering::Less;
    return a < b;
  });
  work.erase(std::unique(work.begin(), work.end()), work.end());

  // Minimalize: keep only elements whose lead no kept lead divides. In the
  // ascending sort only earlier elements can divide later ones.
  std::vector<Poly2> minimal;
  std::vector<Monomial> kept_leads;
  for (const Poly2& g : work) {
    const Monomial lead = leading_monomial(g, order);
    const bool covered = std::any_of(kept_leads.begin(), kept_leads.end(),
                                     [&](const Monomial& m) { return m.divides(lead); });
    if (!covered) {
      minimal.push_back(g);
      kept_leads.push_back(lead);
    }
  }

  // Tail-reduce each element against all the others. The minimal leads are
  // pairwise non-divisible, so the lead survives and only tails shrink; a
  // single pass yields the canonical reduced basis.
  std::vector<Poly2> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly2> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    reduced.push_back(normal_form(minimal[i], others, order));
  }
  return reduced;
}

GroebnerBasis reduced_groebner_basis(const std::vector<Poly2>& gens, const MonomialOrder& order,
                                     const BuchbergerOptions& opts) {
  GroebnerBasis gb = buchberger(gens, order, opts);
  gb.elements = reduce_basis(gb.elements, order);
  gb.reduced = true;
  return gb;
}

GroebnerCheck is_groebner_basis(const std::vector<Poly2>& basis, const MonomialOrder& order) {
  check_nonzero(basis, "is_groebner_basis");
  GroebnerCheck out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Poly2 s = s_polynomial(basis[i], basis[j], order);
      Poly2 r = normal_form(s, basis, order);
      if (!r.is_zero()) {
        out.ok = false;
        out.failures.push_back(SPairFailure{i, j, std::move(r)});
      }
    }
  }
  return out;
}

std::vector<Monomial> lead_term_ideal(const std::vector<Poly2>& basis,
                                      const MonomialOrder& order) {
  check_nonzero(basis, "lead_term_ideal");
  std::vector<Monomial> leads;
  leads.reserve(basis.size());
  for (const Poly2& g : basis) leads.push_back(leading_monomial(g, order));

  std::sort(leads.begin(), leads.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  leads.erase(std::unique(leads.begin(), leads.end()), leads.end());

  // Divisors sort earlier, so one ascending pass minimalizes.
  std::vector<Monomial> minimal;
  for (const Monomial& m : leads) {
    const bool covered = std::any_of(minimal.begin(), minimal.end(),
                                     [&](const Monomial& d) { return d.divides(m); });
    if (!covered) minimal.push_back(m);
  }
  return minimal;
}

std::vector<Monomial> standard_monomials(const std::vector<Monomial>& lt_gens,
                                         std::size_t nvars) {
  // Finite-dimensionality needs a pure power of every variable among the
  // generators (the constant monomial covers all variables at once).
  for (std::size_t v = 0; v < nvars; ++v) {
    const bool has_power = std::any_of(lt_gens.begin(), lt_gens.end(), [&](const Monomial& m) {
      for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (i != v && m.exp(i) != 0) return false;
      }
      return true;
    });
    if (!has_power) {
      throw std::invalid_argument(
          "standard_monomials: quotient is infinite-dimensional (no pure power of every "
          "variable)");
    }
  }

  const MonomialOrder grevlex = grevlex_order();
  std::vector<Monomial> out;
  std::vector<std::uint16_t> exps(nvars, 0);
  std::vector<Monomial> bucket;
  auto fill = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
    if (var + 1 == nvars) {
      exps[var] = static_cast<std::uint16_t>(left);
      Monomial m{exps};
      const bool in_ideal = std::any_of(lt_gens.begin(), lt_gens.end(),
                                        [&](const Monomial& d) { return d.divides(m); });
      if (!in_ideal) bucket.push_back(std::move(m));
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      exps[var] = static_cast<std::uint16_t>(e);
      self(self, var + 1, left - e);
    }
    exps[var] = 0;
  };

  for (std::uint32_t d = 0;; ++d) {
    bucket.clear();
    fill(fill, 0, d);
    if (bucket.empty()) break;  // all of degree d in the ideal, so all beyond too
    std::sort(bucket.begin(), bucket.end(), [&](const Monomial& a, const Monomial& b) {
      return order_less(grevlex, a, b);
    });
    out.insert(out.end(), bucket.begin(), bucket.end());
  }
  return out;
}

}  // namespace d2p
