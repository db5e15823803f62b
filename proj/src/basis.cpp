#include "d2p/basis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace d2p {

namespace {

void require_prime(const DihedralRep& rep, const char* who) {
  if (!rep.p_is_prime()) {
    throw std::invalid_argument(std::string(who) + ": requires prime p, got " +
                                std::to_string(rep.p()));
  }
}

// Occurrence list of a monomial: each variable index repeated its exponent
// times, ascending.
std::vector<std::size_t> occurrences(const Monomial& m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    for (std::uint16_t e = 0; e < m.exp(i); ++e) out.push_back(i);
  }
  return out;
}

// rho-weight of a single variable as a residue mod p; nonzero exactly for
// the x/y variables.
std::uint32_t var_weight(const DihedralRep& rep, std::size_t v) {
  const VarLayout& L = rep.layout();
  if (L.is_x(v)) return rep.weights()[v];
  if (L.is_y(v)) return rep.p() - rep.weights()[v - L.r];
  return 0;
}

Monomial single_variable(std::size_t nvars, std::size_t v) {
  Monomial m(nvars);
  m.set_exp(v, 1);
  return m;
}

}  // namespace

const char* family_name(GenFamily family) {
  switch (family) {
    case GenFamily::OrbitSum: return "orbit_sum";
    case GenFamily::MonomialMultiple: return "monomial_multiple";
    case GenFamily::NormPair: return "norm_pair";
  }
  throw std::logic_error("unreachable");
}

GenFamily family_from_name(const std::string& name) {
  if (name == "orbit_sum") return GenFamily::OrbitSum;
  if (name == "monomial_multiple") return GenFamily::MonomialMultiple;
  if (name == "norm_pair") return GenFamily::NormPair;
  throw std::invalid_argument("unknown generator family '" + name + "'");
}

std::vector<Poly2> GeneratorSet::polys() const {
  std::vector<Poly2> out;
  out.reserve(elements.size());
  for (const TaggedPoly& e : elements) out.push_back(e.poly);
  return out;
}

std::size_t GeneratorSet::count(GenFamily family) const {
  std::size_t n = 0;
  for (const TaggedPoly& e : elements) {
    if (e.family == family) ++n;
  }
  return n;
}

std::vector<Monomial> enumerate_rho_invariant_monomials(const DihedralRep& rep,
                                                        std::uint32_t dmax) {
  const std::size_t n = rep.nvars();
  const MonomialOrder grevlex = grevlex_order();
  std::vector<Monomial> out;

  std::vector<std::uint16_t> exps(n, 0);
  std::vector<Monomial> bucket;
  // All exponent vectors of total degree d, depth-first over variables.
  auto fill = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
    if (var + 1 == n) {
      exps[var] = static_cast<std::uint16_t>(left);
      Monomial m{exps};
      if (is_rho_invariant(rep, m)) bucket.push_back(std::move(m));
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      exps[var] = static_cast<std::uint16_t>(e);
      self(self, var + 1, left - e);
    }
    exps[var] = 0;
  };

  for (std::uint32_t d = 0; d <= dmax; ++d) {
    bucket.clear();
    fill(fill, 0, d);
    std::sort(bucket.begin(), bucket.end(), [&](const Monomial& a, const Monomial& b) {
      return order_less(grevlex, a, b);
    });
    out.insert(out.end(), bucket.begin(), bucket.end());
  }
  return out;
}

std::vector<Poly2> hilbert_ideal_generators(const DihedralRep& rep) {
  std::vector<Poly2> out;
  std::set<Poly2> seen;
  for (const Monomial& m : enumerate_rho_invariant_monomials(rep, rep.p())) {
    if (m.is_one()) continue;
    Poly2 o = orbit_sum(rep, m);
    if (seen.insert(o).second) out.push_back(std::move(o));
  }
  return out;
}

GeneratorSet universal_basis(const DihedralRep& rep) {
  require_prime(rep, "universal_basis");

  GeneratorSet gens;
  const std::vector<Monomial> invariant = enumerate_rho_invariant_monomials(rep, rep.p());

  std::set<Poly2> seen_orbit;
  for (const Monomial& m : invariant) {
    if (m.is_one() || sigma(rep, m) == m) continue;
    Poly2 o = orbit_sum(rep, m);
    if (seen_orbit.insert(o).second) {
      gens.elements.push_back({GenFamily::OrbitSum, std::move(o)});
    }
  }

  std::set<Monomial> seen_multiple;
  for (const Monomial& m : invariant) {
    if (m.is_one()) continue;
    for (std::size_t v = 0; v < m.nvars(); ++v) {
      if (m.exp(v) == 0) continue;
      Monomial um = m * single_variable(m.nvars(), v);
      if (seen_multiple.insert(um).second) {
        gens.elements.push_back({GenFamily::MonomialMultiple, Poly2(std::move(um))});
      }
    }
  }

  const VarLayout& L = rep.layout();
  for (std::uint32_t i = 0; i < L.r; ++i) {
    gens.elements.push_back(
        {GenFamily::NormPair,
         Poly2(single_variable(L.nvars(), i) * single_variable(L.nvars(), L.r + i))});
  }
  for (std::uint32_t j = 0; j < L.s; ++j) {
    gens.elements.push_back(
        {GenFamily::NormPair, Poly2(single_variable(L.nvars(), 2 * L.r + j) *
                                    single_variable(L.nvars(), 2 * L.r + L.s + j))});
  }
  return gens;
}

GeneratorSet prune_redundant(const GeneratorSet& gens) {
  std::vector<Monomial> singles;
  for (const TaggedPoly& e : gens.elements) {
    if (e.poly.term_count() == 1) singles.push_back(e.poly.terms()[0]);
  }

  GeneratorSet out;
  for (const TaggedPoly& e : gens.elements) {
    if (e.poly.term_count() == 1) {
      const Monomial& m = e.poly.terms()[0];
      const bool redundant = std::any_of(singles.begin(), singles.end(), [&](const Monomial& d) {
        return d != m && d.divides(m);
      });
      if (redundant) continue;
    }
    out.elements.push_back(e);
  }
  return out;
}

std::pair<Monomial, Monomial> monomial_decompose(const DihedralRep& rep, const Monomial& m) {
  require_prime(rep, "monomial_decompose");
  if (!is_rho_invariant(rep, m)) {
    throw std::invalid_argument("monomial_decompose: monomial is not rho-invariant");
  }
  const std::uint32_t p = rep.p();
  if (m.degree() < p + 1) {
    throw std::invalid_argument("monomial_decompose: degree must be at least p+1");
  }

  // A z/w variable splits off directly.
  const VarLayout& L = rep.layout();
  for (std::size_t v = 2 * static_cast<std::size_t>(L.r); v < L.nvars(); ++v) {
    if (m.exp(v) > 0) {
      const Monomial u = single_variable(m.nvars(), v);
      return {u, m / u};
    }
  }

  // Pure x/y monomial: hand the first p+1 occurrence weights to the zero-sum
  // engine; the witness pair slot k1 plus the completion subset assembles a
  // rho-invariant factor of degree <= p.
  const std::vector<std::size_t> occ = occurrences(m);
  std::vector<ZmodP> seq;
  seq.reserve(p + 1);
  for (std::size_t i = 0; i < p + 1; ++i) seq.emplace_back(var_weight(rep, occ[i]), p);

  const ZeroSumWitness w = schmid_zero_sum(seq);
  Monomial m1(m.nvars());
  m1.set_exp(occ[w.k1], m1.exp(occ[w.k1]) + 1);
  for (std::size_t i : w.subset) m1.set_exp(occ[i], m1.exp(occ[i]) + 1);
  return {m1, m / m1};
}

Monomial reduce_multiple_to_small(const DihedralRep& rep, std::size_t var_index,
                                  const Monomial& m) {
  require_prime(rep, "reduce_multiple_to_small");
  if (var_index >= m.nvars()) {
    throw std::invalid_argument("reduce_multiple_to_small: variable index out of range");
  }
  if (m.exp(var_index) == 0) {
    throw std::invalid_argument("reduce_multiple_to_small: variable does not divide m");
  }
  if (!is_rho_invariant(rep, m)) {
    throw std::invalid_argument("reduce_multiple_to_small: monomial is not rho-invariant");
  }
  const std::uint32_t p = rep.p();
  if (m.degree() <= p) {
    throw std::invalid_argument("reduce_multiple_to_small: degree must exceed p");
  }

  // A rho-invariant variable is already a valid factor.
  const VarLayout& L = rep.layout();
  if (L.is_z(var_index) || L.is_w(var_index)) {
    return single_variable(m.nvars(), var_index);
  }

  // The x/y part of m is rho-invariant (the z/w block carries weight zero)
  // and contains the chosen variable.
  Monomial xy(m.nvars());
  for (std::size_t v = 0; v < 2 * static_cast<std::size_t>(L.r); ++v) xy.set_exp(v, m.exp(v));
  if (xy.degree() <= p) return xy;

  // Still too big: force the zero-sum pair onto the chosen variable by
  // listing its weight twice, followed by the first p-1 other occurrences of
  // the xy part (one copy of the variable withheld). For prime p every equal
  // pair completes, so slots (0, 1) always yield a witness.
  std::vector<std::size_t> pool = occurrences(xy);
  pool.erase(std::find(pool.begin(), pool.end(), var_index));

  std::vector<ZmodP> seq;
  seq.reserve(p + 1);
  seq.emplace_back(var_weight(rep, var_index), p);
  seq.emplace_back(var_weight(rep, var_index), p);
  for (std::size_t i = 0; i < static_cast<std::size_t>(p) - 1; ++i) {
    seq.emplace_back(var_weight(rep, pool[i]), p);
  }

  const auto subset = zerosum_completion(seq, 0, 1);
  if (!subset) {
    throw std::logic_error("reduce_multiple_to_small: completion missing for prime modulus");
  }
  Monomial out(m.nvars());
  out.set_exp(var_index, 1);
  for (std::size_t i : *subset) {
    const std::size_t v = pool[i - 2];
    out.set_exp(v, out.exp(v) + 1);
  }
  return out;
}

}  // namespace d2p
