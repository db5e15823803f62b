#include "d2p/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace d2p {

namespace {

std::vector<std::string> render_all(const VarLayout& layout, const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  out.reserve(ms.size());
  for (const Monomial& m : ms) out.push_back(render_monomial(layout, m));
  return out;
}

Monomial w_block(const DihedralRep& rep) {
  Monomial m(rep.nvars());
  for (std::uint32_t j = 0; j < rep.s(); ++j) m.set_exp(2 * rep.r() + rep.s() + j, 1);
  return m;
}

// y_1..y_r w_1..w_s, the degree r+s witness.
Monomial witness_small(const DihedralRep& rep) {
  Monomial m = w_block(rep);
  for (std::uint32_t i = 0; i < rep.r(); ++i) m.set_exp(rep.r() + i, 1);
  return m;
}

// y_1^p w_1..w_s, realizing the top degree when r <= p. Needs r >= 1.
Monomial witness_power(const DihedralRep& rep) {
  Monomial m = w_block(rep);
  m.set_exp(rep.r(), rep.p());
  return m;
}

}  // namespace

DihedralRep rep_from_config(const RunConfig& config) {
  return DihedralRep(config.p, config.r, config.s, config.weights);
}

std::vector<MonomialOrder> orders_for_config(const RunConfig& config, const VarLayout& layout) {
  if (!config.orders.empty()) {
    for (const MonomialOrder& order : config.orders) validate_order(order, layout.nvars());
    return config.orders;
  }
  return sample_orders(layout, config.sampled_orders, config.seed);
}

Report run_verify(const RunConfig& config) {
  Report report;
  report.config = config;

  const DihedralRep rep = rep_from_config(config);
  report.field = build_field(rep.p());

  const GeneratorSet gens = universal_basis(rep);
  const std::vector<Poly2> gpolys = gens.polys();
  const std::vector<Poly2> hilbert = hilbert_ideal_generators(rep);

  report.counts.orbit_sum = static_cast<std::uint32_t>(gens.count(GenFamily::OrbitSum));
  report.counts.monomial_multiple =
      static_cast<std::uint32_t>(gens.count(GenFamily::MonomialMultiple));
  report.counts.norm_pair = static_cast<std::uint32_t>(gens.count(GenFamily::NormPair));
  report.counts.total = static_cast<std::uint32_t>(gens.elements.size());
  report.counts.hilbert_generators = static_cast<std::uint32_t>(hilbert.size());

  const std::uint32_t p = rep.p();
  bool degree_bound_ok = true;
  for (const Poly2& g : gpolys) degree_bound_ok = degree_bound_ok && g.degree() <= p + 1;

  const std::uint32_t expected_top = top_degree_formula(rep);
  const BuchbergerOptions opts{config.max_basis};
  const VarLayout& layout = rep.layout();

  for (const MonomialOrder& order : orders_for_config(config, layout)) {
    OrderRecord rec;
    rec.order = order;

    const GroebnerCheck check = is_groebner_basis(gpolys, order);
    const std::vector<Poly2> reduced_universal =
        check.ok ? reduce_basis(gpolys, order)
                 : reduced_groebner_basis(gpolys, order, opts).elements;
    const std::vector<Poly2> reduced_hilbert =
        reduced_groebner_basis(hilbert, order, opts).elements;

    rec.gb_size = static_cast<std::uint32_t>(reduced_hilbert.size());
    const std::vector<Monomial> lt = lead_term_ideal(reduced_hilbert, order);
    rec.lt_generators = render_all(layout, lt);
    const std::vector<Monomial> standard = standard_monomials(lt, rep.nvars());
    rec.dimension = static_cast<std::uint32_t>(standard.size());
    rec.top_degree = 0;
    for (const Monomial& m : standard) rec.top_degree = std::max(rec.top_degree, m.degree());

    rec.checks.buchberger_ok = check.ok;
    rec.checks.ideal_equal = reduced_universal == reduced_hilbert;
    rec.checks.steinberg_ok = rep.r() == 0 || rec.dimension >= 2 * p;
    rec.checks.top_degree_ok = rec.top_degree == expected_top;
    rec.checks.degree_bound_ok = degree_bound_ok;
    report.per_order.push_back(std::move(rec));
  }

  const CoinvariantStats stats = coinvariant_stats(rep, grevlex_order());
  report.dimension = stats.dimension;
  report.top_degree = stats.top_degree;
  report.lt_generators = render_all(layout, stats.lt_generators);
  report.standard_monomials = render_all(layout, stats.standard_monomials);

  FormulaReport& f = report.formulas;
  f.top_degree_formula = expected_top;
  f.top_degree_computed = stats.top_degree;
  f.top_degree_match = stats.top_degree == expected_top;

  const MonomialOrder witness_order = swapped_lex_order(layout);
  f.witness_small_nonzero =
      !normal_form(Poly2(witness_small(rep)), gpolys, witness_order).is_zero();
  f.witness_power_applicable = rep.r() >= 1;
  f.witness_power_nonzero =
      f.witness_power_applicable &&
      !normal_form(Poly2(witness_power(rep)), gpolys, witness_order).is_zero();

  f.steinberg_applicable = rep.r() >= 1;
  f.steinberg_bound = 2 * p;
  f.steinberg_ok = rep.r() == 0 || stats.dimension >= 2 * p;
  f.dimension = stats.dimension;

  if (!config.hsop_degrees.empty()) {
    HsopReport h;
    h.degrees = config.hsop_degrees;
    const HsopBounds bounds = hsop_bounds(config.hsop_degrees);
    h.top_degree_bound = bounds.top_degree_bound;
    h.dimension_bound = bounds.dimension_bound;
    h.top_within = stats.top_degree <= bounds.top_degree_bound;
    h.dim_within = stats.dimension <= bounds.dimension_bound;
    h.top_attained = stats.top_degree == bounds.top_degree_bound;
    h.dim_attained = stats.dimension == bounds.dimension_bound;
    f.hsop = std::move(h);
  }

  bool pass = f.top_degree_match && f.witness_small_nonzero && f.steinberg_ok &&
              (!f.witness_power_applicable || f.witness_power_nonzero);
  if (f.hsop) pass = pass && f.hsop->top_within && f.hsop->dim_within;
  for (const OrderRecord& rec : report.per_order) pass = pass && rec.checks.all();
  report.pass = pass;
  return report;
}

}  // namespace d2p
