#include "d2p/json_io.hpp"

namespace d2p {

namespace {

std::vector<std::uint32_t> u32_list(const Json& j) {
  return j.get<std::vector<std::uint32_t>>();
}

Json checks_to_json(const OrderChecks& c) {
  return Json{{"buchberger_ok", c.buchberger_ok},
              {"ideal_equal", c.ideal_equal},
              {"steinberg_ok", c.steinberg_ok},
              {"top_degree_ok", c.top_degree_ok},
              {"degree_bound_ok", c.degree_bound_ok}};
}

OrderChecks checks_from_json(const Json& j) {
  OrderChecks c;
  c.buchberger_ok = j.at("buchberger_ok").get<bool>();
  c.ideal_equal = j.at("ideal_equal").get<bool>();
  c.steinberg_ok = j.at("steinberg_ok").get<bool>();
  c.top_degree_ok = j.at("top_degree_ok").get<bool>();
  c.degree_bound_ok = j.at("degree_bound_ok").get<bool>();
  return c;
}

Json record_to_json(const OrderRecord& rec) {
  return Json{{"order", order_to_json(rec.order)},
              {"gb_size", rec.gb_size},
              {"lt_generators", rec.lt_generators},
              {"dimension", rec.dimension},
              {"top_degree", rec.top_degree},
              {"checks", checks_to_json(rec.checks)}};
}

OrderRecord record_from_json(const Json& j) {
  OrderRecord rec;
  rec.order = order_from_json(j.at("order"));
  rec.gb_size = j.at("gb_size").get<std::uint32_t>();
  rec.lt_generators = j.at("lt_generators").get<std::vector<std::string>>();
  rec.dimension = j.at("dimension").get<std::uint32_t>();
  rec.top_degree = j.at("top_degree").get<std::uint32_t>();
  rec.checks = checks_from_json(j.at("checks"));
  return rec;
}

Json formulas_to_json(const FormulaReport& f) {
  Json j{{"top_degree_formula", f.top_degree_formula},
         {"top_degree_computed", f.top_degree_computed},
         {"top_degree_match", f.top_degree_match},
         {"witness_small_nonzero", f.witness_small_nonzero},
         {"witness_power_applicable", f.witness_power_applicable},
         {"witness_power_nonzero", f.witness_power_nonzero},
         {"steinberg_applicable", f.steinberg_applicable},
         {"steinberg_bound", f.steinberg_bound},
         {"steinberg_ok", f.steinberg_ok},
         {"dimension", f.dimension}};
  if (f.hsop) {
    j["hsop"] = Json{{"degrees", f.hsop->degrees},
                     {"top_degree_bound", f.hsop->top_degree_bound},
                     {"dimension_bound", f.hsop->dimension_bound},
                     {"top_within", f.hsop->top_within},
                     {"dim_within", f.hsop->dim_within},
                     {"top_attained", f.hsop->top_attained},
                     {"dim_attained", f.hsop->dim_attained}};
  } else {
    j["hsop"] = nullptr;
  }
  return j;
}

FormulaReport formulas_from_json(const Json& j) {
  FormulaReport f;
  f.top_degree_formula = j.at("top_degree_formula").get<std::uint32_t>();
  f.top_degree_computed = j.at("top_degree_computed").get<std::uint32_t>();
  f.top_degree_match = j.at("top_degree_match").get<bool>();
  f.witness_small_nonzero = j.at("witness_small_nonzero").get<bool>();
  f.witness_power_applicable = j.at("witness_power_applicable").get<bool>();
  f.witness_power_nonzero = j.at("witness_power_nonzero").get<bool>();
  f.steinberg_applicable = j.at("steinberg_applicable").get<bool>();
  f.steinberg_bound = j.at("steinberg_bound").get<std::uint32_t>();
  f.steinberg_ok = j.at("steinberg_ok").get<bool>();
  f.dimension = j.at("dimension").get<std::uint32_t>();
  if (!j.at("hsop").is_null()) {
    const Json& h = j.at("hsop");
    HsopReport hr;
    hr.degrees = u32_list(h.at("degrees"));
    hr.top_degree_bound = h.at("top_degree_bound").get<std::uint64_t>();
    hr.dimension_bound = h.at("dimension_bound").get<std::uint64_t>();
    hr.top_within = h.at("top_within").get<bool>();
    hr.dim_within = h.at("dim_within").get<bool>();
    hr.top_attained = h.at("top_attained").get<bool>();
    hr.dim_attained = h.at("dim_attained").get<bool>();
    f.hsop = std::move(hr);
  }
  return f;
}

}  // namespace

Json field_to_json(const BinaryFieldDescriptor& field) {
  return Json{{"p", field.p}, {"k", field.k}, {"modulus_poly", field.modulus_poly},
              {"zeta", field.zeta}};
}

BinaryFieldDescriptor field_from_json(const Json& j) {
  BinaryFieldDescriptor f;
  f.p = j.at("p").get<std::uint32_t>();
  f.k = j.at("k").get<std::uint32_t>();
  f.modulus_poly = j.at("modulus_poly").get<std::uint32_t>();
  f.zeta = j.at("zeta").get<std::uint32_t>();
  return f;
}

Json rep_to_json(const DihedralRep& rep) {
  return Json{{"p", rep.p()}, {"r", rep.r()}, {"s", rep.s()}, {"weights", rep.weights()}};
}

DihedralRep rep_from_json(const Json& j) {
  return DihedralRep(j.at("p").get<std::uint32_t>(), j.at("r").get<std::uint32_t>(),
                     j.at("s").get<std::uint32_t>(),
                     j.contains("weights") ? u32_list(j.at("weights"))
                                           : std::vector<std::uint32_t>{});
}

Json order_to_json(const MonomialOrder& order) {
  return Json{{"kind", order_kind_name(order.kind)},
              {"label", order.label},
              {"perm", order.perm},
              {"weights", order.weights}};
}

MonomialOrder order_from_json(const Json& j) {
  MonomialOrder order;
  order.kind = order_kind_from_name(j.at("kind").get<std::string>());
  order.label = j.value("label", std::string(order_kind_name(order.kind)));
  if (j.contains("perm")) order.perm = u32_list(j.at("perm"));
  if (j.contains("weights")) order.weights = u32_list(j.at("weights"));
  return order;
}

Json generator_set_to_json(const VarLayout& layout, const GeneratorSet& gens) {
  Json j = Json::array();
  for (const TaggedPoly& e : gens.elements) {
    j.push_back(Json{{"family", family_name(e.family)},
                     {"polynomial", render_poly(layout, e.poly)}});
  }
  return j;
}

GeneratorSet generator_set_from_json(const VarLayout& layout, const Json& j) {
  GeneratorSet gens;
  for (const Json& e : j) {
    gens.elements.push_back({family_from_name(e.at("family").get<std::string>()),
                             parse_poly(layout, e.at("polynomial").get<std::string>())});
  }
  return gens;
}

Json config_to_json(const RunConfig& config) {
  Json orders = Json::array();
  for (const MonomialOrder& order : config.orders) orders.push_back(order_to_json(order));
  return Json{{"rep", Json{{"p", config.p},
                           {"r", config.r},
                           {"s", config.s},
                           {"weights", config.weights}}},
              {"orders", std::move(orders)},
              {"sampled_orders", config.sampled_orders},
              {"seed", config.seed},
              {"hsop_degrees", config.hsop_degrees},
              {"max_basis", config.max_basis}};
}

RunConfig config_from_json(const Json& j) {
  RunConfig config;
  if (j.contains("rep")) {
    const Json& r = j.at("rep");
    config.p = r.at("p").get<std::uint32_t>();
    config.r = r.at("r").get<std::uint32_t>();
    config.s = r.at("s").get<std::uint32_t>();
    if (r.contains("weights")) config.weights = u32_list(r.at("weights"));
  }
  if (j.contains("orders")) {
    for (const Json& o : j.at("orders")) config.orders.push_back(order_from_json(o));
  }
  config.sampled_orders = j.value("sampled_orders", config.sampled_orders);
  config.seed = j.value("seed", config.seed);
  if (j.contains("hsop_degrees")) config.hsop_degrees = u32_list(j.at("hsop_degrees"));
  config.max_basis = j.value("max_basis", config.max_basis);
  return config;
}

Json report_to_json(const Report& report) {
  Json per_order = Json::array();
  for (const OrderRecord& rec : report.per_order) per_order.push_back(record_to_json(rec));
  return Json{
      {"config", config_to_json(report.config)},
      {"field", field_to_json(report.field)},
      {"generator_counts", Json{{"orbit_sum", report.counts.orbit_sum},
                                {"monomial_multiple", report.counts.monomial_multiple},
                                {"norm_pair", report.counts.norm_pair},
                                {"total", report.counts.total},
                                {"hilbert_generators", report.counts.hilbert_generators}}},
      {"per_order", std::move(per_order)},
      {"coinvariants", Json{{"dimension", report.dimension},
                            {"top_degree", report.top_degree},
                            {"lt_generators", report.lt_generators},
                            {"standard_monomials", report.standard_monomials}}},
      {"formulas", formulas_to_json(report.formulas)},
      {"pass", report.pass}};
}

Report report_from_json(const Json& j) {
  Report report;
  report.config = config_from_json(j.at("config"));
  report.field = field_from_json(j.at("field"));
  const Json& counts = j.at("generator_counts");
  report.counts.orbit_sum = counts.at("orbit_sum").get<std::uint32_t>();
  report.counts.monomial_multiple = counts.at("monomial_multiple").get<std::uint32_t>();
  report.counts.norm_pair = counts.at("norm_pair").get<std::uint32_t>();
  report.counts.total = counts.at("total").get<std::uint32_t>();
  report.counts.hilbert_generators = counts.at("hilbert_generators").get<std::uint32_t>();
  for (const Json& rec : j.at("per_order")) report.per_order.push_back(record_from_json(rec));
  const Json& coinv = j.at("coinvariants");
  report.dimension = coinv.at("dimension").get<std::uint32_t>();
  report.top_degree = coinv.at("top_degree").get<std::uint32_t>();
  report.lt_generators = coinv.at("lt_generators").get<std::vector<std::string>>();
  report.standard_monomials = coinv.at("standard_monomials").get<std::vector<std::string>>();
  report.formulas = formulas_from_json(j.at("formulas"));
  report.pass = j.at("pass").get<bool>();
  return report;
}

std::string dump_pretty(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace d2p
