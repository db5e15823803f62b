#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "d2p/json_io.hpp"

namespace py = pybind11;
using namespace d2p;

namespace {

MonomialOrder order_by_name(const VarLayout& layout, const std::string& name) {
  if (name == "lex") return lex_order();
  if (name == "grlex") return grlex_order();
  if (name == "grevlex") return grevlex_order();
  if (name == "lex-swapped") return swapped_lex_order(layout);
  throw std::invalid_argument("unknown order '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hilbert ideals of dihedral groups in characteristic two";

  py::register_exception<ResourceCapError>(m, "ResourceCapError", PyExc_RuntimeError);

  py::class_<VarLayout>(m, "VarLayout")
      .def(py::init<std::uint32_t, std::uint32_t>(), py::arg("r"), py::arg("s"))
      .def_readonly("r", &VarLayout::r)
      .def_readonly("s", &VarLayout::s)
      .def("nvars", &VarLayout::nvars)
      .def("name", &VarLayout::name, py::arg("index"))
      .def("index_of", &VarLayout::index_of, py::arg("name"))
      .def(py::self == py::self);

  py::class_<Monomial>(m, "Monomial")
      .def(py::init([](const std::vector<std::uint16_t>& exps) { return Monomial(exps); }),
           py::arg("exponents"))
      .def("exponents", &Monomial::exponents)
      .def("degree", &Monomial::degree)
      .def("is_one", &Monomial::is_one)
      .def("divides", &Monomial::divides, py::arg("other"))
      .def(py::self == py::self)
      .def(py::self * py::self)
      .def("__truediv__",
           [](const Monomial& a, const Monomial& b) { return a / b; })
      .def("__repr__", [](const Monomial& m) {
        std::string out = "Monomial([";
        for (std::size_t i = 0; i < m.nvars(); ++i) {
          if (i) out += ", ";
          out += std::to_string(m.exp(i));
        }
        return out + "])";
      });

  py::class_<MonomialOrder>(m, "MonomialOrder")
      .def_readonly("label", &MonomialOrder::label)
      .def_readonly("perm", &MonomialOrder::perm)
      .def_readonly("weights", &MonomialOrder::weights)
      .def(py::self == py::self)
      .def("__repr__",
           [](const MonomialOrder& o) { return "MonomialOrder(" + o.label + ")"; });

  py::class_<Poly2>(m, "Poly2")
      .def(py::init<>())
      .def(py::init<Monomial>(), py::arg("monomial"))
      .def_static("from_terms", &Poly2::from_terms, py::arg("terms"))
      .def("is_zero", &Poly2::is_zero)
      .def("term_count", &Poly2::term_count)
      .def("terms", &Poly2::terms)
      .def("degree", &Poly2::degree)
      .def(py::self + py::self)
      .def(py::self * py::self)
      .def("times", &Poly2::times, py::arg("monomial"))
      .def(py::self == py::self)
      .def("__repr__",
           [](const Poly2& f) { return "Poly2(" + std::to_string(f.term_count()) + " terms)"; });

  py::class_<DihedralRep>(m, "DihedralRep")
      .def(py::init<std::uint32_t, std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>(),
           py::arg("p"), py::arg("r"), py::arg("s"),
           py::arg("weights") = std::vector<std::uint32_t>{})
      .def_property_readonly("p", &DihedralRep::p)
      .def_property_readonly("r", &DihedralRep::r)
      .def_property_readonly("s", &DihedralRep::s)
      .def_property_readonly("weights", &DihedralRep::weights)
      .def("layout", &DihedralRep::layout)
      .def("nvars", &DihedralRep::nvars)
      .def("p_is_prime", &DihedralRep::p_is_prime)
      .def("faithful", &DihedralRep::faithful);

  py::class_<BinaryFieldDescriptor>(m, "BinaryFieldDescriptor")
      .def_readonly("p", &BinaryFieldDescriptor::p)
      .def_readonly("k", &BinaryFieldDescriptor::k)
      .def_readonly("modulus_poly", &BinaryFieldDescriptor::modulus_poly)
      .def_readonly("zeta", &BinaryFieldDescriptor::zeta)
      .def(py::self == py::self)
      .def("__repr__", [](const BinaryFieldDescriptor& f) {
        return "BinaryFieldDescriptor(p=" + std::to_string(f.p) + ", k=" + std::to_string(f.k) +
               ", modulus_poly=" + std::to_string(f.modulus_poly) +
               ", zeta=" + std::to_string(f.zeta) + ")";
      });

  py::class_<GeneratorSet>(m, "GeneratorSet")
      .def("polys", &GeneratorSet::polys)
      .def("elements",
           [](const GeneratorSet& g) {
             std::vector<std::pair<std::string, Poly2>> out;
             for (const TaggedPoly& e : g.elements) {
               out.emplace_back(family_name(e.family), e.poly);
             }
             return out;
           })
      .def("__len__", [](const GeneratorSet& g) { return g.elements.size(); });

  py::class_<CoinvariantStats>(m, "CoinvariantStats")
      .def_readonly("dimension", &CoinvariantStats::dimension)
      .def_readonly("top_degree", &CoinvariantStats::top_degree)
      .def_readonly("lt_generators", &CoinvariantStats::lt_generators)
      .def_readonly("standard_monomials", &CoinvariantStats::standard_monomials);

  m.def("build_field", &build_field, py::arg("p"));
  m.def("multiplicative_order_of_two", &multiplicative_order_of_two, py::arg("p"));
  m.def("gf_add", &gf_add, py::arg("a"), py::arg("b"));
  m.def("gf_mul", &gf_mul, py::arg("field"), py::arg("a"), py::arg("b"));
  m.def("gf_pow", &gf_pow, py::arg("field"), py::arg("a"), py::arg("n"));

  m.def("parse_monomial", &parse_monomial, py::arg("layout"), py::arg("text"));
  m.def("render_monomial", &render_monomial, py::arg("layout"), py::arg("monomial"));
  m.def("parse_poly", &parse_poly, py::arg("layout"), py::arg("text"));
  m.def(
      "render_poly",
      [](const VarLayout& layout, const Poly2& f, const std::string& order) {
        return render_poly(layout, f, order_by_name(layout, order));
      },
      py::arg("layout"), py::arg("poly"), py::arg("order") = "grevlex");

  m.def(
      "order",
      [](const VarLayout& layout, const std::string& name) {
        return order_by_name(layout, name);
      },
      py::arg("layout"), py::arg("name"));
  m.def(
      "weighted",
      [](std::vector<std::uint32_t> weights) { return weighted_order(std::move(weights)); },
      py::arg("weights"));
  m.def("sample_orders", &sample_orders, py::arg("layout"), py::arg("count"), py::arg("seed"));
  m.def(
      "compare",
      [](const MonomialOrder& order, const Monomial& a, const Monomial& b) {
        const Ordering c = compare(order, a, b);
        return c == Ordering::Less ? -1 : (c == Ordering::Greater ? 1 : 0);
      },
      py::arg("order"), py::arg("a"), py::arg("b"));

  m.def("leading_monomial", &leading_monomial, py::arg("poly"), py::arg("order"));
  m.def("s_polynomial", &s_polynomial, py::arg("f"), py::arg("g"), py::arg("order"));
  m.def("normal_form", &normal_form, py::arg("f"), py::arg("divisors"), py::arg("order"));

  m.def("sigma", &sigma, py::arg("rep"), py::arg("monomial"));
  m.def(
      "rho_weight",
      [](const DihedralRep& rep, const Monomial& m) { return rho_weight(rep, m).value(); },
      py::arg("rep"), py::arg("monomial"));
  m.def("is_rho_invariant", &is_rho_invariant, py::arg("rep"), py::arg("monomial"));
  m.def("is_g_invariant", &is_g_invariant, py::arg("rep"), py::arg("monomial"));
  m.def("orbit_sum", &orbit_sum, py::arg("rep"), py::arg("monomial"));
  m.def(
      "is_invariant_poly",
      [](const DihedralRep& rep, const BinaryFieldDescriptor& field, const Poly2& f) {
        return is_invariant_poly(rep, field, PolyK::from_poly2(f));
      },
      py::arg("rep"), py::arg("field"), py::arg("poly"));

  m.def(
      "schmid_zero_sum",
      [](const std::vector<std::uint32_t>& values, std::uint32_t p) {
        const ZeroSumWitness w = schmid_zero_sum(make_residues(values, p));
        return py::make_tuple(w.k1, w.k2, w.subset);
      },
      py::arg("values"), py::arg("p"));
  m.def(
      "zerosum_completion",
      [](const std::vector<std::uint32_t>& values, std::uint32_t p, std::size_t k1,
         std::size_t k2) { return zerosum_completion(make_residues(values, p), k1, k2); },
      py::arg("values"), py::arg("p"), py::arg("k1"), py::arg("k2"));

  m.def("enumerate_rho_invariant_monomials", &enumerate_rho_invariant_monomials, py::arg("rep"),
        py::arg("dmax"));
  m.def("hilbert_ideal_generators", &hilbert_ideal_generators, py::arg("rep"));
  m.def("universal_basis", &universal_basis, py::arg("rep"));
  m.def("prune_redundant", &prune_redundant, py::arg("generators"));
  m.def("monomial_decompose", &monomial_decompose, py::arg("rep"), py::arg("monomial"));
  m.def("reduce_multiple_to_small", &reduce_multiple_to_small, py::arg("rep"),
        py::arg("var_index"), py::arg("monomial"));

  m.def(
      "buchberger",
      [](const std::vector<Poly2>& gens, const MonomialOrder& order, std::size_t max_basis) {
        return buchberger(gens, order, BuchbergerOptions{max_basis}).elements;
      },
      py::arg("gens"), py::arg("order"), py::arg("max_basis") = 20000);
  m.def("reduce_basis", &reduce_basis, py::arg("basis"), py::arg("order"));
  m.def(
      "reduced_groebner_basis",
      [](const std::vector<Poly2>& gens, const MonomialOrder& order, std::size_t max_basis) {
        return reduced_groebner_basis(gens, order, BuchbergerOptions{max_basis}).elements;
      },
      py::arg("gens"), py::arg("order"), py::arg("max_basis") = 20000);
  m.def(
      "is_groebner_basis",
      [](const std::vector<Poly2>& basis, const MonomialOrder& order) {
        const GroebnerCheck check = is_groebner_basis(basis, order);
        std::vector<std::tuple<std::size_t, std::size_t, Poly2>> failures;
        for (const SPairFailure& f : check.failures) {
          failures.emplace_back(f.i, f.j, f.remainder);
        }
        return py::make_tuple(check.ok, failures);
      },
      py::arg("basis"), py::arg("order"));
  m.def("lead_term_ideal", &lead_term_ideal, py::arg("basis"), py::arg("order"));
  m.def("standard_monomials", &standard_monomials, py::arg("lt_generators"), py::arg("nvars"));

  m.def("coinvariant_stats", &coinvariant_stats, py::arg("rep"), py::arg("order"));
  m.def("top_degree_formula", &top_degree_formula, py::arg("rep"));
  m.def(
      "hsop_bounds",
      [](const std::vector<std::uint32_t>& degrees) {
        const HsopBounds b = hsop_bounds(degrees);
        return py::make_tuple(b.top_degree_bound, b.dimension_bound);
      },
      py::arg("degrees"));
  m.def("hilbert_series_product", &hilbert_series_product, py::arg("degrees"));

  m.def(
      "run_verify",
      [](const std::string& config_json) {
        const RunConfig config = config_from_json(Json::parse(config_json));
        return dump_pretty(report_to_json(run_verify(config)));
      },
      py::arg("config_json"),
      "Run the full cross-check; takes and returns JSON strings.");
}
