#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "d2p/coinv.hpp"
#include "d2p/polyk.hpp"

namespace d2p {

// One verification run: a representation, a set of monomial orders (explicit
// or sampled), optional hsop degrees to bound against, and a Buchberger cap.
struct RunConfig {
  std::uint32_t p = 3;
  std::uint32_t r = 1;
  std::uint32_t s = 0;
  std::vector<std::uint32_t> weights;  // empty = all ones

  std::vector<MonomialOrder> orders;  // empty = sample
  std::uint32_t sampled_orders = 12;
  std::uint64_t seed = 0;

  std::vector<std::uint32_t> hsop_degrees;  // empty = no hsop comparison
  std::size_t max_basis = 20000;

  bool operator==(const RunConfig&) const = default;
};

DihedralRep rep_from_config(const RunConfig& config);
std::vector<MonomialOrder> orders_for_config(const RunConfig& config, const VarLayout& layout);

struct OrderChecks {
  bool buchberger_ok = false;   // every S-pair of the universal basis reduces to zero
  bool ideal_equal = false;     // reduced bases from the universal basis and from the
                                // Hilbert-ideal generators coincide
  bool steinberg_ok = false;    // dimension >= 2p (vacuous when r = 0)
  bool top_degree_ok = false;   // computed top degree matches the closed form
  bool degree_bound_ok = false; // every universal-basis element has degree <= p+1

  bool all() const {
    return buchberger_ok && ideal_equal && steinberg_ok && top_degree_ok && degree_bound_ok;
  }
  bool operator==(const OrderChecks&) const = default;
};

struct OrderRecord {
  MonomialOrder order;
  std::uint32_t gb_size = 0;  // reduced basis size under this order
  std::vector<std::string> lt_generators;
  std::uint32_t dimension = 0;
  std::uint32_t top_degree = 0;
  OrderChecks checks;

  bool operator==(const OrderRecord&) const = default;
};

struct HsopReport {
  std::vector<std::uint32_t> degrees;
  std::uint64_t top_degree_bound = 0;
  std::uint64_t dimension_bound = 0;
  bool top_within = false;
  bool dim_within = false;
  bool top_attained = false;
  bool dim_attained = false;

  bool operator==(const HsopReport&) const = default;
};

struct FormulaReport {
  std::uint32_t top_degree_formula = 0;
  std::uint32_t top_degree_computed = 0;
  bool top_degree_match = false;

  // Normal forms of the witness monomials y_1..y_r w_1..w_s and
  // y_1^p w_1..w_s against the universal basis; nonzero means they realize
  // the claimed top degree (the power witness needs r >= 1).
  bool witness_small_nonzero = false;
  bool witness_power_applicable = false;
  bool witness_power_nonzero = false;

  bool steinberg_applicable = false;
  std::uint32_t steinberg_bound = 0;
  bool steinberg_ok = false;

  std::uint32_t dimension = 0;
  std::optional<HsopReport> hsop;

  bool operator==(const FormulaReport&) const = default;
};

struct GeneratorCounts {
  std::uint32_t orbit_sum = 0;
  std::uint32_t monomial_multiple = 0;
  std::uint32_t norm_pair = 0;
  std::uint32_t total = 0;
  std::uint32_t hilbert_generators = 0;

  bool operator==(const GeneratorCounts&) const = default;
};

struct Report {
  RunConfig config;
  BinaryFieldDescriptor field;
  GeneratorCounts counts;
  std::vector<OrderRecord> per_order;

  // Coinvariant data under plain grevlex, independent of the sampled orders.
  std::uint32_t dimension = 0;
  std::uint32_t top_degree = 0;
  std::vector<std::string> lt_generators;
  std::vector<std::string> standard_monomials;

  FormulaReport formulas;
  bool pass = false;

  bool operator==(const Report&) const = default;
};

// The full cross-check: builds the universal basis and the Hilbert-ideal
// generators, then per order runs the generic Buchberger oracle and compares
// reduced bases, dimensions, and degree data against the closed forms.
Report run_verify(const RunConfig& config);

}  // namespace d2p
