#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "d2p/monomial.hpp"

namespace d2p {

enum class Ordering { Less, Equal, Greater };

// Total multiplicative well-order on monomials: one of lex, graded lex,
// graded reverse lex, or weighted-degree (ties by lex), each applied after
// permuting the variables. perm[i] names the original variable read at
// permuted position i, with position 0 the most significant; identity when
// empty. weights (Weighted only) are positive and indexed by the original
// variable.
struct MonomialOrder {
  enum class Kind { Lex, GrLex, GrevLex, Weighted };

  Kind kind = Kind::GrevLex;
  std::vector<std::uint32_t> perm;
  std::vector<std::uint32_t> weights;
  std::string label;

  bool operator==(const MonomialOrder&) const = default;
};

MonomialOrder lex_order();
MonomialOrder grlex_order();
MonomialOrder grevlex_order();
MonomialOrder weighted_order(std::vector<std::uint32_t> weights);
MonomialOrder permuted(MonomialOrder order, std::vector<std::uint32_t> perm);

// Lex preceded by the swap x_i <-> y_i, z_j <-> w_j, so each y ranks above
// its x and each w above its z.
MonomialOrder swapped_lex_order(const VarLayout& layout);

// Throws unless the order is usable on nvars variables: perm empty or a
// permutation of 0..nvars-1, weights empty unless Weighted, and Weighted
// weights positive of length nvars.
void validate_order(const MonomialOrder& order, std::size_t nvars);

Ordering compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);
bool order_less(const MonomialOrder& order, const Monomial& a, const Monomial& b);

// Deterministic order sample: lex, grlex, grevlex, swapped lex, then
// count - 4 seeded weighted orders (weights uniform in 1..1000). Requires
// count >= 4. Same (layout, count, seed) gives the same list.
std::vector<MonomialOrder> sample_orders(const VarLayout& layout, std::size_t count,
                                         std::uint64_t seed);

const char* order_kind_name(MonomialOrder::Kind kind);
MonomialOrder::Kind order_kind_from_name(const std::string& name);

}  // namespace d2p
