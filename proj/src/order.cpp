#include "d2p/order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "d2p/rng.hpp"

namespace d2p {

namespace {

Ordering from_cmp(int c) {
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

// Exponent of a at permuted position i.
std::uint16_t at(const Monomial& a, const std::vector<std::uint32_t>& perm, std::size_t i) {
  return perm.empty() ? a.exp(i) : a.exp(perm[i]);
}

int lex_cmp(const Monomial& a, const Monomial& b, const std::vector<std::uint32_t>& perm) {
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    const std::uint16_t ea = at(a, perm, i);
    const std::uint16_t eb = at(b, perm, i);
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

// Graded reverse lex on the permuted exponents: higher total degree wins;
// within a degree the monomial with the smaller exponent at the rightmost
// differing position wins.
int grevlex_cmp(const Monomial& a, const Monomial& b, const std::vector<std::uint32_t>& perm) {
  const std::uint32_t da = a.degree();
  const std::uint32_t db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    const std::uint16_t ea = at(a, perm, i);
    const std::uint16_t eb = at(b, perm, i);
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

}  // namespace

MonomialOrder lex_order() { return {MonomialOrder::Kind::Lex, {}, {}, "lex"}; }
MonomialOrder grlex_order() { return {MonomialOrder::Kind::GrLex, {}, {}, "grlex"}; }
MonomialOrder grevlex_order() { return {MonomialOrder::Kind::GrevLex, {}, {}, "grevlex"}; }

MonomialOrder weighted_order(std::vector<std::uint32_t> weights) {
  return {MonomialOrder::Kind::Weighted, {}, std::move(weights), "weighted"};
}

MonomialOrder permuted(MonomialOrder order, std::vector<std::uint32_t> perm) {
  order.perm = std::move(perm);
  return order;
}

MonomialOrder swapped_lex_order(const VarLayout& layout) {
  std::vector<std::uint32_t> perm(layout.nvars());
  for (std::uint32_t i = 0; i < layout.r; ++i) {
    perm[i] = layout.r + i;  // y_i first
    perm[layout.r + i] = i;
  }
  const std::uint32_t zbase = 2 * layout.r;
  for (std::uint32_t j = 0; j < layout.s; ++j) {
    perm[zbase + j] = zbase + layout.s + j;  // w_j first
    perm[zbase + layout.s + j] = zbase + j;
  }
  MonomialOrder order = permuted(lex_order(), std::move(perm));
  order.label = "lex-swapped";
  return order;
}

void validate_order(const MonomialOrder& order, std::size_t nvars) {
  if (!order.perm.empty()) {
    if (order.perm.size() != nvars) {
      throw std::invalid_argument("order permutation has the wrong length");
    }
    std::vector<bool> seen(nvars, false);
    for (std::uint32_t v : order.perm) {
      if (v >= nvars || seen[v]) {
        throw std::invalid_argument("order permutation is not a permutation");
      }
      seen[v] = true;
    }
  }
  if (order.kind == MonomialOrder::Kind::Weighted) {
    if (order.weights.size() != nvars) {
      throw std::invalid_argument("weighted order needs one weight per variable");
    }
    for (std::uint32_t w : order.weights) {
      if (w == 0) throw std::invalid_argument("order weights must be positive");
    }
  } else if (!order.weights.empty()) {
    throw std::invalid_argument("weights are only meaningful for weighted orders");
  }
}

Ordering compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("monomials live in different polynomial rings");
  }
  if (!order.perm.empty() && order.perm.size() != a.nvars()) {
    throw std::invalid_argument("order permutation does not match the ring");
  }

  switch (order.kind) {
    case MonomialOrder::Kind::Lex:
      return from_cmp(lex_cmp(a, b, order.perm));
    case MonomialOrder::Kind::GrLex: {
      const std::uint32_t da = a.degree();
      const std::uint32_t db = b.degree();
      if (da != db) return da < db ? Ordering::Less : Ordering::Greater;
      return from_cmp(lex_cmp(a, b, order.perm));
    }
    case MonomialOrder::Kind::GrevLex:
      return from_cmp(grevlex_cmp(a, b, order.perm));
    case MonomialOrder::Kind::Weighted: {
      if (order.weights.size() != a.nvars()) {
        throw std::invalid_argument("order weights do not match the ring");
      }
      std::uint64_t wa = 0;
      std::uint64_t wb = 0;
      for (std::size_t i = 0; i < a.nvars(); ++i) {
        wa += static_cast<std::uint64_t>(order.weights[i]) * a.exp(i);
        wb += static_cast<std::uint64_t>(order.weights[i]) * b.exp(i);
      }
      if (wa != wb) return wa < wb ? Ordering::Less : Ordering::Greater;
      return from_cmp(lex_cmp(a, b, order.perm));
    }
  }
  throw std::logic_error("unreachable");
}

bool order_less(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  return compare(order, a, b) == Ordering::Less;
}

std::vector<MonomialOrder> sample_orders(const VarLayout& layout, std::size_t count,
                                         std::uint64_t seed) {
  if (count < 4) throw std::invalid_argument("sample_orders: need count >= 4");

  std::vector<MonomialOrder> out;
  out.reserve(count);
  out.push_back(lex_order());
  out.push_back(grlex_order());
  out.push_back(grevlex_order());
  out.push_back(swapped_lex_order(layout));

  SplitMix64 rng(seed);
  for (std::size_t i = 4; i < count; ++i) {
    std::vector<std::uint32_t> weights(layout.nvars());
    for (auto& w : weights) w = static_cast<std::uint32_t>(rng.below(1000)) + 1;
    MonomialOrder order = weighted_order(std::move(weights));
    order.label = "weighted-" + std::to_string(i - 3);
    out.push_back(std::move(order));
  }
  return out;
}

const char* order_kind_name(MonomialOrder::Kind kind) {
  switch (kind) {
    case MonomialOrder::Kind::Lex: return "lex";
    case MonomialOrder::Kind::GrLex: return "grlex";
    case MonomialOrder::Kind::GrevLex: return "grevlex";
    case MonomialOrder::Kind::Weighted: return "weighted";
  }
  throw std::logic_error("unreachable");
}

MonomialOrder::Kind order_kind_from_name(const std::string& name) {
  if (name == "lex") return MonomialOrder::Kind::Lex;
  if (name == "grlex") return MonomialOrder::Kind::GrLex;
  if (name == "grevlex") return MonomialOrder::Kind::GrevLex;
  if (name == "weighted") return MonomialOrder::Kind::Weighted;
  throw std::invalid_argument("unknown order kind '" + name + "'");
}

}  // namespace d2p
