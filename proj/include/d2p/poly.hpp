#pragma once

#include <string>
#include <vector>

#include "d2p/order.hpp"

namespace d2p {

// Polynomial over GF(2): the set of monomials with coefficient 1, stored as
// a sorted vector in the container order. Addition is symmetric difference,
// so f + f = 0 without any coefficient bookkeeping.
class Poly2 {
 public:
  Poly2() = default;  // zero
  explicit Poly2(Monomial m) : terms_{std::move(m)} {}

  // Sum of the given monomials; duplicates cancel in pairs.
  static Poly2 from_terms(std::vector<Monomial> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Monomial>& terms() const { return terms_; }

  // Max term degree; 0 for the zero polynomial.
  std::uint32_t degree() const;

  Poly2 operator+(const Poly2& o) const;
  Poly2& operator+=(const Poly2& o);
  Poly2 times(const Monomial& m) const;
  Poly2 operator*(const Poly2& o) const;

  bool operator==(const Poly2&) const = default;
  auto operator<=>(const Poly2&) const = default;

 private:
  std::vector<Monomial> terms_;
};

// Order-largest term. Throws on the zero polynomial.
Monomial leading_monomial(const Poly2& f, const MonomialOrder& order);

// S-polynomial (lcm/LM(f))*f + (lcm/LM(g))*g; over GF(2) the leading terms
// cancel with no coefficient adjustment.
Poly2 s_polynomial(const Poly2& f, const Poly2& g, const MonomialOrder& order);

struct DivisionResult {
  std::vector<Poly2> quotients;  // aligned with the divisor list
  Poly2 remainder;
};

// Multivariate division: f = sum quotients[i]*divisors[i] + remainder, with
// no remainder term divisible by any divisor's lead. Deterministic: the
// order-largest term is handled first, reduced by the first divisor in list
// order whose lead divides it. Divisors must be nonzero.
DivisionResult divide(const Poly2& f, const std::vector<Poly2>& divisors,
                      const MonomialOrder& order);

// Remainder only; cheaper than divide when the quotients are not needed.
Poly2 normal_form(const Poly2& f, const std::vector<Poly2>& divisors,
                  const MonomialOrder& order);

// Text form: " + "-joined monomials, descending under the given order; "0"
// for the zero polynomial. The overload without an order uses grevlex.
// parse_poly accepts terms in any order; duplicate terms cancel in pairs.
std::string render_poly(const VarLayout& layout, const Poly2& f, const MonomialOrder& order);
std::string render_poly(const VarLayout& layout, const Poly2& f);
Poly2 parse_poly(const VarLayout& layout, const std::string& text);

}  // namespace d2p
