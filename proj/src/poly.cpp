#include "d2p/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace d2p {

Poly2 Poly2::from_terms(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end());
  Poly2 out;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.terms_.push_back(std::move(terms[i]));
    i = j;
  }
  return out;
}

std::uint32_t Poly2::degree() const {
  std::uint32_t d = 0;
  for (const Monomial& m : terms_) d = std::max(d, m.degree());
  return d;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 out;
  out.terms_.reserve(terms_.size() + o.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                std::back_inserter(out.terms_));
  return out;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  *this = *this + o;
  return *this;
}

Poly2 Poly2::times(const Monomial& m) const {
  Poly2 out;
  out.terms_.reserve(terms_.size());
  for (const Monomial& t : terms_) out.terms_.push_back(t * m);
  // Multiplying every exponent vector by the same shift preserves the
  // container order, so the result is already sorted.
  return out;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 out;
  for (const Monomial& t : o.terms_) out += times(t);
  return out;
}

Monomial leading_monomial(const Poly2& f, const MonomialOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no leading monomial");
  const Monomial* best = &f.terms()[0];
  for (const Monomial& t : f.terms()) {
    if (order_less(order, *best, t)) best = &t;
  }
  return *best;
}

Poly2 s_polynomial(const Poly2& f, const Poly2& g, const MonomialOrder& order) {
  const Monomial lf = leading_monomial(f, order);
  const Monomial lg = leading_monomial(g, order);
  const Monomial l = Monomial::lcm(lf, lg);
  return f.times(l / lf) + g.times(l / lg);
}

namespace {

// Shared core of divide and normal_form; quotients tracked only when asked.
DivisionResult divide_impl(const Poly2& f, const std::vector<Poly2>& divisors,
                           const MonomialOrder& order, bool want_quotients) {
  std::vector<Monomial> leads;
  leads.reserve(divisors.size());
  for (const Poly2& g : divisors) {
    if (g.is_zero()) throw std::invalid_argument("division by a zero polynomial");
    leads.push_back(leading_monomial(g, order));
  }

  DivisionResult res;
  if (want_quotients) res.quotients.assign(divisors.size(), Poly2{});

  Poly2 work = f;
  std::vector<Monomial> remainder_terms;
  while (!work.is_zero()) {
    const Monomial m = leading_monomial(work, order);
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (leads[i].divides(m)) {
        const Monomial q = m / leads[i];
        work += divisors[i].times(q);
        if (want_quotients) res.quotients[i] += Poly2(q);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder_terms.push_back(m);
      work += Poly2(m);
    }
  }
  res.remainder = Poly2::from_terms(std::move(remainder_terms));
  return res;
}

}  // namespace

DivisionResult divide(const Poly2& f, const std::vector<Poly2>& divisors,
                      const MonomialOrder& order) {
  return divide_impl(f, divisors, order, true);
}

Poly2 normal_form(const Poly2& f, const std::vector<Poly2>& divisors,
                  const MonomialOrder& order) {
  return divide_impl(f, divisors, order, false).remainder;
}

std::string render_poly(const VarLayout& layout, const Poly2& f, const MonomialOrder& order) {
  if (f.is_zero()) return "0";
  std::vector<Monomial> sorted = f.terms();
  std::sort(sorted.begin(), sorted.end(),
            [&](const Monomial& a, const Monomial& b) { return order_less(order, b, a); });
  std::string out;
  for (const Monomial& m : sorted) {
    if (!out.empty()) out += " + ";
    out += render_monomial(layout, m);
  }
  return out;
}

std::string render_poly(const VarLayout& layout, const Poly2& f) {
  return render_poly(layout, f, grevlex_order());
}

Poly2 parse_poly(const VarLayout& layout, const std::string& text) {
  if (text == "0") return Poly2{};
  std::vector<Monomial> terms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t plus = text.find('+', pos);
    std::string piece =
        text.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    pos = plus == std::string::npos ? text.size() + 1 : plus + 1;

    // Trim surrounding whitespace.
    const std::size_t b = piece.find_first_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty term in polynomial text");
    const std::size_t e = piece.find_last_not_of(" \t");
    terms.push_back(parse_monomial(layout, piece.substr(b, e - b + 1)));
  }
  return Poly2::from_terms(std::move(terms));
}

}  // namespace d2p
