#include "d2p/rep.hpp"

#include <stdexcept>

namespace d2p {

DihedralRep::DihedralRep(std::uint32_t p, std::uint32_t r, std::uint32_t s,
                         std::vector<std::uint32_t> weights)
    : p_(p), layout_{r, s}, weights_(std::move(weights)) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("rep: p must be odd and >= 3");
  if (r == 0 && s == 0) throw std::invalid_argument("rep: need r + s >= 1");
  if (weights_.empty()) weights_.assign(r, 1);
  if (weights_.size() != r) {
    throw std::invalid_argument("rep: weights must have one entry per x/y pair");
  }
  for (auto& a : weights_) {
    a %= p;
    if (a == 0) throw std::invalid_argument("rep: weights must be nonzero mod p");
  }
}

bool DihedralRep::p_is_prime() const { return is_odd_prime(p_); }

Monomial sigma(const DihedralRep& rep, const Monomial& m) {
  if (m.nvars() != rep.nvars()) {
    throw std::invalid_argument("monomial does not match the representation");
  }
  const std::uint32_t r = rep.r();
  const std::uint32_t s = rep.s();
  Monomial out(m.nvars());
  for (std::uint32_t i = 0; i < r; ++i) {
    out.set_exp(i, m.exp(r + i));
    out.set_exp(r + i, m.exp(i));
  }
  const std::uint32_t zbase = 2 * r;
  for (std::uint32_t j = 0; j < s; ++j) {
    out.set_exp(zbase + j, m.exp(zbase + s + j));
    out.set_exp(zbase + s + j, m.exp(zbase + j));
  }
  return out;
}

ZmodP rho_weight(const DihedralRep& rep, const Monomial& m) {
  if (m.nvars() != rep.nvars()) {
    throw std::invalid_argument("monomial does not match the representation");
  }
  long long acc = 0;
  for (std::uint32_t i = 0; i < rep.r(); ++i) {
    acc += static_cast<long long>(rep.weights()[i]) *
           (static_cast<long long>(m.exp(i)) - m.exp(rep.r() + i));
  }
  return ZmodP(acc, rep.p());
}

bool is_rho_invariant(const DihedralRep& rep, const Monomial& m) {
  return rho_weight(rep, m).is_zero();
}

bool is_g_invariant(const DihedralRep& rep, const Monomial& m) {
  return is_rho_invariant(rep, m) && sigma(rep, m) == m;
}

Poly2 orbit_sum(const DihedralRep& rep, const Monomial& m) {
  if (!is_rho_invariant(rep, m)) {
    throw std::invalid_argument("orbit_sum: monomial is not rho-invariant");
  }
  Monomial sm = sigma(rep, m);
  if (sm == m) return Poly2(m);
  return Poly2(m) + Poly2(std::move(sm));
}

}  // namespace d2p
