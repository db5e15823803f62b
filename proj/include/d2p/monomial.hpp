#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace d2p {

// Variable layout of F[x_1..x_r, y_1..y_r, z_1..z_s, w_1..w_s].
// Flat index convention: 0..r-1 are x, r..2r-1 are y, 2r..2r+s-1 are z,
// 2r+s..2r+2s-1 are w.
struct VarLayout {
  std::uint32_t r = 0;
  std::uint32_t s = 0;

  std::size_t nvars() const { return 2 * (static_cast<std::size_t>(r) + s); }
  std::string name(std::size_t index) const;
  std::size_t index_of(const std::string& name) const;

  bool is_x(std::size_t i) const { return i < r; }
  bool is_y(std::size_t i) const { return i >= r && i < 2 * static_cast<std::size_t>(r); }
  bool is_z(std::size_t i) const {
    return i >= 2 * static_cast<std::size_t>(r) && i < 2 * static_cast<std::size_t>(r) + s;
  }
  bool is_w(std::size_t i) const {
    return i >= 2 * static_cast<std::size_t>(r) + s && i < nvars();
  }

  bool operator==(const VarLayout&) const = default;
};

// Monomial as an exponent vector; coefficients live elsewhere. The built-in
// comparison is the container order (plain lexicographic on exponents), not
// a monomial order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> exps) : exps_(std::move(exps)) {}

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }

  std::size_t nvars() const { return exps_.size(); }
  std::uint16_t exp(std::size_t i) const { return exps_.at(i); }
  void set_exp(std::size_t i, std::uint32_t e);
  const std::vector<std::uint16_t>& exponents() const { return exps_; }

  std::uint32_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime_with(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;  // throws unless other | this
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::uint16_t> exps_;
};

// Text form: '*'-joined factors "name" or "name^e" with e >= 2; "1" for the
// constant monomial. parse_monomial also accepts unsorted and repeated
// factors and explicit "^1".
Monomial parse_monomial(const VarLayout& layout, const std::string& text);
std::string render_monomial(const VarLayout& layout, const Monomial& m);

}  // namespace d2p
