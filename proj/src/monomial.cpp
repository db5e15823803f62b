#include "d2p/monomial.hpp"

#include <stdexcept>

namespace d2p {

namespace {

[[noreturn]] void bad_variable(const std::string& name) {
  throw std::invalid_argument("unknown variable '" + name + "'");
}

void check_same_vars(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("monomials live in different polynomial rings");
  }
}

}  // namespace

std::string VarLayout::name(std::size_t index) const {
  if (is_x(index)) return "x" + std::to_string(index + 1);
  if (is_y(index)) return "y" + std::to_string(index - r + 1);
  if (is_z(index)) return "z" + std::to_string(index - 2 * static_cast<std::size_t>(r) + 1);
  if (is_w(index)) return "w" + std::to_string(index - 2 * static_cast<std::size_t>(r) - s + 1);
  throw std::out_of_range("variable index out of range");
}

std::size_t VarLayout::index_of(const std::string& name) const {
  if (name.size() < 2) bad_variable(name);
  const char letter = name[0];
  std::size_t num = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') bad_variable(name);
    num = num * 10 + static_cast<std::size_t>(name[i] - '0');
    if (num > 1000000) bad_variable(name);
  }
  if (num == 0 || (name[1] == '0')) bad_variable(name);

  switch (letter) {
    case 'x':
      if (num > r) bad_variable(name);
      return num - 1;
    case 'y':
      if (num > r) bad_variable(name);
      return r + num - 1;
    case 'z':
      if (num > s) bad_variable(name);
      return 2 * static_cast<std::size_t>(r) + num - 1;
    case 'w':
      if (num > s) bad_variable(name);
      return 2 * static_cast<std::size_t>(r) + s + num - 1;
    default:
      bad_variable(name);
  }
}

void Monomial::set_exp(std::size_t i, std::uint32_t e) {
  if (e > 0xffff) throw std::overflow_error("monomial exponent exceeds 16 bits");
  exps_.at(i) = static_cast<std::uint16_t>(e);
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (std::uint16_t e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  for (std::uint16_t e : exps_) {
    if (e != 0) return false;
  }
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  check_same_vars(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime_with(const Monomial& other) const {
  check_same_vars(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_same_vars(*this, other);
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    out.set_exp(i, static_cast<std::uint32_t>(exps_[i]) + other.exps_[i]);
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  check_same_vars(*this, other);
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (other.exps_[i] > exps_[i]) throw std::invalid_argument("monomial division is not exact");
    out.exps_[i] = static_cast<std::uint16_t>(exps_[i] - other.exps_[i]);
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  check_same_vars(a, b);
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  }
  return out;
}

Monomial parse_monomial(const VarLayout& layout, const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty monomial text");
  if (text == "1") return Monomial::one(layout.nvars());

  Monomial out(layout.nvars());
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t star = text.find('*', pos);
    const std::string factor =
        text.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    pos = star == std::string::npos ? text.size() : star + 1;

    if (factor.empty()) throw std::invalid_argument("empty factor in monomial text");
    const std::size_t caret = factor.find('^');
    const std::string var = factor.substr(0, caret);
    std::uint32_t e = 1;
    if (caret != std::string::npos) {
      const std::string etext = factor.substr(caret + 1);
      if (etext.empty()) throw std::invalid_argument("missing exponent after '^'");
      e = 0;
      for (char c : etext) {
        if (c < '0' || c > '9') throw std::invalid_argument("malformed exponent '" + etext + "'");
        e = e * 10 + static_cast<std::uint32_t>(c - '0');
        if (e > 0xffff) throw std::overflow_error("monomial exponent exceeds 16 bits");
      }
      if (e == 0) throw std::invalid_argument("exponent must be positive");
    }
    const std::size_t idx = layout.index_of(var);
    out.set_exp(idx, out.exp(idx) + e);
  }
  return out;
}

std::string render_monomial(const VarLayout& layout, const Monomial& m) {
  if (m.nvars() != layout.nvars()) {
    throw std::invalid_argument("monomial does not match the variable layout");
  }
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m.exp(i) == 0) continue;
    if (!out.empty()) out += '*';
    out += layout.name(i);
    if (m.exp(i) > 1) {
      out += '^';
      out += std::to_string(m.exp(i));
    }
  }
  return out.empty() ? "1" : out;
}

}  // namespace d2p
