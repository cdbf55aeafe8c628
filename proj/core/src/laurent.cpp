#include "coxa/laurent.hpp"

#include <cstdlib>

namespace coxa {

LaurentPoly LaurentPoly::constant(std::int64_t c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPoly::add_term(int exponent, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

std::int64_t LaurentPoly::coefficient(int exponent) const noexcept {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

std::optional<int> LaurentPoly::unit_power() const noexcept {
  if (coeffs_.size() != 1 || coeffs_.begin()->second != 1) return std::nullopt;
  return coeffs_.begin()->first;
}

std::optional<int> LaurentPoly::max_exponent() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

std::optional<int> LaurentPoly::min_exponent() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.begin()->first;
}

std::int64_t LaurentPoly::at_one() const noexcept {
  std::int64_t total = 0;
  for (const auto& [e, c] : coeffs_) total += c;
  return total;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    const std::int64_t mag = std::llabs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace coxa
