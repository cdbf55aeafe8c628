#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace coxa {

/// Integer Laurent polynomial in q with sparse support. Zero coefficients are
/// never stored, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(std::int64_t c);
  /// c * q^e
  static LaurentPoly monomial(int exponent, std::int64_t c = 1);
  static LaurentPoly q() { return monomial(1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::map<int, std::int64_t>& coefficients() const noexcept { return coeffs_; }
  std::int64_t coefficient(int exponent) const noexcept;

  /// The exponent e when this is exactly q^e (coefficient +1).
  std::optional<int> unit_power() const noexcept;
  std::optional<int> max_exponent() const noexcept;
  std::optional<int> min_exponent() const noexcept;

  /// Value at q = 1.
  std::int64_t at_one() const noexcept;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Ascending exponents, e.g. `q^-1 - 1`, `q + 2q^3`, `0`.
  std::string to_string() const;

 private:
  void add_term(int exponent, std::int64_t c);
  std::map<int, std::int64_t> coeffs_;
};

}  // namespace coxa
