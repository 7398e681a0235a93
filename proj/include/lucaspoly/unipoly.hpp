#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lucaspoly/integer.hpp"

namespace lucaspoly {

/// Dense univariate polynomial over the integers. Coefficient i multiplies
/// x^i; trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients. Used both for D_n(x) and as the coefficient ring Z[t] when a
/// BiPoly is viewed as a polynomial in s.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(long c);  // NOLINT(google-explicit-constructor)
  UniPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<Integer> coeffs);

  static UniPoly x();
  static UniPoly monomial(std::size_t degree, const Integer& c);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i, zero beyond the degree.
  Integer coeff(std::size_t i) const;
  const Integer& lead() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const Integer& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Integer& c) { return a *= c; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  Integer eval(const Integer& x0) const;
  /// Multiply by x^k.
  UniPoly shifted(std::size_t k) const;

  /// gcd of the coefficients, sign following the leading coefficient; zero
  /// for the zero polynomial.
  Integer content() const;
  UniPoly primitive_part() const;

  bool is_palindrome() const;
  bool has_nonnegative_coefficients() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

UniPoly pow(const UniPoly& base, unsigned exponent);

/// Quotient when b divides a in Z[x], nullopt otherwise. Throws InputError
/// when b is zero.
std::optional<UniPoly> exact_div(const UniPoly& a, const UniPoly& b);

/// Divide every coefficient by c; nullopt unless all divide exactly.
std::optional<UniPoly> exact_div(const UniPoly& a, const Integer& c);

/// lc(b)^(deg a - deg b + 1) * a mod b.
UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b);

/// gcd in Z[x] via primitive remainder sequences, leading coefficient
/// positive. gcd(0, 0) throws InputError.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Canonical text, highest degree first, e.g. "x^3 + 5*x^2 + 5*x + 1".
std::string serialize(const UniPoly& p, char variable = 'x');
UniPoly parse_unipoly(std::string_view text, char variable = 'x');

/// (exponent, coefficient) pairs, highest degree first, zero terms omitted.
std::vector<std::pair<std::size_t, std::string>> to_record(const UniPoly& p);

}  // namespace lucaspoly
