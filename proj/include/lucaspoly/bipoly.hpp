#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "lucaspoly/integer.hpp"
#include "lucaspoly/unipoly.hpp"

namespace lucaspoly {

/// Exponent pair of s^s_deg * t^t_deg.
struct Monomial {
  std::uint32_t s_deg = 0;
  std::uint32_t t_deg = 0;

  std::uint32_t total() const noexcept { return s_deg + t_deg; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical order: graded-lexicographic with s before t. `precedes(a, b)` is
/// true when a is printed before b (higher total degree, then higher
/// s-degree).
inline bool precedes(const Monomial& a, const Monomial& b) noexcept {
  if (a.total() != b.total()) return a.total() > b.total();
  return a.s_deg > b.s_deg;
}

struct Term {
  Monomial exponents;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in Z[s, t]. Terms are kept in canonical order with no
/// zero coefficients; the zero polynomial has no terms.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(long c);  // NOLINT(google-explicit-constructor)
  BiPoly(const Integer& c);  // NOLINT(google-explicit-constructor)

  static BiPoly s();
  static BiPoly t();
  static BiPoly monomial(std::uint32_t s_deg, std::uint32_t t_deg, const Integer& c = 1);
  /// Sorts, merges duplicate exponents and drops zeros.
  static BiPoly from_terms(std::vector<Term> terms);
  /// Trusts that `terms` is already canonical. Used by kernels.
  static BiPoly from_canonical(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Degree queries return -1 for the zero polynomial.
  long deg_s() const noexcept;
  long deg_t() const noexcept;
  long total_degree() const noexcept;
  Integer coeff(std::uint32_t s_deg, std::uint32_t t_deg) const;

  /// Coefficient of s^k as a polynomial in t.
  UniPoly s_coefficient(std::uint32_t k) const;
  /// Leading coefficient in s is the constant 1.
  bool is_monic_in_s() const;
  bool has_nonnegative_coefficients() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs);
  BiPoly& operator*=(const Integer& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Integer& c) { return a *= c; }
  friend BiPoly operator*(const Integer& c, BiPoly a) { return a *= c; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Exchange s and t.
  BiPoly swap_vars() const;
  /// Multiply by s^i t^j.
  BiPoly shifted(std::uint32_t i, std::uint32_t j) const;

 private:
  std::vector<Term> terms_;
};

BiPoly pow(const BiPoly& base, unsigned exponent);

/// Quotient when b divides a in Z[s, t]; nullopt when no quotient with integer
/// coefficients exists. Throws InputError when b is zero.
std::optional<BiPoly> exact_div(const BiPoly& a, const BiPoly& b);

/// Remainder of a modulo m, where m is monic in s; deg_s(result) < deg_s(m).
/// Throws InputError when m is not monic in s.
BiPoly reduce_mod_monic_s(const BiPoly& a, const BiPoly& m);

/// Greatest common divisor in Z[s, t], normalized so the canonical leading
/// coefficient is positive. Throws InputError for gcd(0, 0).
BiPoly gcd(const BiPoly& a, const BiPoly& b);

/// Flip the sign if needed so the canonical leading coefficient is positive.
BiPoly normalize_sign(const BiPoly& p);

/// Replace s by fs and t by ft.
UniPoly substitute(const BiPoly& p, const UniPoly& fs, const UniPoly& ft);
Integer eval(const BiPoly& p, const Integer& s0, const Integer& t0);

/// Canonical text: graded-lex order, "coeff*s^i*t^j" with unit coefficients
/// and exponents omitted, "0" for zero.
std::string serialize(const BiPoly& p);
/// Inverse of serialize; also accepts non-canonical input (any term order,
/// optional '*', repeated variables). Throws ParseError.
BiPoly parse_bipoly(std::string_view text);

/// (i, j, decimal coefficient) triples in canonical order.
using TermRecord = std::tuple<std::uint32_t, std::uint32_t, std::string>;
std::vector<TermRecord> to_record(const BiPoly& p);

}  // namespace lucaspoly
