#pragma once

// Exact scalars. Integer and Rational are GMP values; everything here is a
// pure function over them.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lucaspoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical num/den with den > 0. Throws InputError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Nonnegative gcd; int_gcd(0, 0) == 0.
Integer int_gcd(const Integer& a, const Integer& b);

/// Deterministic Miller-Rabin for 0 <= n < 2^64.
bool is_prime(std::uint64_t n);
/// Same test for an Integer; throws InputError beyond 64-bit magnitude.
bool is_prime(const Integer& n);

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes. Empty for 1.
struct Factorization {
  std::vector<PrimePower> factors;

  Integer expand() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Trial division over a mod-30 wheel, stopping early once the cofactor is
/// prime. Requires 1 <= n < 2^64.
Factorization factor(const Integer& n);
Factorization factor(std::uint64_t n);

/// Distinct prime divisors of n >= 1, increasing.
std::vector<std::uint64_t> distinct_prime_divisors(std::uint64_t n);

/// p-adic valuation of a nonzero rational. Throws InputError on q == 0 or
/// when p is not prime.
long nu_p(const Rational& q, const Integer& p);
long nu_p(const Integer& n, const Integer& p);

/// Exact integer power.
Integer ipow(const Integer& base, unsigned long exponent);

inline std::string to_string(const Integer& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace lucaspoly
