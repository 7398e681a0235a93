#include "lucaspoly/integer.hpp"

#include <array>

#include "lucaspoly/errors.hpp"

namespace lucaspoly {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// The first twelve primes are a deterministic witness set for n < 3.3e24.
constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool fits_u64(const Integer& n) { return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const Integer& n) {
  if (!fits_u64(n)) throw InputError("integer exceeds 64-bit magnitude: " + n.get_str());
  u64 out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

Integer from_u64(u64 v) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw InputError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer int_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  for (u64 a : kWitnesses) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (sgn(n) <= 0) return false;
  return is_prime(to_u64(n));
}

Integer Factorization::expand() const {
  Integer out = 1;
  for (const auto& pp : factors) out *= ipow(pp.prime, pp.exponent);
  return out;
}

Factorization factor(u64 n) {
  if (n == 0) throw InputError("factor: n must be positive");
  std::vector<std::pair<u64, unsigned>> found;
  auto strip = [&](u64 p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) found.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  strip(5);
  // Wheel mod 30: candidates 7, 11, 13, 17, 19, 23, 29, 31 and their shifts.
  constexpr std::array<u64, 8> kGaps = {4, 2, 4, 2, 4, 6, 2, 6};
  u64 p = 7;
  std::size_t gap = 0;
  bool cofactor_prime = n > 1 && is_prime(n);
  while (!cofactor_prime && n > 1 && p <= n / p) {
    if (n % p == 0) {
      strip(p);
      cofactor_prime = n > 1 && is_prime(n);
    }
    p += kGaps[gap];
    gap = (gap + 1) % kGaps.size();
  }
  if (n > 1) found.emplace_back(n, 1);

  Factorization out;
  out.factors.reserve(found.size());
  for (auto [prime, e] : found) out.factors.push_back({from_u64(prime), e});
  return out;
}

Factorization factor(const Integer& n) {
  if (sgn(n) <= 0) throw InputError("factor: n must be positive, got " + n.get_str());
  return factor(to_u64(n));
}

std::vector<u64> distinct_prime_divisors(u64 n) {
  std::vector<u64> out;
  for (const auto& pp : factor(n).factors) out.push_back(to_u64(pp.prime));
  return out;
}

long nu_p(const Integer& n, const Integer& p) {
  if (sgn(n) == 0) throw InputError("nu_p: valuation of zero is undefined");
  if (!is_prime(p)) throw InputError("nu_p: " + p.get_str() + " is not prime");
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long nu_p(const Rational& q, const Integer& p) {
  if (sgn(q) == 0) throw InputError("nu_p: valuation of zero is undefined");
  return nu_p(Integer(q.get_num()), p) - nu_p(Integer(q.get_den()), p);
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

}  // namespace lucaspoly
