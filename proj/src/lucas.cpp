#include "lucaspoly/lucas.hpp"

#include <sstream>

#include "lucaspoly/errors.hpp"
#include "lucaspoly/integer.hpp"

namespace lucaspoly {

namespace {

std::string describe(std::initializer_list<std::pair<const char*, const BiPoly*>> polys) {
  std::ostringstream out;
  for (const auto& [name, p] : polys) out << name << " = " << serialize(*p) << '\n';
  return out.str();
}

// Pascal-type table of ordinary lucanomials, one row per N.
class LucanomialTable {
 public:
  BiPoly get(std::size_t n, std::size_t k) {
    {
      std::shared_lock lock(mutex_);
      if (n < rows_.size()) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= n) {
      const std::size_t big_n = rows_.size();
      std::vector<BiPoly> row(big_n + 1);
      row[0] = 1;
      row[big_n] = 1;
      for (std::size_t k2 = 1; k2 < big_n; ++k2) {
        const auto& prev = rows_[big_n - 1];
        row[k2] = lucas(big_n - k2 + 1) * prev[k2 - 1] + (lucas(k2 - 1) * prev[k2]).shifted(0, 1);
      }
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<std::vector<BiPoly>> rows_;
};

LucanomialTable& lucanomial_table() {
  static LucanomialTable table;
  return table;
}

void require_k_le_n(std::size_t n, std::size_t k) {
  if (k > n) throw InputError("lucanomial: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
}

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::plain:
      return "plain";
    case Flavor::flat:
      return "flat";
    case Flavor::sharp:
      return "sharp";
  }
  return "?";
}

}  // namespace

void LucasCache::extend(std::size_t n) {
  std::unique_lock lock(mutex_);
  if (lucas_.empty()) {
    lucas_.emplace_back(0);
    lucas_.emplace_back(1);
    circular_.emplace_back(2);
    circular_.push_back(BiPoly::s());
  }
  const BiPoly s = BiPoly::s();
  while (lucas_.size() <= n) {
    const std::size_t m = lucas_.size();
    lucas_.push_back(s * lucas_[m - 1] + lucas_[m - 2].shifted(0, 1));
    circular_.push_back(s * circular_[m - 1] + circular_[m - 2].shifted(0, 1));
  }
}

const BiPoly& LucasCache::lucas(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < lucas_.size()) return lucas_[n];
  }
  extend(n);
  std::shared_lock lock(mutex_);
  return lucas_[n];
}

const BiPoly& LucasCache::circular(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < circular_.size()) return circular_[n];
  }
  extend(n);
  std::shared_lock lock(mutex_);
  return circular_[n];
}

const BiPoly& LucasCache::flat(std::size_t n) {
  if (n == 0) throw InputError("flat Lucas polynomial is defined for n >= 1");
  {
    std::shared_lock lock(mutex_);
    if (auto it = flat_.find(n); it != flat_.end()) return it->second;
  }
  BiPoly value = 1;
  for (auto p : distinct_prime_divisors(n)) value *= lucas(p);
  std::unique_lock lock(mutex_);
  return flat_.try_emplace(n, std::move(value)).first->second;
}

const BiPoly& LucasCache::sharp(std::size_t n) {
  if (n == 0) throw InputError("sharp Lucas polynomial is defined for n >= 1");
  {
    std::shared_lock lock(mutex_);
    if (auto it = sharp_.find(n); it != sharp_.end()) return it->second;
  }
  const BiPoly& ln = lucas(n);
  const BiPoly& fl = flat(n);
  auto quotient = exact_div(ln, fl);
  if (!quotient) {
    throw TheoremViolation("L_n is divisible by the product of L_p over primes p | n (n = " + std::to_string(n) + ")",
                           describe({{"L_n", &ln}, {"flat", &fl}}));
  }
  std::unique_lock lock(mutex_);
  return sharp_.try_emplace(n, std::move(*quotient)).first->second;
}

LucasCache& default_cache() {
  static LucasCache cache;
  return cache;
}

const BiPoly& lucas(std::size_t n) { return default_cache().lucas(n); }
const BiPoly& circular(std::size_t n) { return default_cache().circular(n); }
const BiPoly& flat(std::size_t n) { return default_cache().flat(n); }
const BiPoly& sharp(std::size_t n) { return default_cache().sharp(n); }

const BiPoly& flavored(Flavor flavor, std::size_t n) {
  switch (flavor) {
    case Flavor::flat:
      return flat(n);
    case Flavor::sharp:
      return sharp(n);
    case Flavor::plain:
      break;
  }
  return lucas(n);
}

BiPoly lucanomial_by_ratio(std::size_t n, std::size_t k, Flavor flavor) {
  require_k_le_n(n, k);
  BiPoly value = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    const BiPoly numerator = value * flavored(flavor, n - j + 1);
    const BiPoly& denominator = flavored(flavor, j);
    auto q = exact_div(numerator, denominator);
    if (!q) {
      std::ostringstream claim;
      claim << flavor_name(flavor) << " lucanomial {" << n << " choose " << j << "} is a polynomial";
      throw TheoremViolation(claim.str(), describe({{"numerator", &numerator}, {"denominator", &denominator}}));
    }
    value = std::move(*q);
  }
  return value;
}

BiPoly lucanomial_by_recurrence(std::size_t n, std::size_t k) {
  require_k_le_n(n, k);
  return lucanomial_table().get(n, k);
}

Lucanomial lucanomial(std::size_t n, std::size_t k) {
  BiPoly ratio = lucanomial_by_ratio(n, k);
  const BiPoly recurrence = lucanomial_by_recurrence(n, k);
  const std::string where = "{" + std::to_string(n) + " choose " + std::to_string(k) + "}";
  if (ratio != recurrence) {
    throw TheoremViolation("lucanomial ratio and recurrence agree at " + where,
                           describe({{"ratio", &ratio}, {"recurrence", &recurrence}}));
  }
  if (!ratio.has_nonnegative_coefficients()) {
    throw TheoremViolation("lucanomial " + where + " has nonnegative coefficients", describe({{"value", &ratio}}));
  }
  return {n, k, std::move(ratio)};
}

namespace {

BiPoly checked_flavored_lucanomial(std::size_t n, std::size_t k, Flavor flavor) {
  BiPoly value = lucanomial_by_ratio(n, k, flavor);
  if (!value.has_nonnegative_coefficients()) {
    throw TheoremViolation(std::string(flavor_name(flavor)) + " lucanomial {" + std::to_string(n) + " choose " +
                               std::to_string(k) + "} has nonnegative coefficients",
                           describe({{"value", &value}}));
  }
  return value;
}

}  // namespace

BiPoly flat_lucanomial(std::size_t n, std::size_t k) { return checked_flavored_lucanomial(n, k, Flavor::flat); }
BiPoly sharp_lucanomial(std::size_t n, std::size_t k) { return checked_flavored_lucanomial(n, k, Flavor::sharp); }

bool check_addition_identity(std::size_t m, std::size_t n) {
  const BiPoly lhs = lucas(m + n) * Integer(2);
  const BiPoly rhs = circular(n) * lucas(m) + circular(m) * lucas(n);
  if (lhs != rhs) return false;
  // t * L_{m-1} with t * L_{-1} = 1.
  const BiPoly t_prev = m == 0 ? BiPoly(1) : lucas(m - 1).shifted(0, 1);
  return lucas(m + n) == lucas(m) * lucas(n + 1) + t_prev * lucas(n);
}

bool division_identity_check(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw InputError("division identity needs a, b >= 1");
  const std::size_t big_n = a * b;
  const BiPoly lhs = lucas(big_n) * ipow(2, b);
  BiPoly sum;
  BiPoly ka_power = 1;
  for (std::size_t i = 1; i <= b; ++i) {
    sum += circular(big_n - i * a) * ka_power * ipow(2, b - i);
    ka_power *= circular(a);
  }
  return lhs == lucas(a) * sum;
}

bool non_divisibility_converse(std::size_t a, std::size_t big_n) {
  if (a < 2) throw InputError("non_divisibility_converse needs a >= 2");
  const bool divides = exact_div(lucas(big_n), lucas(a)).has_value();
  return divides == (big_n % a == 0);
}

MultiplicityResidue multiplicity_free_check(std::size_t p, std::size_t big_n) {
  if (p < 2) throw InputError("multiplicity_free_check needs p >= 2");
  if (big_n == 0 || big_n % p != 0) {
    throw InputError(std::to_string(p) + " does not divide " + std::to_string(big_n));
  }
  const std::size_t n = big_n / p;
  const BiPoly modulus = lucas(p) * lucas(p);
  MultiplicityResidue out;
  out.p = p;
  out.big_n = big_n;
  out.residue = reduce_mod_monic_s(lucas(big_n), modulus);
  const BiPoly core = (pow(lucas(p - 1), static_cast<unsigned>(n - 1)) * Integer(static_cast<unsigned long>(n)))
                          .shifted(0, static_cast<std::uint32_t>(n - 1));
  out.stated_form = reduce_mod_monic_s(core, modulus);
  out.corrected_form = reduce_mod_monic_s(lucas(p) * core, modulus);
  if (out.residue.is_zero()) {
    throw TheoremViolation("L_p^2 does not divide L_N (p = " + std::to_string(p) + ", N = " + std::to_string(big_n) + ")",
                           describe({{"L_N", &lucas(big_n)}, {"L_p^2", &modulus}}));
  }
  return out;
}

PowerOfTwoFactorization power_of_two_factorization(std::size_t big_n) {
  if (big_n < 2 || big_n % 2 != 0) throw InputError("power_of_two_factorization needs an even N >= 2");
  PowerOfTwoFactorization out;
  out.odd_part = big_n;
  while (out.odd_part % 2 == 0) {
    out.odd_part /= 2;
    ++out.r;
  }
  out.factors.push_back(lucas(out.odd_part));
  BiPoly k_product = 1;
  for (unsigned i = 1; i <= out.r; ++i) {
    out.factors.push_back(circular(big_n >> i));
    k_product *= out.factors.back();
  }
  out.lucas_identity = lucas(big_n) == lucas(out.odd_part) * k_product;
  out.sharp_identity = lucas(2) * sharp(big_n) == sharp(out.odd_part) * k_product;
  return out;
}

BiPoly catalanomial(std::size_t n, Flavor flavor) {
  if (n == 0) throw InputError("catalanomial is defined for n >= 1");
  const BiPoly central = lucanomial_by_ratio(2 * n, n, flavor);
  const BiPoly& denominator = flavored(flavor, n + 1);
  auto q = exact_div(central, denominator);
  const std::string where = std::string(flavor_name(flavor)) + " Catalanomial C_" + std::to_string(n);
  if (!q) {
    throw TheoremViolation(where + " is a polynomial", describe({{"central", &central}, {"denominator", &denominator}}));
  }
  if (!q->has_nonnegative_coefficients()) {
    throw TheoremViolation(where + " has nonnegative coefficients", describe({{"value", &*q}}));
  }
  return std::move(*q);
}

bool catalan_two_term_identity(std::size_t n) {
  if (n == 0) throw InputError("catalan_two_term_identity needs n >= 1");
  BiPoly rhs = lucanomial_by_ratio(2 * n - 1, n - 1);
  if (n >= 2) rhs += lucanomial_by_ratio(2 * n - 1, n - 2).shifted(0, 1);
  return catalanomial(n) == rhs;
}

BiPoly determinant(const std::vector<std::vector<BiPoly>>& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) return 1;
  if (n == 1) return matrix[0][0];
  BiPoly det;
  for (std::size_t col = 0; col < n; ++col) {
    if (matrix[0][col].is_zero()) continue;
    std::vector<std::vector<BiPoly>> minor;
    minor.reserve(n - 1);
    for (std::size_t row = 1; row < n; ++row) {
      std::vector<BiPoly> r;
      r.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) r.push_back(matrix[row][c]);
      }
      minor.push_back(std::move(r));
    }
    BiPoly term = matrix[0][col] * determinant(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

BiPoly tridiagonal_charpoly_oracle(std::size_t n) {
  std::vector<std::vector<BiPoly>> m(n, std::vector<BiPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = BiPoly::s();
    if (i + 1 < n) {
      m[i][i + 1] = -BiPoly::t();
      m[i + 1][i] = BiPoly(-1);
    }
  }
  return determinant(m);
}

BiPoly tridiagonal_charpoly_recurrence(std::size_t n) {
  BiPoly prev = 1;
  BiPoly cur = BiPoly::s();
  if (n == 0) return prev;
  for (std::size_t i = 2; i <= n; ++i) {
    BiPoly next = BiPoly::s() * cur + prev.shifted(0, 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BiPoly tridiagonal_charpoly(std::size_t n, bool oracle) {
  if (n == 0) throw InputError("tridiagonal_charpoly needs n >= 1");
  return oracle ? tridiagonal_charpoly_oracle(n) : tridiagonal_charpoly_recurrence(n);
}

BiPoly negate_t(const BiPoly& p) {
  std::vector<Term> terms(p.terms());
  for (auto& term : terms) {
    if (term.exponents.t_deg % 2 == 1) term.coeff = -term.coeff;
  }
  return BiPoly::from_canonical(std::move(terms));
}

}  // namespace lucaspoly
