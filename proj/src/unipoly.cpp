#include "lucaspoly/unipoly.hpp"

#include <algorithm>

#include "lucaspoly/errors.hpp"
#include "poly_text.hpp"

namespace lucaspoly {

UniPoly::UniPoly(long c) : UniPoly(Integer(c)) {}

UniPoly::UniPoly(const Integer& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

UniPoly::UniPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::x() { return monomial(1, 1); }

UniPoly UniPoly::monomial(std::size_t degree, const Integer& c) {
  if (sgn(c) == 0) return {};
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& UniPoly::lead() const {
  if (coeffs_.empty()) throw InputError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return UniPoly(std::move(out));
}

Integer UniPoly::eval(const Integer& x0) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
  return acc;
}

UniPoly UniPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Integer> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return UniPoly(std::move(v));
}

Integer UniPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (!coeffs_.empty() && sgn(coeffs_.back()) < 0) g = -g;
  return g;
}

UniPoly UniPoly::primitive_part() const {
  if (is_zero()) return {};
  const Integer c = content();
  UniPoly out = *this;
  for (auto& v : out.coeffs_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  return out;
}

bool UniPoly::is_palindrome() const { return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin()); }

bool UniPoly::has_nonnegative_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) >= 0; });
}

UniPoly pow(const UniPoly& base, unsigned exponent) {
  UniPoly result = 1;
  UniPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

std::optional<UniPoly> exact_div(const UniPoly& a, const Integer& c) {
  if (sgn(c) == 0) throw InputError("division by zero");
  std::vector<Integer> out(a.coeffs());
  for (auto& v : out) {
    if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  }
  return UniPoly(std::move(out));
}

std::optional<UniPoly> exact_div(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InputError("division by the zero polynomial");
  if (a.is_zero()) return UniPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> rem(a.coeffs());
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Integer> quot(rem.size() - db);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + db];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), bc[db].get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), bc[db].get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) {
      if (sgn(bc[j]) != 0) mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), bc[j].get_mpz_t());
    }
    quot[k] = std::move(q);
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (sgn(rem[i]) != 0) return std::nullopt;
  }
  return UniPoly(std::move(quot));
}

UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InputError("pseudo-remainder by the zero polynomial");
  UniPoly r = a;
  if (r.degree() < b.degree()) return r;
  long steps = r.degree() - b.degree() + 1;
  const Integer lb = b.lead();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const Integer lr = r.lead();
    const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    r = r * lb - (b * lr).shifted(shift);
    --steps;
  }
  if (steps > 0 && !r.is_zero()) r *= ipow(lb, static_cast<unsigned long>(steps));
  return r;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw InputError("gcd(0, 0) is undefined");
  const Integer c = int_gcd(a.is_zero() ? Integer(0) : a.content(), b.is_zero() ? Integer(0) : b.content());
  UniPoly x = a.primitive_part();
  UniPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    UniPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  UniPoly g = x.primitive_part() * c;
  if (sgn(g.lead()) < 0) g = -g;
  return g;
}

std::string serialize(const UniPoly& p, char variable) {
  if (p.is_zero()) return "0";
  std::string out;
  const std::string vars(1, variable);
  bool first = true;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const auto& c = p.coeffs()[i];
    if (sgn(c) == 0) continue;
    detail::append_term(out, c, vars, {static_cast<unsigned>(i), 0}, first);
    first = false;
  }
  return out;
}

UniPoly parse_unipoly(std::string_view text, char variable) {
  UniPoly out;
  const std::string vars(1, variable);
  for (auto& term : detail::parse_terms(text, vars)) out += UniPoly::monomial(term.exponents[0], term.coeff);
  return out;
}

std::vector<std::pair<std::size_t, std::string>> to_record(const UniPoly& p) {
  std::vector<std::pair<std::size_t, std::string>> out;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    if (sgn(p.coeffs()[i]) != 0) out.emplace_back(i, p.coeffs()[i].get_str());
  }
  return out;
}

}  // namespace lucaspoly
