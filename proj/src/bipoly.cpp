#include "lucaspoly/bipoly.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <omp.h>

#include "lucaspoly/errors.hpp"
#include "lucaspoly/kernels.hpp"
#include "poly_text.hpp"

namespace lucaspoly {

namespace {

bool term_precedes(const Term& x, const Term& y) { return precedes(x.exponents, y.exponents); }

// Lex order with s first; a larger key is a lex-larger monomial.
using LexKey = std::uint64_t;

LexKey lex_key(const Monomial& m) { return (static_cast<LexKey>(m.s_deg) << 32U) | m.t_deg; }
Monomial from_key(LexKey k) {
  return {static_cast<std::uint32_t>(k >> 32U), static_cast<std::uint32_t>(k & 0xffffffffU)};
}

using LexMap = std::map<LexKey, Integer, std::greater<>>;

LexMap to_lex_map(const BiPoly& p) {
  LexMap out;
  for (const auto& term : p.terms()) out.emplace(lex_key(term.exponents), term.coeff);
  return out;
}

// out -= q * s^qs t^qt * b
void subtract_scaled(LexMap& out, const Integer& q, const Monomial& shift, const BiPoly& b) {
  for (const auto& term : b.terms()) {
    const LexKey key = lex_key({term.exponents.s_deg + shift.s_deg, term.exponents.t_deg + shift.t_deg});
    auto [it, inserted] = out.try_emplace(key);
    mpz_submul(it->second.get_mpz_t(), q.get_mpz_t(), term.coeff.get_mpz_t());
    if (sgn(it->second) == 0) out.erase(it);
  }
}

const Term& lex_leading(const BiPoly& b) {
  return *std::max_element(b.terms().begin(), b.terms().end(), [](const Term& x, const Term& y) {
    return lex_key(x.exponents) < lex_key(y.exponents);
  });
}

// Z[s,t] viewed as (Z[t])[s]: entry k is the coefficient of s^k.
using RecPoly = std::vector<UniPoly>;

RecPoly to_rec(const BiPoly& p) {
  RecPoly out(static_cast<std::size_t>(p.deg_s() + 1));
  std::vector<std::vector<Integer>> dense(out.size());
  for (const auto& term : p.terms()) {
    auto& row = dense[term.exponents.s_deg];
    if (row.size() <= term.exponents.t_deg) row.resize(term.exponents.t_deg + 1);
    row[term.exponents.t_deg] = term.coeff;
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = UniPoly(std::move(dense[k]));
  return out;
}

BiPoly from_rec(const RecPoly& r) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < r.size(); ++k) {
    const auto& c = r[k].coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (sgn(c[j]) != 0) terms.push_back({{static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(j)}, c[j]});
    }
  }
  return BiPoly::from_terms(std::move(terms));
}

void rec_trim(RecPoly& r) {
  while (!r.empty() && r.back().is_zero()) r.pop_back();
}

UniPoly rec_content(const RecPoly& r) {
  UniPoly g;
  for (const auto& c : r) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd(g, c);
    if (g.degree() == 0 && abs(g.lead()) == 1) break;
  }
  return g;
}

RecPoly rec_divide(const RecPoly& r, const UniPoly& c) {
  RecPoly out(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    auto q = exact_div(r[k], c);
    if (!q) throw std::logic_error("content does not divide coefficient");
    out[k] = std::move(*q);
  }
  return out;
}

RecPoly rec_primitive(const RecPoly& r) {
  if (r.empty()) return r;
  UniPoly c = rec_content(r);
  if (sgn(c.lead()) < 0) c = -c;
  return rec_divide(r, c);
}

RecPoly rec_pseudo_remainder(RecPoly a, const RecPoly& b) {
  const std::size_t db = b.size() - 1;
  const UniPoly& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const UniPoly la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c = c * lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= b[k] * la;
    rec_trim(a);
  }
  return a;
}

}  // namespace

BiPoly::BiPoly(long c) : BiPoly(Integer(c)) {}

BiPoly::BiPoly(const Integer& c) {
  if (sgn(c) != 0) terms_.push_back({{0, 0}, c});
}

BiPoly BiPoly::s() { return monomial(1, 0); }
BiPoly BiPoly::t() { return monomial(0, 1); }

BiPoly BiPoly::monomial(std::uint32_t s_deg, std::uint32_t t_deg, const Integer& c) {
  BiPoly out;
  if (sgn(c) != 0) out.terms_.push_back({{s_deg, t_deg}, c});
  return out;
}

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_precedes);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& term : terms) {
    if (!merged.empty() && merged.back().exponents == term.exponents) {
      merged.back().coeff += term.coeff;
    } else {
      if (!merged.empty() && sgn(merged.back().coeff) == 0) merged.pop_back();
      merged.push_back(std::move(term));
    }
  }
  if (!merged.empty() && sgn(merged.back().coeff) == 0) merged.pop_back();
  return from_canonical(std::move(merged));
}

BiPoly BiPoly::from_canonical(std::vector<Term> terms) {
  BiPoly out;
  out.terms_ = std::move(terms);
  return out;
}

long BiPoly::deg_s() const noexcept {
  long d = -1;
  for (const auto& term : terms_) d = std::max<long>(d, term.exponents.s_deg);
  return d;
}

long BiPoly::deg_t() const noexcept {
  long d = -1;
  for (const auto& term : terms_) d = std::max<long>(d, term.exponents.t_deg);
  return d;
}

long BiPoly::total_degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<long>(terms_.front().exponents.total());
}

Integer BiPoly::coeff(std::uint32_t s_deg, std::uint32_t t_deg) const {
  const Term probe{{s_deg, t_deg}, 0};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, term_precedes);
  if (it != terms_.end() && it->exponents == probe.exponents) return it->coeff;
  return 0;
}

UniPoly BiPoly::s_coefficient(std::uint32_t k) const {
  std::vector<Integer> dense;
  for (const auto& term : terms_) {
    if (term.exponents.s_deg != k) continue;
    if (dense.size() <= term.exponents.t_deg) dense.resize(term.exponents.t_deg + 1);
    dense[term.exponents.t_deg] = term.coeff;
  }
  return UniPoly(std::move(dense));
}

bool BiPoly::is_monic_in_s() const {
  if (is_zero()) return false;
  return s_coefficient(static_cast<std::uint32_t>(deg_s())) == UniPoly(1);
}

bool BiPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& x) { return sgn(x.coeff) >= 0; });
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& term : out.terms_) term.coeff = -term.coeff;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  if (rhs.is_zero()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto i = terms_.begin();
  auto j = rhs.terms_.begin();
  while (i != terms_.end() || j != rhs.terms_.end()) {
    if (j == rhs.terms_.end() || (i != terms_.end() && term_precedes(*i, *j))) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || term_precedes(*j, *i)) {
      merged.push_back(*j++);
    } else {
      Integer c = i->coeff + j->coeff;
      if (sgn(c) != 0) merged.push_back({i->exponents, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) { return *this += -rhs; }

BiPoly& BiPoly::operator*=(const BiPoly& rhs) { return *this = *this * rhs; }

BiPoly& BiPoly::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.coeff *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.size() * b.size() >= kernels::kParallelThreshold && omp_get_max_threads() > 1) {
    return kernels::mul_parallel(a, b);
  }
  return kernels::mul_serial(a, b);
}

BiPoly BiPoly::swap_vars() const {
  std::vector<Term> swapped;
  swapped.reserve(terms_.size());
  for (const auto& term : terms_) swapped.push_back({{term.exponents.t_deg, term.exponents.s_deg}, term.coeff});
  std::sort(swapped.begin(), swapped.end(), term_precedes);
  return from_canonical(std::move(swapped));
}

BiPoly BiPoly::shifted(std::uint32_t i, std::uint32_t j) const {
  BiPoly out = *this;
  for (auto& term : out.terms_) {
    term.exponents.s_deg += i;
    term.exponents.t_deg += j;
  }
  return out;
}

BiPoly pow(const BiPoly& base, unsigned exponent) {
  BiPoly result = 1;
  BiPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

std::optional<BiPoly> exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw InputError("exact_div: division by the zero polynomial");
  if (a.is_zero()) return BiPoly{};
  const Term& lead = lex_leading(b);
  LexMap rem = to_lex_map(a);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    const auto top = rem.begin();
    const Monomial m = from_key(top->first);
    if (m.s_deg < lead.exponents.s_deg || m.t_deg < lead.exponents.t_deg) return std::nullopt;
    if (!mpz_divisible_p(top->second.get_mpz_t(), lead.coeff.get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), top->second.get_mpz_t(), lead.coeff.get_mpz_t());
    const Monomial shift{m.s_deg - lead.exponents.s_deg, m.t_deg - lead.exponents.t_deg};
    subtract_scaled(rem, q, shift, b);
    quotient.push_back({shift, std::move(q)});
  }
  return BiPoly::from_terms(std::move(quotient));
}

BiPoly reduce_mod_monic_s(const BiPoly& a, const BiPoly& m) {
  if (!m.is_monic_in_s()) throw InputError("reduce_mod_monic_s: modulus is not monic in s: " + serialize(m));
  const auto d = static_cast<std::uint32_t>(m.deg_s());
  LexMap rem = to_lex_map(a);
  while (!rem.empty()) {
    const auto top = rem.begin();
    const Monomial mono = from_key(top->first);
    if (mono.s_deg < d) break;
    const Integer q = top->second;
    subtract_scaled(rem, q, {mono.s_deg - d, mono.t_deg}, m);
  }
  std::vector<Term> terms;
  terms.reserve(rem.size());
  for (auto& [key, c] : rem) terms.push_back({from_key(key), std::move(c)});
  return BiPoly::from_terms(std::move(terms));
}

BiPoly normalize_sign(const BiPoly& p) {
  if (!p.is_zero() && sgn(p.terms().front().coeff) < 0) return -p;
  return p;
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() && b.is_zero()) throw InputError("gcd(0, 0) is undefined");
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  RecPoly x = to_rec(a);
  RecPoly y = to_rec(b);
  const UniPoly common = gcd(rec_content(x), rec_content(y));
  x = rec_primitive(x);
  y = rec_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    RecPoly r = rec_pseudo_remainder(x, y);
    x = std::move(y);
    y = rec_primitive(r);
  }
  RecPoly g = rec_primitive(x);
  for (auto& c : g) c = c * common;
  return normalize_sign(from_rec(g));
}

UniPoly substitute(const BiPoly& p, const UniPoly& fs, const UniPoly& ft) {
  if (p.is_zero()) return {};
  std::vector<UniPoly> s_pow(static_cast<std::size_t>(p.deg_s() + 1));
  std::vector<UniPoly> t_pow(static_cast<std::size_t>(p.deg_t() + 1));
  s_pow[0] = 1;
  t_pow[0] = 1;
  for (std::size_t i = 1; i < s_pow.size(); ++i) s_pow[i] = s_pow[i - 1] * fs;
  for (std::size_t j = 1; j < t_pow.size(); ++j) t_pow[j] = t_pow[j - 1] * ft;
  UniPoly out;
  for (const auto& term : p.terms()) {
    out += s_pow[term.exponents.s_deg] * t_pow[term.exponents.t_deg] * term.coeff;
  }
  return out;
}

Integer eval(const BiPoly& p, const Integer& s0, const Integer& t0) {
  Integer acc = 0;
  for (const auto& term : p.terms()) {
    acc += term.coeff * ipow(s0, term.exponents.s_deg) * ipow(t0, term.exponents.t_deg);
  }
  return acc;
}

std::string serialize(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : p.terms()) {
    detail::append_term(out, term.coeff, "st", {term.exponents.s_deg, term.exponents.t_deg}, first);
    first = false;
  }
  return out;
}

BiPoly parse_bipoly(std::string_view text) {
  std::vector<Term> terms;
  for (auto& parsed : detail::parse_terms(text, "st")) {
    terms.push_back({{parsed.exponents[0], parsed.exponents[1]}, std::move(parsed.coeff)});
  }
  return BiPoly::from_terms(std::move(terms));
}

std::vector<TermRecord> to_record(const BiPoly& p) {
  std::vector<TermRecord> out;
  out.reserve(p.size());
  for (const auto& term : p.terms()) out.emplace_back(term.exponents.s_deg, term.exponents.t_deg, term.coeff.get_str());
  return out;
}

}  // namespace lucaspoly
