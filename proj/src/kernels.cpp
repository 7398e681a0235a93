#include "lucaspoly/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include <omp.h>

namespace lucaspoly::kernels {

namespace {

std::uint64_t pack(std::uint32_t s_deg, std::uint32_t t_deg) {
  return (static_cast<std::uint64_t>(s_deg) << 32U) | t_deg;
}

void sort_canonical(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return precedes(x.exponents, y.exponents); });
}

struct RowEntry {
  std::uint32_t t_deg;
  const Integer* coeff;
};

std::vector<std::vector<RowEntry>> rows_by_s(const BiPoly& p) {
  std::vector<std::vector<RowEntry>> rows(static_cast<std::size_t>(p.deg_s() + 1));
  for (const auto& term : p.terms()) rows[term.exponents.s_deg].push_back({term.exponents.t_deg, &term.coeff});
  return rows;
}

}  // namespace

BiPoly mul_serial(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::unordered_map<std::uint64_t, Integer> acc;
  acc.reserve(a.size() * b.size() / 2 + 1);
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      Integer& slot = acc[pack(x.exponents.s_deg + y.exponents.s_deg, x.exponents.t_deg + y.exponents.t_deg)];
      mpz_addmul(slot.get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [key, c] : acc) {
    if (sgn(c) == 0) continue;
    terms.push_back({{static_cast<std::uint32_t>(key >> 32U), static_cast<std::uint32_t>(key & 0xffffffffU)},
                     std::move(c)});
  }
  sort_canonical(terms);
  return BiPoly::from_canonical(std::move(terms));
}

BiPoly mul_parallel(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto rows_a = rows_by_s(a);
  const auto rows_b = rows_by_s(b);
  const long da = a.deg_s();
  const long db = b.deg_s();
  const std::size_t width = static_cast<std::size_t>(a.deg_t() + b.deg_t() + 1);
  const long out_rows = da + db + 1;
  std::vector<std::vector<Term>> out(static_cast<std::size_t>(out_rows));

#pragma omp parallel for schedule(dynamic)
  for (long r = 0; r < out_rows; ++r) {
    std::vector<Integer> acc(width);
    bool touched = false;
    for (long ia = std::max(0L, r - db); ia <= std::min(r, da); ++ia) {
      const auto& ra = rows_a[static_cast<std::size_t>(ia)];
      const auto& rb = rows_b[static_cast<std::size_t>(r - ia)];
      if (ra.empty() || rb.empty()) continue;
      touched = true;
      for (const auto& x : ra) {
        for (const auto& y : rb) {
          mpz_addmul(acc[x.t_deg + y.t_deg].get_mpz_t(), x.coeff->get_mpz_t(), y.coeff->get_mpz_t());
        }
      }
    }
    if (!touched) continue;
    auto& row = out[static_cast<std::size_t>(r)];
    for (std::size_t j = 0; j < width; ++j) {
      if (sgn(acc[j]) != 0) row.push_back({{static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(j)}, std::move(acc[j])});
    }
  }

  std::vector<Term> terms;
  for (auto& row : out) std::move(row.begin(), row.end(), std::back_inserter(terms));
  sort_canonical(terms);
  return BiPoly::from_canonical(std::move(terms));
}

}  // namespace lucaspoly::kernels
