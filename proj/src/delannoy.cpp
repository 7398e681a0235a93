#include "lucaspoly/delannoy.hpp"

#include <mutex>
#include <string>

#include "lucaspoly/errors.hpp"

namespace lucaspoly {

namespace {

class DelannoyPolyCache {
 public:
  const UniPoly& get(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    if (values_.empty()) {
      values_.emplace_back();
      values_.emplace_back(1);
    }
    const UniPoly x = UniPoly::x();
    while (values_.size() <= n) {
      const std::size_t m = values_.size();
      values_.push_back((x + UniPoly(1)) * values_[m - 1] + x * values_[m - 2]);
    }
    return values_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<UniPoly> values_;
};

DelannoyPolyCache& poly_cache() {
  static DelannoyPolyCache cache;
  return cache;
}

// {N choose k}_D = D_{N-k+1} {N-1 choose k-1}_D + x D_{k-1} {N-1 choose k}_D.
UniPoly delannomial_by_recurrence(std::size_t n, std::size_t k) {
  std::vector<UniPoly> row{UniPoly(1)};
  const UniPoly x = UniPoly::x();
  for (std::size_t big_n = 1; big_n <= n; ++big_n) {
    std::vector<UniPoly> next(big_n + 1);
    next[0] = 1;
    next[big_n] = 1;
    for (std::size_t j = 1; j < big_n; ++j) {
      next[j] = delannoy_poly(big_n - j + 1) * row[j - 1] + x * delannoy_poly(j - 1) * row[j];
    }
    row = std::move(next);
  }
  return row[k];
}

}  // namespace

Integer DelannoyTable::at(std::size_t a, std::size_t b) {
  {
    std::shared_lock lock(mutex_);
    if (a < rows_.size() && b < width_) return rows_[a][b];
  }
  std::unique_lock lock(mutex_);
  if (b >= width_) {
    // Widen every existing row first.
    const std::size_t new_width = std::max(b + 1, 2 * width_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      auto& row = rows_[i];
      for (std::size_t j = width_; j < new_width; ++j) {
        row.push_back(i == 0 || j == 0 ? Integer(1) : rows_[i - 1][j] + row[j - 1] + rows_[i - 1][j - 1]);
      }
    }
    width_ = new_width;
  }
  while (rows_.size() <= a) {
    const std::size_t i = rows_.size();
    std::vector<Integer> row(width_, Integer(1));
    for (std::size_t j = 1; i > 0 && j < width_; ++j) row[j] = rows_[i - 1][j] + row[j - 1] + rows_[i - 1][j - 1];
    rows_.push_back(std::move(row));
  }
  return rows_[a][b];
}

Integer delannoy_number(std::size_t a, std::size_t b) {
  static DelannoyTable table;
  return table.at(a, b);
}

const UniPoly& delannoy_poly(std::size_t n) { return poly_cache().get(n); }

UniPoly delannomial(std::size_t n, std::size_t k) {
  if (k > n) throw InputError("delannomial: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  UniPoly numerator(1), denominator(1);
  for (std::size_t j = 1; j <= k; ++j) {
    numerator = numerator * delannoy_poly(n - j + 1);
    denominator = denominator * delannoy_poly(j);
  }
  const auto q = exact_div(numerator, denominator);
  const std::string where = "n = " + std::to_string(n) + ", k = " + std::to_string(k) + "\n";
  if (!q) {
    throw TheoremViolation("delannomial is a polynomial",
                           where + "numerator = " + serialize(numerator) + "\ndenominator = " + serialize(denominator) + "\n");
  }
  const UniPoly by_recurrence = delannomial_by_recurrence(n, k);
  if (by_recurrence != *q) {
    throw TheoremViolation("delannomial satisfies the lucanomial recurrence",
                           where + "by division = " + serialize(*q) + "\nby recurrence = " + serialize(by_recurrence) + "\n");
  }
  return *q;
}

SymmetryReport symmetry_unimodality(const UniPoly& p) {
  if (p.is_zero()) throw InputError("symmetry_unimodality: zero polynomial");
  SymmetryReport report;
  report.polynomial = p;
  report.is_symmetric = p.is_palindrome();
  const auto& c = p.coeffs();
  std::size_t i = 1;
  while (i < c.size() && c[i] >= c[i - 1]) ++i;
  while (i < c.size() && c[i] <= c[i - 1]) ++i;
  report.is_unimodal = i >= c.size();
  const auto r = static_cast<std::size_t>(p.degree());
  const std::size_t centre = r % 2 ? (r + 1) / 2 : r / 2;
  report.central_monomial = {centre, c[centre]};
  return report;
}

}  // namespace lucaspoly
