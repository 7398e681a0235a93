#include "lucaspoly/tilings.hpp"

#include <algorithm>
#include <string>

#include <omp.h>

#include "lucaspoly/errors.hpp"

namespace lucaspoly {

namespace {

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) throw BudgetExceeded("enumeration exceeded budget of " + std::to_string(limit_) + " objects");
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

void extend_linear(std::size_t remaining, std::vector<Piece>& prefix, std::vector<Tiling>& out, Budget& budget) {
  if (remaining == 0) {
    budget.charge();
    out.push_back({prefix, false, false});
    return;
  }
  prefix.push_back(Piece::monomino);
  extend_linear(remaining - 1, prefix, out, budget);
  prefix.back() = Piece::domino;
  if (remaining >= 2) extend_linear(remaining - 2, prefix, out, budget);
  prefix.pop_back();
}

BiPoly sum_weights(const std::vector<Tiling>& tilings) {
  BiPoly total;
  for (const auto& t : tilings) total += t.weight();
  return total;
}

// Weight sum of tilings of a strip whose first piece is not a monomino. The
// empty strip has one (empty) tiling.
BiPoly domino_start_weight(std::size_t length, Budget& budget) {
  BiPoly total;
  for (const auto& t : linear_tilings(length, kDefaultEnumerationBudget)) {
    budget.charge();
    if (t.pieces.empty() || t.pieces.front() == Piece::domino) total += t.weight();
  }
  return total;
}

void extend_paths(std::size_t a, std::size_t b, LatticePath& path, const std::function<void(const LatticePath&)>& visit,
                  Budget& budget) {
  if (a == 0 && b == 0) {
    budget.charge();
    visit(path);
    return;
  }
  if (b > 0) {
    path.steps.push_back(Step::east);
    extend_paths(a, b - 1, path, visit, budget);
    path.steps.pop_back();
  }
  if (a > 0) {
    path.steps.push_back(Step::north);
    extend_paths(a - 1, b, path, visit, budget);
    path.steps.pop_back();
  }
  if (a > 0 && b > 0) {
    path.steps.push_back(Step::diagonal);
    extend_paths(a - 1, b - 1, path, visit, budget);
    path.steps.pop_back();
  }
}

}  // namespace

std::size_t Tiling::length() const {
  std::size_t n = 0;
  for (Piece p : pieces) n += p == Piece::domino ? 2 : 1;
  return n;
}

BiPoly Tiling::weight() const {
  std::uint32_t monominos = 0, dominos = 0;
  for (Piece p : pieces) ++(p == Piece::domino ? dominos : monominos);
  return BiPoly::monomial(monominos, dominos);
}

std::vector<Tiling> linear_tilings(std::size_t length, std::uint64_t budget) {
  Budget b(budget);
  std::vector<Tiling> out;
  std::vector<Piece> prefix;
  extend_linear(length, prefix, out, b);
  return out;
}

std::vector<Tiling> circular_tilings(std::size_t n, std::uint64_t budget) {
  if (n == 0) throw InputError("circular tilings need n >= 1");
  Budget b(budget);
  std::vector<Tiling> out;
  std::vector<Piece> prefix;
  // Cells 1..n laid out in order; then the wrap domino over cells n and 1
  // with cells 2..n-1 tiled linearly.
  extend_linear(n, prefix, out, b);
  std::vector<Tiling> wrapped;
  if (n >= 2) extend_linear(n - 2, prefix, wrapped, b);
  for (auto& t : out) t.circular = true;
  for (auto& t : wrapped) {
    t.circular = true;
    t.wraps = true;
    t.pieces.push_back(Piece::domino);
    out.push_back(std::move(t));
  }
  return out;
}

BiPoly linear_tilings_weight(std::size_t length, std::uint64_t budget) {
  return sum_weights(linear_tilings(length, budget));
}

BiPoly circular_tilings_weight(std::size_t n, std::uint64_t budget) { return sum_weights(circular_tilings(n, budget)); }

std::vector<std::size_t> BoxPartition::complement_columns() const {
  std::vector<std::size_t> cols(width, rows());
  for (std::size_t j = 0; j < width; ++j) {
    for (std::size_t part : parts) {
      if (part > j) --cols[j];
    }
  }
  return cols;
}

std::vector<BoxPartition> box_partitions(std::size_t rows, std::size_t width) {
  std::vector<BoxPartition> out;
  std::vector<std::size_t> parts(rows);
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t cap) {
    if (i == rows) {
      out.push_back({parts, width});
      return;
    }
    for (std::size_t v = 0; v <= cap; ++v) {
      parts[i] = v;
      fill(i + 1, v);
    }
  };
  fill(0, width);
  return out;
}

BiPoly lucanomial_tiling_sum(std::size_t m, std::size_t n, std::uint64_t budget) {
  const auto partitions = box_partitions(n, m);
  Budget global(budget);
  global.charge(partitions.size());

  // Row and column weight sums by enumeration, one per strip length.
  const std::size_t longest = std::max(m, n);
  std::vector<BiPoly> free_rows(longest + 1), domino_start(longest + 1);
  for (std::size_t len = 0; len <= longest; ++len) {
    free_rows[len] = linear_tilings_weight(len, budget);
    domino_start[len] = domino_start_weight(len, global);
  }

  BiPoly total;
#pragma omp parallel
  {
    BiPoly local;
#pragma omp for schedule(dynamic)
    for (std::size_t i = 0; i < partitions.size(); ++i) {
      const auto& lambda = partitions[i];
      BiPoly w = 1;
      for (std::size_t part : lambda.parts) w *= free_rows[part];
      for (std::size_t col : lambda.complement_columns()) {
        if (w.is_zero()) break;
        w *= domino_start[col];
      }
      local += w;
    }
#pragma omp critical
    total += local;
  }
  return total;
}

void for_each_delannoy_path(std::size_t a, std::size_t b, const std::function<void(const LatticePath&)>& visit,
                            std::uint64_t budget) {
  Budget bud(budget);
  LatticePath path;
  extend_paths(a, b, path, visit, bud);
}

Integer delannoy_paths_count(std::size_t a, std::size_t b, std::uint64_t budget) {
  Integer count = 0;
  for_each_delannoy_path(a, b, [&](const LatticePath&) { ++count; }, budget);
  return count;
}

}  // namespace lucaspoly
