#pragma once

// Brute-force combinatorial oracles: monomino/domino tilings, partitions in a
// box and Delannoy lattice paths. Nothing here uses the Lucas recurrences.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "lucaspoly/bipoly.hpp"
#include "lucaspoly/integer.hpp"

namespace lucaspoly {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

enum class Piece : std::uint8_t { monomino, domino };

struct Tiling {
  std::vector<Piece> pieces;
  bool circular = false;
  /// Circular only: a domino covers the last and the first cell.
  bool wraps = false;

  std::size_t length() const;
  /// s^(monominos) t^(dominos).
  BiPoly weight() const;
};

/// Every tiling of a 1 x length strip, in lexicographic piece order.
std::vector<Tiling> linear_tilings(std::size_t length, std::uint64_t budget = kDefaultEnumerationBudget);
/// Every tiling of an n-cycle. A domino may straddle cells n and 1; on a
/// 2-cycle the two domino positions are distinct tilings.
std::vector<Tiling> circular_tilings(std::size_t n, std::uint64_t budget = kDefaultEnumerationBudget);

BiPoly linear_tilings_weight(std::size_t length, std::uint64_t budget = kDefaultEnumerationBudget);
BiPoly circular_tilings_weight(std::size_t n, std::uint64_t budget = kDefaultEnumerationBudget);

/// lambda_1 >= ... >= lambda_rows, each at most width. Zero parts are kept so
/// that parts.size() == rows.
struct BoxPartition {
  std::vector<std::size_t> parts;
  std::size_t width = 0;

  std::size_t rows() const { return parts.size(); }
  /// Column lengths of the cells of the box outside lambda. Column j has
  /// length rows - lambda'_j.
  std::vector<std::size_t> complement_columns() const;
};

std::vector<BoxPartition> box_partitions(std::size_t rows, std::size_t width);

/// Sum over lambda in the box of w(tilings of the rows of lambda) times
/// w(tilings of the columns of the complement, none starting with a
/// monomino). The box has n rows of width m. Equals {m+n choose n}_L.
/// Partitions are processed in parallel.
BiPoly lucanomial_tiling_sum(std::size_t m, std::size_t n, std::uint64_t budget = kDefaultEnumerationBudget);

enum class Step : std::uint8_t { east, north, diagonal };

struct LatticePath {
  std::vector<Step> steps;
};

/// Calls visit for every path from (0,0) to (b,a) with unit steps
/// (1,0), (0,1), (1,1).
void for_each_delannoy_path(std::size_t a, std::size_t b, const std::function<void(const LatticePath&)>& visit,
                            std::uint64_t budget = kDefaultEnumerationBudget);
Integer delannoy_paths_count(std::size_t a, std::size_t b, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace lucaspoly
