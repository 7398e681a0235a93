#pragma once

// Delannoy numbers, Delannoy polynomials D_n(x) = L_n(x+1, x), delannomials
// and the symmetry / unimodality verdicts.

#include <cstddef>
#include <deque>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "lucaspoly/integer.hpp"
#include "lucaspoly/unipoly.hpp"

namespace lucaspoly {

/// D(a,b) = D(a-1,b) + D(a,b-1) + D(a-1,b-1), D(a,0) = D(0,b) = 1. Grows by
/// whole rows on demand; safe for concurrent use.
class DelannoyTable {
 public:
  Integer at(std::size_t a, std::size_t b);

 private:
  std::shared_mutex mutex_;
  std::deque<std::vector<Integer>> rows_;  // rows_[a][b]
  std::size_t width_ = 0;
};

Integer delannoy_number(std::size_t a, std::size_t b);

/// D_0 = 0, D_1 = 1, D_n = (x+1) D_{n-1} + x D_{n-2}.
const UniPoly& delannoy_poly(std::size_t n);

/// prod D_n..D_{n-k+1} / prod D_k..D_1, by exact division in Z[x]. The
/// result is also compared with the lucanomial-style recurrence; a mismatch
/// or failed division raises TheoremViolation. k > n is an InputError.
UniPoly delannomial(std::size_t n, std::size_t k);

struct SymmetryReport {
  UniPoly polynomial;
  bool is_symmetric = false;
  /// Weak: coefficients rise to a peak then fall, plateaus allowed.
  bool is_unimodal = false;
  /// (degree, coefficient). Degree r odd: index (r+1)/2; r even: r/2.
  std::pair<std::size_t, Integer> central_monomial;
};

/// Throws InputError for the zero polynomial.
SymmetryReport symmetry_unimodality(const UniPoly& p);

}  // namespace lucaspoly
