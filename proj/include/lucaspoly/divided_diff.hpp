#pragma once

// Divided differences S_n = (L_n(s,t) - L_n(t,s)) / (s - t), their
// recurrences, the series evaluation, and the modified Lucas polynomials
// L_n(s,t:alpha).

#include <cstddef>
#include <vector>

#include "lucaspoly/bipoly.hpp"
#include "lucaspoly/integer.hpp"

namespace lucaspoly {

BiPoly swap_vars(const BiPoly& p);

/// (p(s,t) - p(t,s)) / (s - t). The numerator is antisymmetric, so the
/// division is always exact; failure raises TheoremViolation.
BiPoly divided_difference(const BiPoly& p);

/// S_n computed from the definition.
BiPoly s_n_by_definition(std::size_t n);
/// S_n = s S_{n-1} + t S_{n-2} + L_{n-1}(t,s) - L_{n-2}(t,s), S_0 = S_1 = 0.
BiPoly s_n_by_mixed_recurrence(std::size_t n);
/// S_n = (s+t) S_{n-1} + (s+t-st) S_{n-2} - (s^2+t^2) S_{n-3} - st S_{n-4}
/// for n >= 4, seeded with S_0..S_3 = 0, 0, 1, s+t-1.
BiPoly s_n_by_four_term_recurrence(std::size_t n);

/// Checks S_n = s S_{n-1} + t S_{n-2} + L_{n-1}(s,t) - L_{n-2}(s,t) with the
/// Lucas terms in their original variable order. n >= 2.
bool mixed_recurrence_unswapped_holds(std::size_t n);

/// Memoized S_n. Every new index is computed by all three routes above and a
/// disagreement raises TheoremViolation. Safe for concurrent use.
const BiPoly& s_n(std::size_t n);

/// For 2 <= n <= big_n: S_n(1,1) equals f_{n-1} + sum_{k=0}^{n-2} f_{n-2-k} f_k
/// and equals the (n-1)-th coefficient of x(1-x)/(1-x-x^2)^2.
bool second_order_fib_check(std::size_t big_n);

/// sum_{n=0}^{N} S_n(s0,t0) / (s0+t0)^{n+1}. Requires s0, t0 >= 1.
Rational series_partial_sum(const Integer& s0, const Integer& t0, std::size_t big_n);
/// 1 / (s0 t0 (s0+t0-1)).
Rational series_limit(const Integer& s0, const Integer& t0);

/// |limit - partial sum| for N = 0..big_n.
std::vector<Rational> series_deviations(const Integer& s0, const Integer& t0, std::size_t big_n);

/// L_0 = L_1 = alpha, L_n = s L_{n-1} + t L_{n-2}.
BiPoly modified_lucas(std::size_t n, const Integer& alpha);
BiPoly modified_s(std::size_t n, const Integer& alpha);

struct ModifiedLucasCheck {
  std::size_t n = 0;
  Integer alpha;
  bool lucas_homogeneous = false;  // L_n(:alpha) == alpha L_n(:1)
  bool s_homogeneous = false;      // S_n(:alpha) == alpha S_n(:1)
  BiPoly quotient;                 // S_n(:alpha) / (s+t-1)
  bool shift_identity = false;     // L_n(:1) == L_n + t L_{n-1}, n >= 1
};

/// Throws InputError for alpha < 0 and TheoremViolation when the division by
/// s+t-1 fails or the quotient has a negative coefficient.
ModifiedLucasCheck modified_lucas_check(std::size_t n, const Integer& alpha);

}  // namespace lucaspoly
