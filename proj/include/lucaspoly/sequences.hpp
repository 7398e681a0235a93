#pragma once

// Integer specializations of the polynomial families: residue periods,
// p-adic valuation profiles, the Pell checks and the theta search.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lucaspoly/integer.hpp"

namespace lucaspoly {

/// delannoy is D_n(x0) = L_n(x0+1, x0) with x0 = s0; t0 is ignored.
enum class Family { lucas, circular, flat, sharp, delannoy };

std::string to_string(Family f);
/// Throws InputError for an unknown name.
Family parse_family(const std::string& name);

struct SpecSeq {
  Family family = Family::lucas;
  Integer s0, t0;
  /// 0, or 1 for flat and sharp (undefined at n = 0).
  std::size_t first_index = 0;
  std::vector<Integer> values;  // values[i] is the term of index first_index + i

  const Integer& at(std::size_t n) const;
  std::size_t last_index() const { return first_index + values.size() - 1; }
};

/// Terms first_index..N from the integer recurrences. Terms up to index 30
/// are also compared with direct evaluation of the cached polynomials; a
/// mismatch raises TheoremViolation.
SpecSeq specialize_sequence(Family family, const Integer& s0, const Integer& t0, std::size_t big_n);

struct PeriodReport {
  Integer modulus;
  std::size_t preperiod = 0;
  std::size_t period = 0;
  std::vector<Integer> cycle;  // residues of indices preperiod .. preperiod+period-1
};

/// Eventual period modulo m >= 2 by tabling the pair states (x_n, x_{n+1}).
/// Only the second-order families (lucas, circular, delannoy) are accepted.
PeriodReport detect_period(Family family, const Integer& s0, const Integer& t0, const Integer& m);

struct ValuationProfile {
  Integer prime;
  std::size_t first_index = 0;
  /// nullopt where the term is zero.
  std::vector<std::optional<long>> valuations;
};

ValuationProfile valuation_profile(Family family, const Integer& s0, const Integer& t0, const Integer& p,
                                   std::size_t big_n);

/// nu_3(P_n) == nu_3(3k) for n = 4k and 0 otherwise, for 1 <= n <= n_max,
/// and P_{m+n} == P_m P_{n+1} + P_{m-1} P_n for 1 <= m, n <= addition_max.
struct PellCheck {
  bool valuation_formula = true;
  std::optional<std::size_t> first_valuation_failure;
  bool addition_identity = true;
  bool ok() const { return valuation_formula && addition_identity; }
};

PellCheck pell_valuation_check(std::size_t n_max, std::size_t addition_max = 50);

/// For n = 4k, 1 <= k <= k_max: nu_3(P_{n^2}) == 1 + 2 nu_3(k) < nu_3(P_n^2)
/// and P_n^2 does not divide P_{n^2}.
bool motivating_corollary_check(std::size_t k_max);

enum class ThetaVerdict { consistent, inconsistent, undefined };

struct ThetaReport {
  Integer s0, t0, prime;
  std::size_t bound = 0;
  ThetaVerdict verdict = ThetaVerdict::undefined;
  /// V(n) = sum_{k<=n} nu_p(ev(L_k^flat)) for n = 1..bound (empty if undefined).
  std::vector<long> cumulative;
  /// Real theta with V(n) == floor(n / theta) for all n <= bound form the
  /// interval (lower, upper]; upper is absent when V vanishes identically.
  Rational lower;
  std::optional<Rational> upper;
  /// The only integer in (lower, upper], when there is exactly one.
  std::optional<Integer> theta;
  /// Inconsistent: first n whose constraint empties the interval.
  std::optional<std::size_t> first_violation;
  /// Undefined: first k with ev(L_k^flat) == 0.
  std::optional<std::size_t> first_zero;
};

/// Throws InputError if p is not prime or bound < p.
ThetaReport theta_search(const Integer& s0, const Integer& t0, const Integer& p, std::size_t bound);

/// nu_p of prod_{k=1}^{n} ev(L_k^flat), by forming the product. Throws
/// InputError if the product is zero.
long flat_factorial_valuation_direct(const Integer& s0, const Integer& t0, const Integer& p, std::size_t n);

}  // namespace lucaspoly
