#pragma once

// Lucas and circular Lucas polynomials, their flat/sharp decomposition,
// lucanomials, Catalanomials and the divisibility identities between them.

#include <cstddef>
#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "lucaspoly/bipoly.hpp"

namespace lucaspoly {

/// Memoized L_n and K_n plus flat/sharp values. Grows lazily to the largest
/// index requested; never evicts. Safe for concurrent use: returned
/// references stay valid for the cache's lifetime.
class LucasCache {
 public:
  const BiPoly& lucas(std::size_t n);
  const BiPoly& circular(std::size_t n);
  /// Product of L_p over the distinct primes p dividing n. flat(1) == 1.
  const BiPoly& flat(std::size_t n);
  /// L_n / flat(n). Throws TheoremViolation if the division is not exact.
  const BiPoly& sharp(std::size_t n);

 private:
  void extend(std::size_t n);

  std::shared_mutex mutex_;
  std::deque<BiPoly> lucas_;
  std::deque<BiPoly> circular_;
  std::map<std::size_t, BiPoly> flat_;
  std::map<std::size_t, BiPoly> sharp_;
};

/// Process-wide cache used by the free functions below.
LucasCache& default_cache();

const BiPoly& lucas(std::size_t n);
const BiPoly& circular(std::size_t n);
const BiPoly& flat(std::size_t n);
const BiPoly& sharp(std::size_t n);

enum class Flavor { plain, flat, sharp };

/// X_n for the chosen flavor: L_n, flat(n) or sharp(n).
const BiPoly& flavored(Flavor flavor, std::size_t n);

struct Lucanomial {
  std::size_t n = 0;
  std::size_t k = 0;
  BiPoly value;
};

/// {n choose k} for the flavor's sequence, by the ratio of products: the
/// running value is multiplied by X_{n-j+1} and exactly divided by X_j for
/// j = 1..k. Throws InputError when k > n and TheoremViolation when a
/// division is not exact.
BiPoly lucanomial_by_ratio(std::size_t n, std::size_t k, Flavor flavor = Flavor::plain);

/// {n choose k} from the Pascal-type recurrence
///   {N choose k} = L_{N-k+1} {N-1 choose k-1} + t L_{k-1} {N-1 choose k}.
BiPoly lucanomial_by_recurrence(std::size_t n, std::size_t k);

/// Both routes; they must agree and the result must have nonnegative
/// coefficients, otherwise TheoremViolation.
Lucanomial lucanomial(std::size_t n, std::size_t k);
BiPoly flat_lucanomial(std::size_t n, std::size_t k);
BiPoly sharp_lucanomial(std::size_t n, std::size_t k);

/// 2 L_{m+n} = K_n L_m + K_m L_n and L_{m+n} = L_m L_{n+1} + t L_{m-1} L_n.
/// For m = 0 the second identity uses t*L_{-1} = 1 (the recurrence run
/// backwards).
bool check_addition_identity(std::size_t m, std::size_t n);

/// 2^b L_{ab} == L_a * sum_{i=1}^{b} 2^{b-i} K_{ab-ia} K_a^{i-1}.
bool division_identity_check(std::size_t a, std::size_t b);

/// exact_div(L_N, L_a) succeeds iff a | N. Requires a >= 2.
bool non_divisibility_converse(std::size_t a, std::size_t big_n);

/// Residue of L_N modulo L_p^2 for p | N, N = n p, next to the two forms of
/// the congruence:
///   stated:    n t^{n-1} L_{p-1}^{n-1}          (reduced mod L_p^2)
///   corrected: L_p * n t^{n-1} L_{p-1}^{n-1}    (reduced mod L_p^2)
/// The corrected form is what L_N / L_p == n t^{n-1} L_{p-1}^{n-1} (mod L_p)
/// gives after multiplying through by L_p.
struct MultiplicityResidue {
  std::size_t p = 0;
  std::size_t big_n = 0;
  BiPoly residue;
  BiPoly stated_form;
  BiPoly corrected_form;

  bool matches_stated() const { return residue == stated_form; }
  bool matches_corrected() const { return residue == corrected_form; }
};

/// Throws InputError unless p >= 2 and p | N; TheoremViolation if the residue
/// is zero (L_p^2 would divide L_N).
MultiplicityResidue multiplicity_free_check(std::size_t p, std::size_t big_n);

/// N = 2^r n with n odd, r >= 1.
struct PowerOfTwoFactorization {
  std::size_t odd_part = 0;
  unsigned r = 0;
  /// L_n, K_{N/2}, K_{N/4}, ..., K_{N/2^r}.
  std::vector<BiPoly> factors;
  /// L_N equals the product of `factors`.
  bool lucas_identity = false;
  /// L_2 * sharp(N) == sharp(n) * prod K_{N/2^i}.
  bool sharp_identity = false;
};

PowerOfTwoFactorization power_of_two_factorization(std::size_t big_n);

/// C_n = {2n choose n}_X / X_{n+1} for the flavor's sequence.
BiPoly catalanomial(std::size_t n, Flavor flavor = Flavor::plain);

/// C_{L_n} == {2n-1 choose n-1} + t {2n-1 choose n-2}, with {m choose -1} = 0.
bool catalan_two_term_identity(std::size_t n);

/// det(s I_n - M_n(t)) with M_n(t) tridiagonal (superdiagonal t, diagonal 0,
/// subdiagonal 1), by cofactor expansion.
BiPoly tridiagonal_charpoly_oracle(std::size_t n);
/// Ch_n from Ch_n = s Ch_{n-1} + t Ch_{n-2}, Ch_0 = 1, Ch_1 = s.
BiPoly tridiagonal_charpoly_recurrence(std::size_t n);
BiPoly tridiagonal_charpoly(std::size_t n, bool oracle);

/// Cofactor (Laplace) expansion along the first row; zero entries skipped.
BiPoly determinant(const std::vector<std::vector<BiPoly>>& matrix);

/// Substitute t -> -t.
BiPoly negate_t(const BiPoly& p);

}  // namespace lucaspoly
