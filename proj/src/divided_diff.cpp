#include "lucaspoly/divided_diff.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "lucaspoly/errors.hpp"
#include "lucaspoly/lucas.hpp"

namespace lucaspoly {

namespace {

const BiPoly& s_minus_t() {
  static const BiPoly p = BiPoly::s() - BiPoly::t();
  return p;
}

const BiPoly& s_plus_t_minus_1() {
  static const BiPoly p = BiPoly::s() + BiPoly::t() - BiPoly(1);
  return p;
}

class DividedDiffSeq {
 public:
  const BiPoly& at(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= n) {
      const std::size_t m = values_.size();
      BiPoly by_def = s_n_by_definition(m);
      const BiPoly by_mixed = s_n_by_mixed_recurrence(m);
      const BiPoly by_four = s_n_by_four_term_recurrence(m);
      if (by_def != by_mixed || by_def != by_four) {
        throw TheoremViolation("divided-difference recurrences agree",
                               "n = " + std::to_string(m) + "\ndefinition = " + serialize(by_def) +
                                   "\nmixed = " + serialize(by_mixed) + "\nfour-term = " + serialize(by_four) + "\n");
      }
      values_.push_back(std::move(by_def));
    }
    return values_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<BiPoly> values_;
};

Integer fib(std::size_t n) {
  Integer a = 0, b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer c = a + b;
    a = b;
    b = c;
  }
  return a;
}

}  // namespace

BiPoly swap_vars(const BiPoly& p) { return p.swap_vars(); }

BiPoly divided_difference(const BiPoly& p) {
  const BiPoly numerator = p - p.swap_vars();
  auto q = exact_div(numerator, s_minus_t());
  if (!q) throw TheoremViolation("antisymmetric polynomial is divisible by s - t", "p = " + serialize(p) + "\n");
  return *q;
}

BiPoly s_n_by_definition(std::size_t n) { return divided_difference(lucas(n)); }

BiPoly s_n_by_mixed_recurrence(std::size_t n) {
  BiPoly prev2, prev1;  // S_0, S_1
  if (n < 2) return {};
  BiPoly cur;
  for (std::size_t m = 2; m <= n; ++m) {
    cur = BiPoly::s() * prev1 + BiPoly::t() * prev2 + lucas(m - 1).swap_vars() - lucas(m - 2).swap_vars();
    prev2 = std::move(prev1);
    prev1 = cur;
  }
  return cur;
}

BiPoly s_n_by_four_term_recurrence(std::size_t n) {
  const BiPoly s = BiPoly::s(), t = BiPoly::t();
  std::vector<BiPoly> v{BiPoly(), BiPoly(), BiPoly(1), s + t - BiPoly(1)};
  const BiPoly c1 = s + t, c2 = s + t - s * t, c3 = s * s + t * t, c4 = s * t;
  for (std::size_t m = 4; m <= n; ++m) {
    v.push_back(c1 * v[m - 1] + c2 * v[m - 2] - c3 * v[m - 3] - c4 * v[m - 4]);
  }
  return v[n];
}

bool mixed_recurrence_unswapped_holds(std::size_t n) {
  if (n < 2) throw InputError("mixed recurrence needs n >= 2");
  return s_n(n) == BiPoly::s() * s_n(n - 1) + BiPoly::t() * s_n(n - 2) + lucas(n - 1) - lucas(n - 2);
}

const BiPoly& s_n(std::size_t n) {
  static DividedDiffSeq seq;
  return seq.at(n);
}

bool second_order_fib_check(std::size_t big_n) {
  if (big_n < 2) throw InputError("second_order_fib_check needs N >= 2");
  // Coefficients of x(1-x)/(1-x-x^2)^2; the denominator is
  // 1 - 2x - x^2 + 2x^3 + x^4.
  std::vector<Integer> g(big_n, Integer(0));
  for (std::size_t j = 0; j < big_n; ++j) {
    Integer v = j == 1 ? 1 : (j == 2 ? -1 : 0);
    if (j >= 1) v += 2 * g[j - 1];
    if (j >= 2) v += g[j - 2];
    if (j >= 3) v -= 2 * g[j - 3];
    if (j >= 4) v -= g[j - 4];
    g[j] = v;
  }
  for (std::size_t n = 2; n <= big_n; ++n) {
    const Integer a = eval(s_n(n), 1, 1);
    Integer rhs = fib(n - 1);
    for (std::size_t k = 0; k + 2 <= n; ++k) rhs += fib(n - 2 - k) * fib(k);
    if (a != rhs || a != g[n - 1]) return false;
  }
  return true;
}

Rational series_partial_sum(const Integer& s0, const Integer& t0, std::size_t big_n) {
  if (s0 < 1 || t0 < 1) throw InputError("series evaluation needs s, t >= 1");
  const Integer base = s0 + t0;
  Rational sum = 0;
  Integer power = base;
  for (std::size_t n = 0; n <= big_n; ++n) {
    sum += make_rational(eval(s_n(n), s0, t0), power);
    power *= base;
  }
  return sum;
}

Rational series_limit(const Integer& s0, const Integer& t0) {
  if (s0 < 1 || t0 < 1) throw InputError("series evaluation needs s, t >= 1");
  return make_rational(1, s0 * t0 * (s0 + t0 - 1));
}

std::vector<Rational> series_deviations(const Integer& s0, const Integer& t0, std::size_t big_n) {
  const Rational limit = series_limit(s0, t0);
  const Integer base = s0 + t0;
  std::vector<Rational> out;
  Rational sum = 0;
  Integer power = base;
  for (std::size_t n = 0; n <= big_n; ++n) {
    sum += make_rational(eval(s_n(n), s0, t0), power);
    power *= base;
    out.push_back(abs(limit - sum));
  }
  return out;
}

BiPoly modified_lucas(std::size_t n, const Integer& alpha) {
  if (alpha < 0) throw InputError("alpha must be nonnegative");
  BiPoly prev(alpha), cur(alpha);
  if (n == 0) return prev;
  for (std::size_t m = 2; m <= n; ++m) {
    BiPoly next = BiPoly::s() * cur + BiPoly::t() * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BiPoly modified_s(std::size_t n, const Integer& alpha) { return divided_difference(modified_lucas(n, alpha)); }

ModifiedLucasCheck modified_lucas_check(std::size_t n, const Integer& alpha) {
  ModifiedLucasCheck out;
  out.n = n;
  out.alpha = alpha;
  const BiPoly l_alpha = modified_lucas(n, alpha), l_one = modified_lucas(n, 1);
  out.lucas_homogeneous = l_alpha == l_one * BiPoly(alpha);
  const BiPoly s_alpha = divided_difference(l_alpha);
  out.s_homogeneous = s_alpha == divided_difference(l_one) * BiPoly(alpha);
  const std::string where = "n = " + std::to_string(n) + ", alpha = " + alpha.get_str() + "\nS = " + serialize(s_alpha) + "\n";
  auto q = exact_div(s_alpha, s_plus_t_minus_1());
  if (!q) throw TheoremViolation("s + t - 1 divides the modified divided difference", where);
  if (!q->has_nonnegative_coefficients()) {
    throw TheoremViolation("modified divided-difference quotient has nonnegative coefficients",
                           where + "quotient = " + serialize(*q) + "\n");
  }
  out.quotient = std::move(*q);
  out.shift_identity = n == 0 || l_one == lucas(n) + BiPoly::t() * lucas(n - 1);
  return out;
}

}  // namespace lucaspoly
