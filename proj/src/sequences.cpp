#include "lucaspoly/sequences.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "lucaspoly/bipoly.hpp"
#include "lucaspoly/delannoy.hpp"
#include "lucaspoly/errors.hpp"
#include "lucaspoly/lucas.hpp"

namespace lucaspoly {

namespace {

constexpr std::size_t kSpotCheckLimit = 30;

// x_0, x_1 and the recurrence x_n = a x_{n-1} + b x_{n-2}.
struct SecondOrder {
  Integer x0, x1, a, b;
};

SecondOrder second_order(Family family, const Integer& s0, const Integer& t0) {
  switch (family) {
    case Family::lucas:
      return {0, 1, s0, t0};
    case Family::circular:
      return {2, s0, s0, t0};
    case Family::delannoy:
      return {0, 1, s0 + 1, s0};
    default:
      throw InputError("family " + to_string(family) + " is not a second-order recurrence");
  }
}

std::vector<Integer> run_recurrence(const SecondOrder& r, std::size_t big_n) {
  std::vector<Integer> v{r.x0, r.x1};
  for (std::size_t n = 2; n <= big_n; ++n) v.push_back(r.a * v[n - 1] + r.b * v[n - 2]);
  v.resize(big_n + 1);
  return v;
}

Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer direct_value(Family family, std::size_t n, const Integer& s0, const Integer& t0) {
  switch (family) {
    case Family::lucas:
      return eval(lucas(n), s0, t0);
    case Family::circular:
      return eval(circular(n), s0, t0);
    case Family::flat:
      return eval(flat(n), s0, t0);
    case Family::sharp:
      return eval(sharp(n), s0, t0);
    case Family::delannoy:
      return delannoy_poly(n).eval(s0);
  }
  return 0;
}

void require_prime(const Integer& p) {
  if (p < 2 || !is_prime(p)) throw InputError("not a prime: " + p.get_str());
}

std::vector<Integer> pell_numbers(std::size_t big_n) { return run_recurrence({0, 1, 2, 1}, big_n); }

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::lucas:
      return "lucas";
    case Family::circular:
      return "circular";
    case Family::flat:
      return "flat";
    case Family::sharp:
      return "sharp";
    case Family::delannoy:
      return "delannoy";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::lucas, Family::circular, Family::flat, Family::sharp, Family::delannoy}) {
    if (to_string(f) == name) return f;
  }
  throw InputError("unknown family: " + name);
}

const Integer& SpecSeq::at(std::size_t n) const {
  if (n < first_index || n > last_index()) throw InputError("index " + std::to_string(n) + " outside the computed range");
  return values[n - first_index];
}

SpecSeq specialize_sequence(Family family, const Integer& s0, const Integer& t0, std::size_t big_n) {
  SpecSeq seq;
  seq.family = family;
  seq.s0 = s0;
  seq.t0 = t0;
  if (family == Family::flat || family == Family::sharp) {
    if (big_n < 1) throw InputError("flat and sharp sequences start at n = 1");
    seq.first_index = 1;
    const auto l = run_recurrence({0, 1, s0, t0}, big_n);
    for (std::size_t n = 1; n <= big_n; ++n) {
      Integer f = 1;
      for (auto p : distinct_prime_divisors(n)) f *= l[p];
      if (family == Family::flat) {
        seq.values.push_back(f);
      } else if (f != 0) {
        if (!mpz_divisible_p(l[n].get_mpz_t(), f.get_mpz_t())) {
          throw TheoremViolation("ev(L_n^flat) divides ev(L_n)", "n = " + std::to_string(n) + "\ns = " + s0.get_str() +
                                                                        ", t = " + t0.get_str() + "\n");
        }
        seq.values.push_back(l[n] / f);
      } else {
        seq.values.push_back(eval(sharp(n), s0, t0));
      }
    }
  } else {
    seq.values = run_recurrence(second_order(family, s0, t0), big_n);
  }
  for (std::size_t n = seq.first_index; n <= std::min(big_n, kSpotCheckLimit); ++n) {
    const Integer direct = direct_value(family, n, s0, t0);
    if (direct != seq.at(n)) {
      throw TheoremViolation("specialized recurrence agrees with polynomial evaluation",
                             "family = " + to_string(family) + ", n = " + std::to_string(n) + "\nrecurrence = " +
                                 seq.at(n).get_str() + "\nevaluation = " + direct.get_str() + "\n");
    }
  }
  return seq;
}

PeriodReport detect_period(Family family, const Integer& s0, const Integer& t0, const Integer& m) {
  if (m < 2) throw InputError("modulus must be at least 2");
  const SecondOrder r = second_order(family, s0, t0);
  const Integer a = mod_floor(r.a, m), b = mod_floor(r.b, m);
  std::map<std::pair<Integer, Integer>, std::size_t> seen;
  std::vector<Integer> residues{mod_floor(r.x0, m), mod_floor(r.x1, m)};
  for (std::size_t n = 0;; ++n) {
    auto [it, inserted] = seen.emplace(std::make_pair(residues[n], residues[n + 1]), n);
    if (!inserted) {
      PeriodReport report;
      report.modulus = m;
      report.preperiod = it->second;
      report.period = n - it->second;
      report.cycle.assign(residues.begin() + static_cast<long>(report.preperiod),
                          residues.begin() + static_cast<long>(n));
      return report;
    }
    residues.push_back(mod_floor(a * residues[n + 1] + b * residues[n], m));
  }
}

ValuationProfile valuation_profile(Family family, const Integer& s0, const Integer& t0, const Integer& p,
                                   std::size_t big_n) {
  require_prime(p);
  const SpecSeq seq = specialize_sequence(family, s0, t0, big_n);
  ValuationProfile out;
  out.prime = p;
  out.first_index = seq.first_index;
  for (const auto& v : seq.values) {
    out.valuations.push_back(v == 0 ? std::nullopt : std::optional<long>(nu_p(v, p)));
  }
  return out;
}

PellCheck pell_valuation_check(std::size_t n_max, std::size_t addition_max) {
  if (n_max < 1) throw InputError("pell_valuation_check needs N >= 1");
  PellCheck out;
  const auto pell = pell_numbers(std::max(n_max, 2 * addition_max + 1));
  const Integer three = 3;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const long expected = n % 4 == 0 ? nu_p(Integer(static_cast<unsigned long>(3 * (n / 4))), three) : 0;
    if (nu_p(pell[n], three) != expected) {
      out.valuation_formula = false;
      out.first_valuation_failure = n;
      break;
    }
  }
  for (std::size_t m = 1; m <= addition_max && out.addition_identity; ++m) {
    for (std::size_t n = 1; n <= addition_max; ++n) {
      if (pell[m + n] != pell[m] * pell[n + 1] + pell[m - 1] * pell[n]) {
        out.addition_identity = false;
        break;
      }
    }
  }
  return out;
}

bool motivating_corollary_check(std::size_t k_max) {
  if (k_max < 1) throw InputError("motivating_corollary_check needs k >= 1");
  const std::size_t n_top = 4 * k_max;
  const auto pell = pell_numbers(n_top * n_top);
  const Integer three = 3;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const std::size_t n = 4 * k;
    const long vk = nu_p(Integer(static_cast<unsigned long>(k)), three);
    const Integer square = pell[n] * pell[n];
    const long v_big = nu_p(pell[n * n], three);
    if (v_big != 1 + 2 * vk) return false;
    if (!(v_big < nu_p(square, three))) return false;
    if (mpz_divisible_p(pell[n * n].get_mpz_t(), square.get_mpz_t())) return false;
  }
  return true;
}

ThetaReport theta_search(const Integer& s0, const Integer& t0, const Integer& p, std::size_t bound) {
  require_prime(p);
  if (Integer(static_cast<unsigned long>(bound)) < p) throw InputError("theta search needs N >= p");
  ThetaReport report;
  report.s0 = s0;
  report.t0 = t0;
  report.prime = p;
  report.bound = bound;
  const SpecSeq flat_values = specialize_sequence(Family::flat, s0, t0, bound);
  for (std::size_t k = 1; k <= bound; ++k) {
    if (flat_values.at(k) == 0) {
      report.verdict = ThetaVerdict::undefined;
      report.first_zero = k;
      return report;
    }
  }
  long running = 0;
  report.lower = 0;
  report.verdict = ThetaVerdict::consistent;
  for (std::size_t n = 1; n <= bound; ++n) {
    running += nu_p(flat_values.at(n), p);
    report.cumulative.push_back(running);
    if (report.verdict != ThetaVerdict::consistent) continue;
    // floor(n / theta) == V  <=>  n / (V+1) < theta <= n / V.
    const Integer big_n = static_cast<unsigned long>(n);
    report.lower = std::max(report.lower, Rational(make_rational(big_n, running + 1)));
    if (running > 0) {
      const Rational hi = make_rational(big_n, running);
      report.upper = report.upper ? std::min(*report.upper, hi) : hi;
    }
    if (report.upper && !(report.lower < *report.upper)) {
      report.verdict = ThetaVerdict::inconsistent;
      report.first_violation = n;
    }
  }
  if (report.verdict == ThetaVerdict::consistent && report.upper) {
    // Integers in (lower, upper].
    Integer first;
    mpz_fdiv_q(first.get_mpz_t(), report.lower.get_num_mpz_t(), report.lower.get_den_mpz_t());
    first += 1;
    Integer last;
    mpz_fdiv_q(last.get_mpz_t(), report.upper->get_num_mpz_t(), report.upper->get_den_mpz_t());
    if (first == last) report.theta = first;
  }
  return report;
}

long flat_factorial_valuation_direct(const Integer& s0, const Integer& t0, const Integer& p, std::size_t n) {
  require_prime(p);
  const SpecSeq flat_values = specialize_sequence(Family::flat, s0, t0, std::max<std::size_t>(n, 1));
  Integer product = 1;
  for (std::size_t k = 1; k <= n; ++k) product *= flat_values.at(k);
  if (product == 0) throw InputError("flat factorial vanishes");
  return nu_p(product, p);
}

}  // namespace lucaspoly
