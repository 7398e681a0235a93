// lucaspoly: compute Lucas-type polynomials and run the verification suites.
//
// Exit status: 0 success, 2 usage or input error, 3 theorem violation (a
// failed verification case counts as one).

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "lucaspoly/bipoly.hpp"
#include "lucaspoly/delannoy.hpp"
#include "lucaspoly/divided_diff.hpp"
#include "lucaspoly/errors.hpp"
#include "lucaspoly/lucas.hpp"
#include "lucaspoly/sequences.hpp"
#include "lucaspoly/verify.hpp"

using namespace lucaspoly;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

struct Options {
  std::string format = "text";
  std::uint64_t seed = 20240601;
};

Integer parse_integer(const std::string& text, const char* what) {
  Integer v;
  if (text.empty() || v.set_str(text, 10) != 0) throw InputError(std::string("not an integer for ") + what + ": " + text);
  return v;
}

json record(const BiPoly& p) {
  json out = json::array();
  for (const auto& [i, j, c] : to_record(p)) out.push_back({i, j, c});
  return out;
}

json record(const UniPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : to_record(p)) out.push_back({e, c});
  return out;
}

template <class Poly>
void print_poly(const Options& opt, const Poly& p) {
  if (opt.format == "record") {
    std::cout << record(p).dump() << '\n';
  } else {
    std::cout << serialize(p) << '\n';
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json ints(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

std::string join(const std::vector<Integer>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out;
}

int print_verify(const Options& opt, const VerificationReport& r) {
  if (opt.format == "record") {
    json cases = json::array();
    for (const auto& c : r.cases) cases.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    json out{{"suite", r.suite}, {"max_n", r.max_n}, {"seed", r.seed}, {"cases", cases}, {"passed", r.passed()}};
    std::cout << out.dump() << '\n';
  } else {
    for (const auto& c : r.cases) {
      if (!c.pass) std::cout << "FAIL " << c.name << ": " << c.detail << '\n';
    }
    std::cout << "suite=" << r.suite << " max-n=" << r.max_n << " cases=" << r.cases.size()
              << " passed=" << r.cases.size() - r.failures() << " failed=" << r.failures() << '\n';
  }
  for (const auto& c : r.cases) {
    if (!c.dump.empty()) std::cerr << "counterexample " << c.name << ":\n" << c.dump;
  }
  std::cerr << "time=" << r.wall_seconds << "s\n";
  return r.passed() ? 0 : kExitViolation;
}

std::string theta_verdict(ThetaVerdict v) {
  switch (v) {
    case ThetaVerdict::consistent:
      return "consistent";
    case ThetaVerdict::inconsistent:
      return "inconsistent";
    case ThetaVerdict::undefined:
      return "undefined";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lucas polynomials, their binomial analogues and verification suites", "lucaspoly"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "record"}));
  app.add_option("--seed", opt.seed, "Seed for randomized suites");

  std::size_t n = 0, k = 0, max_n = 0;
  bool flat_flag = false, sharp_flag = false, report_flag = false, oracle_flag = false;
  std::optional<std::string> alpha;
  std::string suite, s_text, t_text, mod_text, prime_text, family_name = "lucas";
  int jobs = 0;

  std::function<int()> action;

  auto add_single = [&](const char* name, const char* help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("N", n)->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(); }; });
    return sub;
  };

  add_single("lucas", "L_N", [&] { print_poly(opt, lucas(n)); return 0; });
  add_single("circular", "K_N", [&] { print_poly(opt, circular(n)); return 0; });
  add_single("flat", "Product of L_p over primes p dividing N", [&] { print_poly(opt, flat(n)); return 0; });
  add_single("sharp", "L_N divided by its flat part", [&] { print_poly(opt, sharp(n)); return 0; });

  auto* lucanomial_cmd = app.add_subcommand("lucanomial", "{N choose K} for the Lucas sequence");
  lucanomial_cmd->add_option("N", n)->required();
  lucanomial_cmd->add_option("K", k)->required();
  auto* lf = lucanomial_cmd->add_flag("--flat", flat_flag);
  lucanomial_cmd->add_flag("--sharp", sharp_flag)->excludes(lf);
  lucanomial_cmd->callback([&] {
    action = [&] {
      print_poly(opt, flat_flag ? flat_lucanomial(n, k) : sharp_flag ? sharp_lucanomial(n, k) : lucanomial(n, k).value);
      return 0;
    };
  });

  auto* catalan_cmd = app.add_subcommand("catalanomial", "{2N choose N} / X_{N+1}");
  catalan_cmd->add_option("N", n)->required();
  auto* cf = catalan_cmd->add_flag("--flat", flat_flag);
  catalan_cmd->add_flag("--sharp", sharp_flag)->excludes(cf);
  catalan_cmd->callback([&] {
    action = [&] {
      print_poly(opt, catalanomial(n, flat_flag ? Flavor::flat : sharp_flag ? Flavor::sharp : Flavor::plain));
      return 0;
    };
  });

  auto* delannomial_cmd = app.add_subcommand("delannomial", "{N choose K} for the Delannoy polynomials");
  delannomial_cmd->add_option("N", n)->required();
  delannomial_cmd->add_option("K", k)->required();
  delannomial_cmd->add_flag("--report", report_flag, "Also report symmetry, unimodality and the central monomial");
  delannomial_cmd->callback([&] {
    action = [&] {
      const UniPoly d = delannomial(n, k);
      if (!report_flag) {
        print_poly(opt, d);
        return 0;
      }
      const auto r = symmetry_unimodality(d);
      if (opt.format == "record") {
        json out{{"polynomial", record(d)},
                 {"symmetric", r.is_symmetric},
                 {"unimodal", r.is_unimodal},
                 {"central", {r.central_monomial.first, r.central_monomial.second.get_str()}}};
        std::cout << out.dump() << '\n';
      } else {
        std::cout << serialize(d) << '\n'
                  << "symmetric=" << yes_no(r.is_symmetric) << " unimodal=" << yes_no(r.is_unimodal)
                  << " central=" << r.central_monomial.first << ":" << r.central_monomial.second.get_str() << '\n';
      }
      return 0;
    };
  });

  auto* divdiff_cmd = app.add_subcommand("divdiff", "S_N = (L_N(s,t) - L_N(t,s)) / (s - t)");
  divdiff_cmd->add_option("N", n)->required();
  divdiff_cmd->add_option("--alpha", alpha, "Use the modified sequence with L_0 = L_1 = alpha");
  divdiff_cmd->callback([&] {
    action = [&] {
      print_poly(opt, alpha ? modified_s(n, parse_integer(*alpha, "--alpha")) : s_n(n));
      return 0;
    };
  });

  auto* charpoly_cmd = app.add_subcommand("charpoly", "Characteristic polynomial of the tridiagonal matrix");
  charpoly_cmd->add_option("N", n)->required();
  charpoly_cmd->add_flag("--oracle", oracle_flag, "Cofactor expansion instead of the recurrence");
  charpoly_cmd->callback([&] {
    action = [&] {
      print_poly(opt, tridiagonal_charpoly(n, oracle_flag));
      return 0;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify_cmd->add_option("SUITE", suite)->required()->check(CLI::IsMember(suites));
  verify_cmd->add_option("--max-n", max_n)->required();
  verify_cmd->add_option("--jobs", jobs, "Worker threads");
  verify_cmd->callback([&] { action = [&] { return print_verify(opt, run_suite(suite, max_n, jobs, opt.seed)); }; });

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", family_name, "lucas, circular, flat, sharp or delannoy");
    sub->add_option("--s", s_text)->required();
    sub->add_option("--t", t_text)->required();
  };

  auto* period_cmd = app.add_subcommand("period", "Eventual period of a specialized sequence");
  add_family(period_cmd);
  period_cmd->add_option("--mod", mod_text)->required();
  period_cmd->callback([&] {
    action = [&] {
      const auto r = detect_period(parse_family(family_name), parse_integer(s_text, "--s"), parse_integer(t_text, "--t"),
                                   parse_integer(mod_text, "--mod"));
      if (opt.format == "record") {
        json out{{"modulus", r.modulus.get_str()}, {"preperiod", r.preperiod}, {"period", r.period}, {"cycle", ints(r.cycle)}};
        std::cout << out.dump() << '\n';
      } else {
        std::cout << "preperiod=" << r.preperiod << " period=" << r.period << " cycle=" << join(r.cycle) << '\n';
      }
      return 0;
    };
  });

  auto* valuation_cmd = app.add_subcommand("valuation", "p-adic valuations of a specialized sequence");
  add_family(valuation_cmd);
  valuation_cmd->add_option("--prime", prime_text)->required();
  valuation_cmd->add_option("--max-n", max_n)->required();
  valuation_cmd->callback([&] {
    action = [&] {
      const auto r = valuation_profile(parse_family(family_name), parse_integer(s_text, "--s"),
                                       parse_integer(t_text, "--t"), parse_integer(prime_text, "--prime"), max_n);
      if (opt.format == "record") {
        json vals = json::array();
        for (const auto& v : r.valuations) vals.push_back(v ? json(*v) : json(nullptr));
        std::cout << json{{"prime", r.prime.get_str()}, {"first_index", r.first_index}, {"valuations", vals}}.dump()
                  << '\n';
      } else {
        for (std::size_t i = 0; i < r.valuations.size(); ++i) {
          const auto& v = r.valuations[i];
          std::cout << "n=" << r.first_index + i << " nu=" << (v ? std::to_string(*v) : "undefined") << '\n';
        }
      }
      return 0;
    };
  });

  auto* theta_cmd = app.add_subcommand("theta", "Search for theta with nu_p(ev(flat)!) = floor(n/theta)");
  theta_cmd->add_option("--s", s_text)->required();
  theta_cmd->add_option("--t", t_text)->required();
  theta_cmd->add_option("--prime", prime_text)->required();
  theta_cmd->add_option("--max-n", max_n)->required();
  theta_cmd->callback([&] {
    action = [&] {
      const auto r = theta_search(parse_integer(s_text, "--s"), parse_integer(t_text, "--t"),
                                  parse_integer(prime_text, "--prime"), max_n);
      if (opt.format == "record") {
        json out{{"s", r.s0.get_str()},      {"t", r.t0.get_str()}, {"prime", r.prime.get_str()},
                 {"max_n", r.bound},         {"verdict", theta_verdict(r.verdict)}};
        out["theta"] = r.theta ? json(r.theta->get_str()) : json(nullptr);
        out["lower"] = r.lower.get_str();
        out["upper"] = r.upper ? json(r.upper->get_str()) : json(nullptr);
        out["first_violation"] = r.first_violation ? json(*r.first_violation) : json(nullptr);
        out["first_zero"] = r.first_zero ? json(*r.first_zero) : json(nullptr);
        out["cumulative"] = r.cumulative;
        std::cout << out.dump() << '\n';
        return 0;
      }
      std::cout << "verdict=" << theta_verdict(r.verdict);
      switch (r.verdict) {
        case ThetaVerdict::undefined:
          std::cout << " first-zero=" << *r.first_zero;
          break;
        case ThetaVerdict::inconsistent:
          std::cout << " first-violation=" << *r.first_violation;
          break;
        case ThetaVerdict::consistent:
          if (r.theta) std::cout << " theta=" << r.theta->get_str();
          if (r.upper) {
            std::cout << " interval=(" << r.lower.get_str() << "," << r.upper->get_str() << "]";
          } else {
            std::cout << " theta>" << r.bound;
          }
          break;
      }
      std::cout << '\n';
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const TheoremViolation& e) {
    std::cerr << e.what() << '\n' << e.dump();
    return kExitViolation;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
