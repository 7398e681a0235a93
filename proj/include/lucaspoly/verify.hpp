#pragma once

// Named verification suites behind `lucaspoly verify`. Each suite expands to
// independent cases that may run on several threads; results are stored by
// case index so the report does not depend on scheduling.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lucaspoly {

struct CaseResult {
  std::string name;
  bool pass = false;
  /// Short reason on failure.
  std::string detail;
  /// Inputs and serialized polynomials when a theorem violation was raised.
  std::string dump;
};

struct VerificationReport {
  std::string suite;
  std::size_t max_n = 0;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;
  double wall_seconds = 0;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Suites in the order `all` runs them (not including "all").
const std::vector<std::string>& suite_names();

/// Throws InputError for an unknown suite. "all" concatenates every suite's
/// cases into one report. jobs <= 0 means the OpenMP default.
VerificationReport run_suite(const std::string& suite, std::size_t max_n, int jobs = 0, std::uint64_t seed = 1);

}  // namespace lucaspoly
