#pragma once

// Whole-family checks and their OpenMP fan-out. Every parallel entry point
// has a serial twin with identical output, kept as the reference.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "junior/deformations.hpp"

namespace junior {

/// Thread cap from JUNIOR_RESOLVE_THREADS (unset or invalid: OpenMP default).
int thread_limit();

MinimalityTable minimality_sweep_parallel(const Simplex& simplex, std::size_t cap = 200'000,
                                          EnumerationBound bound = {});

struct VerifyOptions {
  std::int64_t rmax = 31;
  std::int64_t minimality_rmax = 13;  // flip-graph sweeps only up to here
  std::size_t triangulation_cap = 200'000;
  std::size_t term_cap = 1'000'000;
  EnumerationBound bound;
};

struct Violation {
  std::int64_t r = 0, a = 0, b = 0;
  std::string check;
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyReport {
  std::size_t actions = 0;
  std::size_t checks = 0;
  std::vector<Violation> violations;  // ordered by action, then check
  bool ok() const { return violations.empty(); }
};

/// Every invariant for one action; appends to `out` and returns the number
/// of checks run.
std::size_t verify_action(const GroupAction& action, const VerifyOptions& opt,
                          std::vector<Violation>& out);

VerifyReport verify_all(const VerifyOptions& opt);
VerifyReport verify_all_serial(const VerifyOptions& opt);

}  // namespace junior
