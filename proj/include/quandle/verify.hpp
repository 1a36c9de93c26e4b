#pragma once

// Self-check sweep behind `quandle verify`: structural invariants and the
// three-way H_2 comparison for every linear Alexander quandle up to a size.

#include <cstdint>
#include <string>
#include <vector>

#include "quandle/quandle_core.hpp"

namespace quandle {

struct CheckTally {
  explicit CheckTally(std::string suite = {}) : name(std::move(suite)) {}

  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what);
};

struct CaseResult {
  std::int64_t n = 0;
  std::int64_t t = 0;
  std::vector<CheckTally> suites;

  std::size_t checks() const;
  std::size_t failures() const;
};

struct VerifyOptions {
  std::int64_t n_max = 8;
  std::uint64_t seed = 20240229;
  std::size_t random_words = 200;
};

/// All units t modulo n, ascending.
std::vector<std::int64_t> units_mod(std::int64_t n);

CaseResult verify_case(const LinearAlexanderParams& p, std::uint64_t seed, std::size_t random_words);

/// Cases for n = 2..n_max and every unit t, sorted by (n, t). Cases run
/// concurrently; the result order does not depend on scheduling.
std::vector<CaseResult> run_verification(const VerifyOptions& options);

}  // namespace quandle
