#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domainkit/rng.hpp"

namespace domainkit {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  long long checked = 0;
  long long violations = 0;
  std::string detail;
};

// Sample counts default to the sizes the acceptance suite runs at; the CLI
// scales them down for quick runs. Every suite derives its random stream
// from `seed`, so a fixed seed fixes the outcome.
struct CheckOptions {
  std::uint64_t seed = Rng::kDefaultSeed;

  int pair_samples = 10000;      // decider agreement suites (per dimension)
  int axiom_samples = 1000;      // order axioms (per dimension, per axiom)
  int property_samples = 1000;   // mixing/degeneracy/entropy/embedding suites
  int bloch_random = 10000;      // two-level agreement, random pairs
  int bloch_comparable = 1000;   // two-level agreement, constructed pairs
  int quantum_samples = 1000;    // subspace-logic consistency (per dimension)
  int exactness_samples = 1000;  // approximants/refuter/decomposition

  int classical_max_dim = 6;
  int spectral_max_dim = 4;
  int irreducible_count_max_dim = 8;
  int hasse_max_dim = 6;

  CheckOptions scaled(int base_samples) const;
};

std::vector<CheckResult> run_kernel_checks(const CheckOptions& options);
std::vector<CheckResult> run_simplex_checks(const CheckOptions& options);
std::vector<CheckResult> run_spectra_checks(const CheckOptions& options);
std::vector<CheckResult> run_logics_checks(const CheckOptions& options);
std::vector<CheckResult> run_exactness_checks(const CheckOptions& options);
std::vector<CheckResult> run_all_checks(const CheckOptions& options);

bool all_passed(const std::vector<CheckResult>& results);
std::string check_results_to_json(const std::vector<CheckResult>& results);

}  // namespace domainkit
