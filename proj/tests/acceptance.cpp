// Acceptance suite: runs every top-level correctness criterion at its stated
// tolerance and sample count (the CheckOptions defaults) and prints one
// pass/fail line per criterion. Exits nonzero if anything fails.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "domainkit/checks.hpp"

namespace {

struct Criterion {
  int id;
  std::string description;
  std::vector<std::string> sources;  // suite/name keys of the backing checks
};

}  // namespace

int main() {
  using namespace domainkit;

  const CheckOptions options;  // defaults are the acceptance-scale counts
  const std::vector<CheckResult> results = run_all_checks(options);

  std::map<std::string, const CheckResult*> by_key;
  for (const auto& r : results) by_key[r.suite + "/" + r.name] = &r;

  const std::vector<Criterion> criteria = {
      {1,
       "decider equivalence: inductive and permutation deciders agree on 10^4 random and 10^4 "
       "comparable pairs per dimension 2..6 (eps 1e-9)",
       {"simplex/decider-equivalence"}},
      {2,
       "order axioms: reflexivity, antisymmetry, transitivity on seeded samples, classical n<=6 "
       "and quantum n<=4 (>=10^3 per axiom)",
       {"simplex/order-axioms", "spectra/order-axioms"}},
      {3,
       "degeneracy: accepted pairs never split a tied positive coordinate pair (eps 1e-9)",
       {"simplex/degeneracy"}},
      {4,
       "mixing law: x below (1-t)x+ty below y on the t-grid 0.1..0.9 over 10^3 comparable pairs",
       {"simplex/mixing-law"}},
      {5,
       "entropy measurements: strictly monotone along both orders; diagonal embedding conserves "
       "entropy within 1e-9 and preserves/reflects order",
       {"simplex/entropy-measurement", "spectra/entropy-measurement",
        "spectra/diagonal-embedding"}},
      {6,
       "classical logic: 2^n - 1 irreducibles for n = 2..8; covering diagram matches the dual "
       "powerset lattice exactly for n = 2..6",
       {"logics/irreducible-enumeration", "logics/hasse-dual-isomorphism"}},
      {7,
       "two-level agreement: ball collinearity matches the spectral decider on 10^4 random and "
       "10^3 comparable pairs",
       {"spectra/bloch-agreement"}},
      {8,
       "quantum logic: spectral order on normalized projections matches reverse subspace "
       "inclusion over 10^3 samples per dimension 2..4",
       {"logics/quantum-logic-consistency"}},
      {9,
       "informatic derivative: matches |f'(p)| within 1e-4 for square, sin, exp, 3x+1 at 5 "
       "points each",
       {"kernel/informatic-derivative"}},
      {10,
       "fixed points: x/2+1 brackets 2 within 1e-9 in 60 steps; cos settles at 0.7390851332 "
       "within 1e-9",
       {"kernel/fixpoint-iteration"}},
      {11,
       "non-continuity: every sampled non-least lower bound of (1/2,1/2,0) is refuted by a "
       "certified chain; path approximants survive all chain challenges (float and exact)",
       {"exactness/degeneracy-refuter", "exactness/path-approximant-evidence",
        "exactness/exact-mode-approximants"}},
      {12,
       "coordinates: decomposition rebuilds 10^3 random states within 1e-9 with every member "
       "below the state",
       {"exactness/coordinate-decomposition"}},
  };

  bool all_ok = true;
  for (const auto& criterion : criteria) {
    bool ok = true;
    long long checked = 0;
    long long violations = 0;
    std::string detail;
    for (const auto& key : criterion.sources) {
      const auto it = by_key.find(key);
      if (it == by_key.end()) {
        ok = false;
        detail = "missing check " + key;
        continue;
      }
      checked += it->second->checked;
      violations += it->second->violations;
      if (!it->second->passed) {
        ok = false;
        if (detail.empty()) detail = key + ": " + it->second->detail;
      }
    }
    all_ok = all_ok && ok;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id << ": "
              << criterion.description << " (checked " << checked << ", violations " << violations
              << ")";
    if (!ok) std::cout << " -- " << detail;
    std::cout << "\n";
  }

  // Remaining module properties ride along; they must hold too.
  long long extra_checked = 0;
  long long extra_violations = 0;
  bool extra_ok = true;
  std::string extra_detail;
  for (const auto& r : results) {
    const std::string key = r.suite + "/" + r.name;
    bool counted = false;
    for (const auto& criterion : criteria) {
      for (const auto& source : criterion.sources) {
        if (source == key) counted = true;
      }
    }
    if (counted) continue;
    extra_checked += r.checked;
    extra_violations += r.violations;
    if (!r.passed) {
      extra_ok = false;
      if (extra_detail.empty()) extra_detail = key + ": " + r.detail;
    }
  }
  all_ok = all_ok && extra_ok;
  std::cout << (extra_ok ? "[PASS]" : "[FAIL]")
            << " supplementary module properties (checked " << extra_checked << ", violations "
            << extra_violations << ")";
  if (!extra_ok) std::cout << " -- " << extra_detail;
  std::cout << "\n";

  return all_ok ? 0 : 1;
}
