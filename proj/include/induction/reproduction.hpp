#pragma once

// Registry of every closed-form and property claim the library reproduces.
// `induction reproduce` prints these rows and fails if any row fails.

#include <string>
#include <vector>

namespace induction {

struct ReproductionRow {
  std::string claim_id;
  std::string location;          // which result the claim belongs to
  std::string expected_formula;  // the expected value as written, kept for audit
  double expected;
  double computed;
  double abs_diff;
  double tolerance;
  bool pass;  // abs_diff <= tolerance
};

ReproductionRow make_row(std::string claim_id, std::string location, std::string formula,
                         double expected, double computed, double tolerance);

/// Evaluates the whole registry. Takes a few seconds (the Monte Carlo rows
/// dominate).
std::vector<ReproductionRow> reproduce_claims();

// Property suites shared with the test binaries. Each returns the number of
// failing randomized cases.
int sequential_coherence_failures(unsigned cases, unsigned long long seed);
int transform_duality_failures(unsigned cases, unsigned long long seed);

}  // namespace induction
