#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "induction/confidence.hpp"
#include "induction/distributions.hpp"

namespace induction {

enum class Hypothesis { ThetaEqualsOne, ThetaEqualsZero, ThetaInterior };

std::string_view to_string(Hypothesis h);

struct OracleDecision {
  Hypothesis accepted;
  double confidence_mass;      // confidence attached to the accepted hypothesis
  ConfidenceInterval interval; // {1} / {0} for boundary decisions
  MixedBetaDistribution dist;
};

/// H1: theta = 1 vs H2: theta != 1 under the Beta(1, 0) induced prior.
/// Throws DomainError for n = 0.
OracleDecision oracle_test_two_way(const EvidenceData& data, double level);

/// theta = 1 / theta = 0 / theta in (0, 1) under the Haldane Beta(0, 0) prior.
/// Throws DomainError for n = 0.
OracleDecision oracle_test_three_way(const EvidenceData& data, double level);

/// Interval procedures whose coverage can be evaluated.
enum class Procedure {
  TwoWay,           // oracle_test_two_way
  ThreeWay,         // oracle_test_three_way
  MidP,             // equal-tailed Beta(t + 1/2, n - t + 1/2)
  LaplaceCredible,  // equal-tailed Beta(t + 1, n - t + 1)
};

std::string_view to_string(Procedure p);
/// Throws UnknownProcedure for unregistered names.
Procedure parse_procedure(std::string_view name);

/// Interval the procedure reports for t successes in n trials.
ConfidenceInterval procedure_interval(Procedure proc, const EvidenceData& data, double level);

enum class CoverageMethod { ExactEnumeration, MonteCarlo };

std::string_view to_string(CoverageMethod m);

struct CoverageReport {
  double theta_true;
  Count n;
  Procedure procedure;
  double nominal_level;
  double coverage;
  double accept_h1_rate;  // probability the procedure returns the point interval {1}
  CoverageMethod method;
  Count replicates;    // Monte Carlo only, 0 otherwise
  std::uint64_t seed;  // Monte Carlo only, 0 otherwise
};

/// Sum over t of P(T_n = t | theta_true) [interval(t) contains theta_true].
CoverageReport coverage_exact(double theta_true, Count n, Procedure proc, double level);

/// Seeded simulation. Replicate k draws from its own stream derived from
/// (seed, k), so the result does not depend on `threads`. Throws DomainError
/// for replicates = 0. threads = 0 picks the hardware concurrency.
CoverageReport coverage_monte_carlo(double theta_true, Count n, Procedure proc, double level,
                                    Count replicates, std::uint64_t seed, unsigned threads = 0);

/// Exact reports for each n in the grid. Throws DomainError for an empty grid.
std::vector<CoverageReport> consistency_scan(Procedure proc, double theta_true,
                                             std::span<const Count> n_grid, double level = 0.95);

/// SplitMix64: small counter-based generator used for per-replicate streams.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for replicate `index` of a run seeded with `seed`.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()();

 private:
  std::uint64_t state_;
};

}  // namespace induction
