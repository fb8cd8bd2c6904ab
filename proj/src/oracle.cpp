#include "induction/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <thread>

#include "induction/errors.hpp"
#include "induction/numerics.hpp"

namespace induction {
namespace {

void require_trials(const EvidenceData& data, const char* what) {
  if (data.n() == 0) throw DomainError(std::string(what) + ": needs at least one trial");
}

void require_theta(double theta, const char* what) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw DomainError(std::string(what) + ": theta must lie in [0, 1]");
  }
}

ConfidenceInterval point_interval(double theta, double level) {
  if (!(level > 0.0 && level <= 1.0)) throw DomainError("level must lie in (0, 1]");
  return ConfidenceInterval{theta, theta, level, theta};
}

bool accepts_theta_one(const ConfidenceInterval& ci) {
  return ci.degenerate_point.has_value() && *ci.degenerate_point == 1.0;
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Per-t outcome of a procedure at a fixed theta_true.
struct OutcomeTable {
  std::vector<char> covers;
  std::vector<char> accepts_h1;
};

OutcomeTable tabulate(Procedure proc, Count n, double theta_true, double level) {
  OutcomeTable table;
  table.covers.resize(n + 1);
  table.accepts_h1.resize(n + 1);
  for (Count t = 0; t <= n; ++t) {
    const ConfidenceInterval ci = procedure_interval(proc, EvidenceData(n, t), level);
    table.covers[t] = ci.contains(theta_true);
    table.accepts_h1[t] = accepts_theta_one(ci);
  }
  return table;
}

}  // namespace

std::string_view to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::ThetaEqualsOne:
      return "THETA_EQUALS_ONE";
    case Hypothesis::ThetaEqualsZero:
      return "THETA_EQUALS_ZERO";
    case Hypothesis::ThetaInterior:
      return "THETA_INTERIOR";
  }
  return "UNKNOWN";
}

OracleDecision oracle_test_two_way(const EvidenceData& data, double level) {
  require_trials(data, "oracle_test_two_way");
  MixedBetaDistribution dist = posterior_update(PriorSpec::induced_left(), data);
  if (data.all_successes()) {
    return {Hypothesis::ThetaEqualsOne, dist.p1(), point_interval(1.0, level), dist};
  }
  return {Hypothesis::ThetaInterior, 1.0 - dist.p1(), confidence_interval(dist, level), dist};
}

OracleDecision oracle_test_three_way(const EvidenceData& data, double level) {
  require_trials(data, "oracle_test_three_way");
  MixedBetaDistribution dist = posterior_update(PriorSpec::haldane(), data);
  if (data.all_successes()) {
    return {Hypothesis::ThetaEqualsOne, dist.p1(), point_interval(1.0, level), dist};
  }
  if (data.all_failures()) {
    return {Hypothesis::ThetaEqualsZero, dist.p0(), point_interval(0.0, level), dist};
  }
  return {Hypothesis::ThetaInterior, dist.w(), confidence_interval(dist, level), dist};
}

std::string_view to_string(Procedure p) {
  switch (p) {
    case Procedure::TwoWay:
      return "two_way";
    case Procedure::ThreeWay:
      return "three_way";
    case Procedure::MidP:
      return "mid_p";
    case Procedure::LaplaceCredible:
      return "laplace_credible";
  }
  return "unknown";
}

Procedure parse_procedure(std::string_view name) {
  if (name == "two_way") return Procedure::TwoWay;
  if (name == "three_way") return Procedure::ThreeWay;
  if (name == "mid_p") return Procedure::MidP;
  if (name == "laplace_credible") return Procedure::LaplaceCredible;
  throw UnknownProcedure("unknown procedure '" + std::string(name) +
                         "' (expected two_way, three_way, mid_p or laplace_credible)");
}

ConfidenceInterval procedure_interval(Procedure proc, const EvidenceData& data, double level) {
  switch (proc) {
    case Procedure::TwoWay:
      return oracle_test_two_way(data, level).interval;
    case Procedure::ThreeWay:
      return oracle_test_three_way(data, level).interval;
    case Procedure::MidP:
      return confidence_interval(confidence_distribution(PValueKind::MidP, data), level);
    case Procedure::LaplaceCredible:
      require_trials(data, "procedure_interval");
      return confidence_interval(posterior_update(PriorSpec::laplace(), data), level);
  }
  throw UnknownProcedure("procedure_interval: unknown procedure");
}

std::string_view to_string(CoverageMethod m) {
  return m == CoverageMethod::ExactEnumeration ? "exact_enumeration" : "monte_carlo";
}

CoverageReport coverage_exact(double theta_true, Count n, Procedure proc, double level) {
  require_theta(theta_true, "coverage_exact");
  if (n == 0) throw DomainError("coverage_exact: needs at least one trial");
  double coverage = 0.0;
  double accept = 0.0;
  for (Count t = 0; t <= n; ++t) {
    const double pmf = numerics::binomial_pmf(n, t, theta_true);
    if (pmf == 0.0) continue;
    const ConfidenceInterval ci = procedure_interval(proc, EvidenceData(n, t), level);
    if (ci.contains(theta_true)) coverage += pmf;
    if (accepts_theta_one(ci)) accept += pmf;
  }
  return CoverageReport{theta_true, n, proc, level, std::min(coverage, 1.0), std::min(accept, 1.0),
                        CoverageMethod::ExactEnumeration, 0, 0};
}

CoverageReport coverage_monte_carlo(double theta_true, Count n, Procedure proc, double level,
                                    Count replicates, std::uint64_t seed, unsigned threads) {
  require_theta(theta_true, "coverage_monte_carlo");
  if (n == 0) throw DomainError("coverage_monte_carlo: needs at least one trial");
  if (replicates == 0) throw DomainError("coverage_monte_carlo: replicates must be positive");

  const OutcomeTable table = tabulate(proc, n, theta_true, level);
  const std::binomial_distribution<Count> prototype(n, theta_true);

  auto draw = [&](Count k) -> Count {
    if (theta_true == 0.0) return 0;
    if (theta_true == 1.0) return n;
    SplitMix64 rng = SplitMix64::stream(seed, k);
    auto binomial = prototype;  // fresh copy: no cached normal deviate carried between replicates
    return binomial(rng);
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<Count>(threads, replicates));

  struct Tally {
    Count covered = 0;
    Count accepted = 0;
  };
  std::vector<Tally> tallies(threads);
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    const Count chunk = (replicates + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        const Count begin = static_cast<Count>(w) * chunk;
        const Count end = std::min(replicates, begin + chunk);
        Tally local;
        for (Count k = begin; k < end; ++k) {
          const Count t = draw(k);
          local.covered += table.covers[t];
          local.accepted += table.accepts_h1[t];
        }
        tallies[w] = local;
      });
    }
  }
  Tally total;
  for (const Tally& t : tallies) {
    total.covered += t.covered;
    total.accepted += t.accepted;
  }
  const double reps = static_cast<double>(replicates);
  return CoverageReport{theta_true,
                        n,
                        proc,
                        level,
                        static_cast<double>(total.covered) / reps,
                        static_cast<double>(total.accepted) / reps,
                        CoverageMethod::MonteCarlo,
                        replicates,
                        seed};
}

std::vector<CoverageReport> consistency_scan(Procedure proc, double theta_true,
                                             std::span<const Count> n_grid, double level) {
  if (n_grid.empty()) throw DomainError("consistency_scan: empty n grid");
  std::vector<CoverageReport> reports;
  reports.reserve(n_grid.size());
  for (Count n : n_grid) reports.push_back(coverage_exact(theta_true, n, proc, level));
  return reports;
}

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix64(mix64(seed) ^ (index + 0x9E3779B97F4A7C15ULL) * 0xD1B54A32D192ED03ULL));
}

SplitMix64::result_type SplitMix64::operator()() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix64(state_);
}

}  // namespace induction
