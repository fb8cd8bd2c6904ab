#include "induction/reproduction.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <utility>

#include "induction/confidence.hpp"
#include "induction/distributions.hpp"
#include "induction/numerics.hpp"
#include "induction/oracle.hpp"
#include "induction/prediction.hpp"

namespace induction {
namespace {

constexpr double kExact = 0.0;
// Values that pass through log-gamma cannot be bit-exact; a few ulps.
constexpr double kUlps = 1e-15;

constexpr unsigned long long kPropertySeed = 20211015ULL;
constexpr unsigned kPropertyCases = 200;
constexpr std::uint64_t kMonteCarloSeed = 7;
constexpr Count kMonteCarloReplicates = 100000;

PriorSpec random_prior(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 7);
  std::uniform_real_distribution<double> shape(0.1, 5.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  switch (pick(rng)) {
    case 0:
      return PriorSpec::laplace();
    case 1:
      return PriorSpec::jeffreys_mixture();
    case 2:
      return PriorSpec::jeffreys_continuous();
    case 3:
      return PriorSpec::haldane();
    case 4:
      return PriorSpec::induced_left();
    case 5:
      return PriorSpec::induced_right();
    case 6:
      return PriorSpec::beta(shape(rng), shape(rng));
    default: {
      const double m0 = 0.4 * unit(rng);
      const double m1 = 0.4 * unit(rng);
      return PriorSpec::mixture(m0, m1, 1.0 - m0 - m1, shape(rng), shape(rng));
    }
  }
}

EvidenceData random_data(std::mt19937_64& rng, Count max_n, Count min_n = 0) {
  const Count n = std::uniform_int_distribution<Count>(min_n, max_n)(rng);
  // Bias towards the boundary counts, where the atoms live.
  std::uniform_int_distribution<int> kind(0, 3);
  switch (kind(rng)) {
    case 0:
      return EvidenceData(n, n);
    case 1:
      return EvidenceData(n, 0);
    default:
      return EvidenceData(n, std::uniform_int_distribution<Count>(0, n)(rng));
  }
}

bool same_distribution(const MixedBetaDistribution& x, const MixedBetaDistribution& y,
                       double tol) {
  const auto close = [tol](double u, double v) {
    return std::fabs(u - v) <= tol * std::max(1.0, std::fabs(u));
  };
  return close(x.a(), y.a()) && close(x.b(), y.b()) && std::fabs(x.p0() - y.p0()) <= tol &&
         std::fabs(x.p1() - y.p1()) <= tol && std::fabs(x.w() - y.w()) <= tol;
}

struct MonteCarloCell {
  Procedure proc;
  double theta;
  Count n;
};

}  // namespace

ReproductionRow make_row(std::string claim_id, std::string location, std::string formula,
                         double expected, double computed, double tolerance) {
  const double diff = std::fabs(expected - computed);
  return ReproductionRow{std::move(claim_id), std::move(location), std::move(formula), expected,
                         computed, diff, tolerance, diff <= tolerance};
}

int sequential_coherence_failures(unsigned cases, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (unsigned i = 0; i < cases; ++i) {
    const PriorSpec prior = random_prior(rng);
    // The Haldane prior needs at least one observation before its first update.
    const EvidenceData first = random_data(rng, 15, prior == PriorSpec::haldane() ? 1 : 0);
    const EvidenceData second = random_data(rng, 15);
    const EvidenceData joint(first.n() + second.n(), first.t() + second.t());
    try {
      const MixedBetaDistribution once = posterior_update(prior, joint);
      const MixedBetaDistribution twice = posterior_update(posterior_update(prior, first), second);
      if (!same_distribution(once, twice, 1e-12)) ++failures;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  return failures;
}

int transform_duality_failures(unsigned cases, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (unsigned i = 0; i < cases; ++i) {
    const PriorSpec prior = random_prior(rng);
    const EvidenceData data = random_data(rng, 30, prior == PriorSpec::haldane() ? 1 : 0);
    try {
      const MixedBetaDistribution direct = posterior_update(prior, data);
      const MixedBetaDistribution mirrored =
          posterior_update(reflect(prior), transform_complement(data)).reflect();
      const double next = predict_next(prior, data);
      const double next_failure_mirrored =
          posterior_update(reflect(prior), transform_complement(data)).mean();
      if (!(direct == mirrored) || std::fabs(next - (1.0 - next_failure_mirrored)) > 1e-15) {
        ++failures;
      }
    } catch (const std::exception&) {
      ++failures;
    }
  }
  return failures;
}

std::vector<ReproductionRow> reproduce_claims() {
  std::vector<ReproductionRow> rows;

  // Laplace rule of succession at n = 2,190,000 days.
  {
    const Count n = 2190000;
    rows.push_back(make_row("laplace_predictive_2190000", "Laplace rule of succession",
                            "2190001/2190002", 2190001.0 / 2190002.0,
                            predict_next(PriorSpec::laplace(), EvidenceData(n, n)), 1e-12));
  }

  // Uniform prior never confirms the general proposition.
  for (Count n : {Count{1}, Count{10}, Count{10000}}) {
    rows.push_back(make_row("broad_zero_n" + std::to_string(n), "uniform prior, P(G|T_n=n)", "0",
                            0.0, prob_general(PriorSpec::laplace(), EvidenceData(n, n)), kExact));
  }

  // Jeffreys mixture: 1/2 < 2/3 < 3/4 < ...
  {
    const PriorSpec jeffreys = PriorSpec::jeffreys_mixture();
    for (Count k = 1; k <= 3; ++k) {
      const double kd = static_cast<double>(k);
      rows.push_back(make_row("jeffreys_chain_k" + std::to_string(k), "Jeffreys mixture, P(G|T_k=k)",
                              "(k+1)/(k+2)", (kd + 1.0) / (kd + 2.0),
                              prob_general(jeffreys, EvidenceData(k, k)), kUlps));
    }
    double worst = 0.0;
    int not_increasing = 0;
    double previous = jeffreys.mass_at_one();
    for (Count k = 1; k <= 100; ++k) {
      const double kd = static_cast<double>(k);
      const double value = prob_general(jeffreys, EvidenceData(k, k));
      worst = std::max(worst, std::fabs(value - (kd + 1.0) / (kd + 2.0)));
      if (!(value > previous)) ++not_increasing;
      previous = value;
    }
    rows.push_back(make_row("jeffreys_chain_1_100", "Jeffreys mixture, P(G|T_k=k)",
                            "max_k |P - (k+1)/(k+2)|", 0.0, worst, kUlps));
    rows.push_back(make_row("jeffreys_chain_increasing", "Jeffreys mixture, P(G|T_k=k)",
                            "#non-increasing steps, k=0..100", 0.0, not_increasing, kExact));

    double worst_next = 0.0;
    for (Count n = 1; n <= 100; ++n) {
      const double nd = static_cast<double>(n);
      const double closed = (nd + 1.0) * (nd + 3.0) / ((nd + 2.0) * (nd + 2.0));
      worst_next = std::max(worst_next, std::fabs(predict_next(jeffreys, EvidenceData(n, n)) - closed));
    }
    rows.push_back(make_row("jeffreys_predictive_1_100", "Jeffreys mixture, P(E|T_n=n)",
                            "max_n |P - (n+1)(n+3)/(n+2)^2|", 0.0, worst_next, 1e-12));

    double worst_carnap = 0.0;
    for (Count n = 0; n <= 100; ++n) {
      const double nd = static_cast<double>(n);
      worst_carnap = std::max(
          worst_carnap,
          std::fabs(confirmation_measure(jeffreys, EvidenceData(n, n)) - nd / (2.0 * (nd + 2.0))));
    }
    rows.push_back(make_row("carnap_jeffreys_0_100", "Carnap confirmation C(G,T_n=n)",
                            "max_n |C - n/(2(n+2))|", 0.0, worst_carnap, 1e-12));
  }

  // Left-side confidence puts all mass on theta = 1 after n straight successes.
  {
    int misses = 0;
    for (Count n = 1; n <= 100; ++n) {
      const EvidenceData data(n, n);
      if (confidence_distribution(PValueKind::LeftSide, data).p1() != 1.0) ++misses;
      if (prob_general(PriorSpec::induced_left(), data) != 1.0) ++misses;
    }
    rows.push_back(make_row("confidence_oracle_1_100", "left-side confidence, P(G|T_n=n)",
                            "#n with p1 != 1 or P(G) != 1", 0.0, misses, kExact));
  }

  // Induced priors are data-free.
  {
    int mismatches = 0;
    const std::pair<PValueKind, PriorSpec> expected[] = {
        {PValueKind::RightSide, PriorSpec::beta(0.0, 1.0)},
        {PValueKind::LeftSide, PriorSpec::beta(1.0, 0.0)},
        {PValueKind::MidP, PriorSpec::beta(0.5, 0.5)},
    };
    for (const auto& [kind, prior] : expected) {
      for (Count n = 1; n <= 30; ++n) {
        for (Count t = 0; t <= n; ++t) {
          const EvidenceData data(n, t);
          if (!confidence_distribution(kind, data).has_continuous_part()) continue;
          if (!(induced_prior(kind, data) == prior)) ++mismatches;
        }
      }
    }
    rows.push_back(make_row("induced_priors_n30", "induced model priors",
                            "#(kind,n,t) not giving Beta(0,1)/Beta(1,0)/Beta(1/2,1/2)", 0.0,
                            mismatches, kExact));
  }

  // P(T_n >= t | theta) = I_theta(t, n - t + 1).
  {
    double worst = 0.0;
    for (Count n = 1; n <= 50; ++n) {
      for (Count t = 1; t <= n; ++t) {
        for (int i = 0; i <= 100; ++i) {
          const double theta = i / 100.0;
          const double tail = numerics::binomial_right_tail(n, t, theta);
          const double ibeta = numerics::regularized_incomplete_beta(
              theta, static_cast<double>(t), static_cast<double>(n - t + 1));
          worst = std::max(worst, std::fabs(tail - ibeta));
        }
      }
    }
    rows.push_back(make_row("tail_identity_n50", "right-side P-value as incomplete beta",
                            "max |P(T>=t) - I_theta(t,n-t+1)|", 0.0, worst, 1e-10));
  }

  // (n + alpha) / (n + alpha + beta).
  {
    const double shapes[] = {0.5, 1.0, 2.0, 3.5, 10.0};
    double worst = 0.0;
    for (double alpha : shapes) {
      for (double beta : shapes) {
        for (Count n = 0; n <= 50; ++n) {
          const double nd = static_cast<double>(n);
          const double value = predict_next(PriorSpec::beta(alpha, beta), EvidenceData(n, n));
          worst = std::max(worst, std::fabs(value - (nd + alpha) / (nd + alpha + beta)));
        }
      }
    }
    rows.push_back(make_row("general_beta_predictive", "Beta(alpha,beta) predictive",
                            "max |P - (n+alpha)/(n+alpha+beta)|", 0.0, worst, 1e-12));
  }

  // Acceptance of theta = 1 happens exactly when T_n = n.
  {
    double worst = 0.0;
    for (double theta : {0.5, 0.9, 0.99, 1.0}) {
      for (Count n : {Count{10}, Count{100}}) {
        const CoverageReport report = coverage_exact(theta, n, Procedure::TwoWay, 0.95);
        worst = std::max(worst, std::fabs(report.accept_h1_rate - std::pow(theta, static_cast<double>(n))));
      }
    }
    rows.push_back(make_row("oracle_consistency", "two-way oracle test, P(accept H1)",
                            "max |rate - theta^n|", 0.0, worst, kExact));
  }

  rows.push_back(make_row("sequential_coherence", "posterior update", "#failing cases of 200",
                          0.0, sequential_coherence_failures(kPropertyCases, kPropertySeed),
                          kExact));
  rows.push_back(make_row("transform_duality", "complement-transformed data",
                          "#failing cases of 200", 0.0,
                          transform_duality_failures(kPropertyCases, kPropertySeed + 1), kExact));

  // Monte Carlo against exact enumeration.
  {
    const MonteCarloCell cells[] = {
        {Procedure::TwoWay, 0.5, 20},           {Procedure::TwoWay, 0.9, 50},
        {Procedure::TwoWay, 0.99, 100},         {Procedure::TwoWay, 0.3, 10},
        {Procedure::ThreeWay, 0.5, 20},         {Procedure::ThreeWay, 0.9, 50},
        {Procedure::ThreeWay, 0.999, 100},      {Procedure::ThreeWay, 0.1, 30},
        {Procedure::MidP, 0.5, 20},             {Procedure::MidP, 0.9, 50},
        {Procedure::LaplaceCredible, 0.5, 20},  {Procedure::LaplaceCredible, 0.7, 40},
    };
    const auto start = std::chrono::steady_clock::now();
    int outside = 0;
    const double reps = static_cast<double>(kMonteCarloReplicates);
    for (const MonteCarloCell& cell : cells) {
      const CoverageReport exact = coverage_exact(cell.theta, cell.n, cell.proc, 0.95);
      const CoverageReport mc = coverage_monte_carlo(cell.theta, cell.n, cell.proc, 0.95,
                                                     kMonteCarloReplicates, kMonteCarloSeed);
      const double se_cov = std::sqrt(exact.coverage * (1.0 - exact.coverage) / reps);
      const double se_h1 = std::sqrt(exact.accept_h1_rate * (1.0 - exact.accept_h1_rate) / reps);
      if (std::fabs(mc.coverage - exact.coverage) > 4.0 * se_cov) ++outside;
      if (std::fabs(mc.accept_h1_rate - exact.accept_h1_rate) > 4.0 * se_h1) ++outside;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(make_row("mc_vs_exact_12_cells", "coverage, Monte Carlo vs enumeration",
                            "#cells beyond 4 MC standard errors", 0.0, outside, kExact));
    rows.push_back(make_row("mc_runtime_seconds", "coverage, Monte Carlo vs enumeration",
                            "elapsed seconds, bound 60", 0.0, seconds, 60.0));
  }

  return rows;
}

}  // namespace induction
