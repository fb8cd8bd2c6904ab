#include "induction/distributions.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "induction/errors.hpp"
#include "induction/numerics.hpp"
#include "induction/prediction.hpp"
#include "induction/reproduction.hpp"
#include "support/oracles.hpp"

namespace induction {
namespace {

TEST(EvidenceData, RejectsMoreSuccessesThanTrials) {
  EXPECT_THROW(EvidenceData(3, 4), DomainError);
  const EvidenceData data(5, 2);
  EXPECT_EQ(data.failures(), 3u);
  EXPECT_FALSE(data.all_successes());
}

TEST(PriorSpec, NamedConstructors) {
  EXPECT_TRUE(PriorSpec::laplace().proper());
  EXPECT_TRUE(PriorSpec::jeffreys_mixture().proper());
  EXPECT_EQ(PriorSpec::jeffreys_mixture().mass_at_one(), 0.5);
  EXPECT_EQ(PriorSpec::jeffreys_mixture().continuous_weight(), 0.5);
  EXPECT_FALSE(PriorSpec::haldane().proper());
  EXPECT_FALSE(PriorSpec::induced_left().proper());
  EXPECT_EQ(PriorSpec::induced_left().alpha(), 1.0);
  EXPECT_EQ(PriorSpec::induced_left().beta(), 0.0);
  EXPECT_EQ(PriorSpec::induced_right().continuous_weight(), 1.0);
  EXPECT_EQ(describe(PriorSpec::beta(2.0, 3.0)), "beta:2,3");
  EXPECT_EQ(describe(PriorSpec::beta(1.0, 0.0)), "induced-left");
}

TEST(PriorSpec, RejectsInvalidParameters) {
  EXPECT_THROW(PriorSpec::beta(-1.0, 1.0), DomainError);
  EXPECT_THROW(PriorSpec::beta(1.0, INFINITY), DomainError);
  EXPECT_THROW(PriorSpec::mixture(0.2, 0.2, 0.5, 1.0, 1.0), DomainError);
  EXPECT_THROW(PriorSpec::mixture(0.0, 0.5, 0.5, 0.0, 1.0), DomainError);
}

TEST(MixedBetaDistribution, RejectsInvalidParameters) {
  EXPECT_THROW(MixedBetaDistribution::mixture(0.5, 0.6, 0.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(MixedBetaDistribution::continuous(0.0, 1.0), DomainError);
  EXPECT_THROW(MixedBetaDistribution::improper_limit(0.0, 0.0), DomainError);
  EXPECT_THROW(MixedBetaDistribution::improper_limit(1.0, 2.0), DomainError);
}

TEST(PosteriorUpdate, LaplaceAllSuccesses) {
  for (Count n : {1u, 5u, 40u}) {
    const auto post = posterior_update(PriorSpec::laplace(), EvidenceData(n, n));
    EXPECT_EQ(post.w(), 1.0);
    EXPECT_EQ(post.a(), n + 1.0);
    EXPECT_EQ(post.b(), 1.0);
    // (n + 1) theta^n
    for (double theta : {0.2, 0.5, 0.9}) {
      EXPECT_NEAR(post.density(theta), (n + 1.0) * std::pow(theta, static_cast<double>(n)),
                  1e-13 * (n + 1.0));
    }
  }
}

TEST(PosteriorUpdate, JeffreysMixtureMatchesQuadratureMarginal) {
  for (unsigned n = 0; n <= 60; ++n) {
    const auto post = posterior_update(PriorSpec::jeffreys_mixture(), EvidenceData(n, n));
    // p1 = P(theta = 1) L / P(T_n = n) with the marginal integrated numerically.
    const long double marginal = testing::mixture_all_success_marginal(n, 0.5L);
    EXPECT_NEAR(post.p1(), static_cast<double>(0.5L / marginal), 1e-15) << n;
    EXPECT_NEAR(post.p1(), (n + 1.0) / (n + 2.0), 1e-15);
    EXPECT_EQ(post.a(), n + 1.0);
    EXPECT_EQ(post.b(), 1.0);
    EXPECT_NEAR(post.p0() + post.p1() + post.w(), 1.0, 1e-12);
  }
}

TEST(PosteriorUpdate, JeffreysMixtureAfterFailureLosesAtom) {
  const auto post = posterior_update(PriorSpec::jeffreys_mixture(), EvidenceData(10, 9));
  EXPECT_EQ(post.p1(), 0.0);
  EXPECT_EQ(post.w(), 1.0);
  EXPECT_EQ(post.a(), 10.0);
  EXPECT_EQ(post.b(), 2.0);
}

TEST(PosteriorUpdate, InducedLeftLimit) {
  for (Count n = 1; n <= 12; ++n) {
    const auto all = posterior_update(PriorSpec::induced_left(), EvidenceData(n, n));
    EXPECT_EQ(all.p1(), 1.0);
    EXPECT_EQ(all.w(), 0.0);
    EXPECT_TRUE(all.is_improper_limit());
    for (Count t = 0; t < n; ++t) {
      const auto post = posterior_update(PriorSpec::induced_left(), EvidenceData(n, t));
      EXPECT_EQ(post, MixedBetaDistribution::continuous(t + 1.0, static_cast<double>(n - t)));
    }
  }
}

TEST(PosteriorUpdate, HaldaneBranches) {
  EXPECT_THROW(posterior_update(PriorSpec::haldane(), EvidenceData(0, 0)), NoUpdatePossible);
  const Count n = 7;
  EXPECT_EQ(posterior_update(PriorSpec::haldane(), EvidenceData(n, n)).p1(), 1.0);
  EXPECT_EQ(posterior_update(PriorSpec::haldane(), EvidenceData(n, 0)).p0(), 1.0);
  for (Count t = 1; t < n; ++t) {
    EXPECT_EQ(posterior_update(PriorSpec::haldane(), EvidenceData(n, t)),
              MixedBetaDistribution::continuous(static_cast<double>(t), static_cast<double>(n - t)));
  }
}

TEST(PosteriorUpdate, PureAtomPriorContradictedByData) {
  const PriorSpec atoms = PriorSpec::mixture(0.5, 0.5, 0.0, 1.0, 1.0);
  EXPECT_THROW(posterior_update(atoms, EvidenceData(4, 2)), NoUpdatePossible);
  const auto post = posterior_update(atoms, EvidenceData(4, 4));
  EXPECT_EQ(post.p1(), 1.0);
}

TEST(PosteriorUpdate, ConjugateShapes) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> shape(0.05, 8.0);
  for (int i = 0; i < 200; ++i) {
    const double alpha = shape(rng);
    const double beta = shape(rng);
    const Count n = std::uniform_int_distribution<Count>(0, 40)(rng);
    const Count t = std::uniform_int_distribution<Count>(0, n)(rng);
    const auto post = posterior_update(PriorSpec::beta(alpha, beta), EvidenceData(n, t));
    EXPECT_EQ(post.a(), alpha + t);
    EXPECT_EQ(post.b(), beta + (n - t));
    EXPECT_EQ(post.w(), 1.0);
  }
}

TEST(PosteriorUpdate, NormalisationByTrapezoid) {
  const PriorSpec priors[] = {PriorSpec::laplace(), PriorSpec::jeffreys_mixture(),
                              PriorSpec::mixture(0.3, 0.2, 0.5, 2.0, 3.0),
                              PriorSpec::beta(1.0, 4.0)};
  const EvidenceData samples[] = {EvidenceData(0, 0), EvidenceData(6, 6), EvidenceData(6, 0),
                                  EvidenceData(9, 4)};
  for (const PriorSpec& prior : priors) {
    for (const EvidenceData& data : samples) {
      const auto post = posterior_update(prior, data);
      EXPECT_NEAR(post.p0() + post.p1() + post.w(), 1.0, 1e-12);
      // Shapes are >= 1 here, so the density is bounded and the rule converges.
      const int points = 10000;
      double integral = 0.0;
      for (int i = 0; i <= points; ++i) {
        const double theta = static_cast<double>(i) / points;
        const double weight = (i == 0 || i == points) ? 0.5 : 1.0;
        integral += weight * post.density(theta) / points;
      }
      EXPECT_NEAR(integral + post.p0() + post.p1(), 1.0, 1e-6);
    }
  }
}

TEST(PosteriorUpdate, NormalisationForSmallShapesViaCdf) {
  const auto post = posterior_update(PriorSpec::jeffreys_continuous(), EvidenceData(0, 0));
  EXPECT_EQ(post.cdf(1.0), 1.0);
  EXPECT_NEAR(post.cdf(1.0 - 1e-15), 1.0, 1e-6);
  EXPECT_NEAR(post.cdf(0.5), 0.5, 1e-12);
}

TEST(PosteriorUpdate, SequentialCoherence) {
  EXPECT_EQ(sequential_coherence_failures(500, 99), 0);
  // A limit atom followed by a contradicting failure resumes from the improper shape.
  const auto atom = posterior_update(PriorSpec::induced_left(), EvidenceData(5, 5));
  ASSERT_EQ(atom.p1(), 1.0);
  EXPECT_EQ(posterior_update(atom, EvidenceData(3, 1)),
            posterior_update(PriorSpec::induced_left(), EvidenceData(8, 6)));
}

TEST(PosteriorUpdate, ImproperLimitMatchesEpsilonSequence) {
  for (double a : {1.0, 0.5}) {
    for (Count n : {1u, 10u, 100u}) {
      const EvidenceData data(n, n);
      // Predictive under Beta(a, eps) is (n + a) / (n + a + eps); extrapolate eps -> 0.
      const double eps[] = {1e-2, 1e-4, 1e-6};
      double values[3];
      for (int i = 0; i < 3; ++i) values[i] = predict_next(PriorSpec::beta(a, eps[i]), data);
      const double slope = (values[1] - values[2]) / (eps[1] - eps[2]);
      const double extrapolated = values[2] - slope * eps[2];
      const double limit = predict_next(PriorSpec::beta(a, 0.0), data);
      EXPECT_EQ(limit, 1.0);
      EXPECT_NEAR(limit, extrapolated, 1e-6);
      EXPECT_LT(values[0], values[1]);
      EXPECT_LT(values[1], values[2]);
    }
  }
}

TEST(DensityGrid, UniformDensity) {
  const auto grid = density_grid(MixedBetaDistribution::continuous(1.0, 1.0), 3);
  ASSERT_EQ(grid.size(), 3u);
  for (const GridPoint& p : grid) {
    EXPECT_EQ(p.kind, GridPoint::Kind::Density);
    EXPECT_NEAR(p.value, 1.0, 1e-15);
    EXPECT_GT(p.theta, 0.0);
    EXPECT_LT(p.theta, 1.0);
  }
}

TEST(DensityGrid, LaplaceAfterOneSuccess) {
  const auto post = posterior_update(PriorSpec::laplace(), EvidenceData(1, 1));
  for (const GridPoint& p : density_grid(post, 3)) EXPECT_NEAR(p.value, 2.0 * p.theta, 1e-15);
}

TEST(DensityGrid, PointMassOnly) {
  const auto grid = density_grid(MixedBetaDistribution::improper_limit(3.0, 0.0), 50);
  ASSERT_EQ(grid.size(), 1u);
  EXPECT_EQ(grid[0].kind, GridPoint::Kind::Atom);
  EXPECT_EQ(grid[0].theta, 1.0);
  EXPECT_EQ(grid[0].value, 1.0);
}

TEST(DensityGrid, MixtureHasAtomAndDensity) {
  const auto post = posterior_update(PriorSpec::jeffreys_mixture(), EvidenceData(1, 1));
  const auto grid = density_grid(post, 4);
  ASSERT_EQ(grid.size(), 5u);
  EXPECT_EQ(grid.back().kind, GridPoint::Kind::Atom);
  EXPECT_NEAR(grid.back().value, 2.0 / 3.0, 1e-15);
  EXPECT_THROW(density_grid(post, 1), DomainError);
}

TEST(MassAccessors, Examples) {
  EXPECT_NEAR(mass_at_one(posterior_update(PriorSpec::jeffreys_mixture(), EvidenceData(1, 1))),
              2.0 / 3.0, 1e-15);
  for (Count n : {1u, 100u, 2190000u}) {
    EXPECT_EQ(mass_at_one(posterior_update(PriorSpec::laplace(), EvidenceData(n, n))), 0.0);
    EXPECT_EQ(mass_at_one(posterior_update(PriorSpec::induced_left(), EvidenceData(n, n))), 1.0);
  }
  EXPECT_EQ(mass_at_zero(posterior_update(PriorSpec::induced_right(), EvidenceData(4, 0))), 1.0);
}

TEST(MixedBetaDistribution, ReflectSwapsEverything) {
  const auto d = MixedBetaDistribution::mixture(0.1, 0.3, 0.6, 2.0, 5.0);
  const auto r = d.reflect();
  EXPECT_EQ(r.p0(), 0.3);
  EXPECT_EQ(r.p1(), 0.1);
  EXPECT_EQ(r.a(), 5.0);
  EXPECT_EQ(r.b(), 2.0);
  EXPECT_EQ(r.reflect(), d);
  EXPECT_NEAR(d.cdf(0.3) + r.cdf(std::nextafter(0.7, 0.0)), 1.0, 1e-12);
}

}  // namespace
}  // namespace induction
