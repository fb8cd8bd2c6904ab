#include "induction/distributions.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "induction/errors.hpp"

namespace induction {
namespace {

constexpr double kWeightTolerance = 1e-12;

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

void require_weights(double m0, double m1, double w, const char* what) {
  if (!is_probability(m0) || !is_probability(m1) || !is_probability(w)) {
    throw DomainError(std::string(what) + ": weights must lie in [0, 1]");
  }
  if (std::fabs(m0 + m1 + w - 1.0) > kWeightTolerance) {
    throw DomainError(std::string(what) + ": weights must sum to 1");
  }
}

void require_positive_shape(double a, double b, const char* what) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError(std::string(what) + ": Beta shapes must be positive and finite");
  }
}

std::string format_number(double x) {
  std::ostringstream os;
  os.precision(15);
  os << x;
  return os.str();
}

}  // namespace

EvidenceData::EvidenceData(Count n, Count t) : n_(n), t_(t) {
  if (t > n) throw DomainError("EvidenceData: successes t must not exceed trials n");
}

PriorSpec PriorSpec::beta(double alpha, double beta) {
  if (!(alpha >= 0.0) || !(beta >= 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw DomainError("PriorSpec::beta: shapes must be finite and non-negative");
  }
  return PriorSpec(0.0, 0.0, 1.0, alpha, beta);
}

PriorSpec PriorSpec::mixture(double mass_at_zero, double mass_at_one, double continuous_weight,
                             double alpha, double beta) {
  require_weights(mass_at_zero, mass_at_one, continuous_weight, "PriorSpec::mixture");
  require_positive_shape(alpha, beta, "PriorSpec::mixture");
  return PriorSpec(mass_at_zero, mass_at_one, continuous_weight, alpha, beta);
}

PriorSpec reflect(const PriorSpec& prior) {
  if (!prior.proper()) return PriorSpec::beta(prior.beta(), prior.alpha());
  return PriorSpec::mixture(prior.mass_at_one(), prior.mass_at_zero(), prior.continuous_weight(),
                            prior.beta(), prior.alpha());
}

std::string describe(const PriorSpec& prior) {
  if (prior == PriorSpec::laplace()) return "laplace";
  if (prior == PriorSpec::jeffreys_mixture()) return "jeffreys-mixture";
  if (prior == PriorSpec::jeffreys_continuous()) return "jeffreys-continuous";
  if (prior == PriorSpec::haldane()) return "haldane";
  if (prior == PriorSpec::induced_right()) return "induced-right";
  if (prior == PriorSpec::induced_left()) return "induced-left";
  const std::string shape = format_number(prior.alpha()) + "," + format_number(prior.beta());
  if (prior.mass_at_zero() == 0.0 && prior.mass_at_one() == 0.0) return "beta:" + shape;
  return "mixture:" + format_number(prior.mass_at_zero()) + "," +
         format_number(prior.mass_at_one()) + "," + format_number(prior.continuous_weight()) +
         "," + shape;
}

MixedBetaDistribution MixedBetaDistribution::continuous(double a, double b) {
  require_positive_shape(a, b, "MixedBetaDistribution::continuous");
  return MixedBetaDistribution(0.0, 0.0, 1.0, a, b);
}

MixedBetaDistribution MixedBetaDistribution::mixture(double p0, double p1, double w, double a,
                                                     double b) {
  require_weights(p0, p1, w, "MixedBetaDistribution::mixture");
  require_positive_shape(a, b, "MixedBetaDistribution::mixture");
  return MixedBetaDistribution(p0, p1, w, a, b);
}

MixedBetaDistribution MixedBetaDistribution::improper_limit(double a, double b) {
  if (!(a >= 0.0) || !(b >= 0.0) || !std::isfinite(a) || !std::isfinite(b) ||
      (a > 0.0) == (b > 0.0)) {
    throw DomainError("MixedBetaDistribution::improper_limit: exactly one shape must be zero");
  }
  // Beta(a, 0) concentrates at 1, Beta(0, b) at 0.
  return b == 0.0 ? MixedBetaDistribution(0.0, 1.0, 0.0, a, b)
                  : MixedBetaDistribution(1.0, 0.0, 0.0, a, b);
}

double MixedBetaDistribution::mean() const {
  if (!has_continuous_part()) return p1_;
  return p1_ + w_ * a_ / (a_ + b_);
}

double MixedBetaDistribution::density(double theta) const {
  if (!has_continuous_part() || theta < 0.0 || theta > 1.0) return 0.0;
  const double log_norm = numerics::log_beta(a_, b_);
  auto edge = [&](double shape, double other) {
    if (shape < 1.0) return std::numeric_limits<double>::infinity();
    if (shape > 1.0) return 0.0;
    return w_ * std::exp(-numerics::log_beta(1.0, other));
  };
  if (theta == 0.0) return edge(a_, b_);
  if (theta == 1.0) return edge(b_, a_);
  return w_ * std::exp((a_ - 1.0) * std::log(theta) + (b_ - 1.0) * std::log1p(-theta) - log_norm);
}

double MixedBetaDistribution::cdf(double theta) const {
  if (theta < 0.0) return 0.0;
  if (theta >= 1.0) return 1.0;
  if (!has_continuous_part()) return p0_;
  return p0_ + w_ * numerics::regularized_incomplete_beta(theta, a_, b_);
}

MixedBetaDistribution MixedBetaDistribution::reflect() const {
  return MixedBetaDistribution(p1_, p0_, w_, b_, a_);
}

MixedBetaDistribution posterior_update(const PriorSpec& prior, const EvidenceData& data) {
  const double alpha = prior.alpha() + static_cast<double>(data.t());
  const double beta = prior.beta() + static_cast<double>(data.failures());

  if (!prior.proper()) {
    if (alpha > 0.0 && beta > 0.0) return MixedBetaDistribution::continuous(alpha, beta);
    if (alpha == 0.0 && beta == 0.0) {
      throw NoUpdatePossible("posterior_update: Haldane prior with no observations has no limit");
    }
    return MixedBetaDistribution::improper_limit(alpha, beta);
  }

  // Sequence likelihood theta^t (1 - theta)^(n - t): 1 on a surviving atom,
  // b(alpha + t, beta + n - t) / b(alpha, beta) on the Beta part.
  const double m0 = data.all_failures() ? prior.mass_at_zero() : 0.0;
  const double m1 = data.all_successes() ? prior.mass_at_one() : 0.0;
  double wc = 0.0;
  if (prior.continuous_weight() > 0.0) {
    const double log_marginal =
        numerics::log_beta(alpha, beta) - numerics::log_beta(prior.alpha(), prior.beta());
    wc = prior.continuous_weight() * std::exp(log_marginal);
  }
  if (m0 == 0.0 && m1 == 0.0) {
    if (prior.continuous_weight() == 0.0) {
      throw NoUpdatePossible("posterior_update: data impossible under every prior component");
    }
    return MixedBetaDistribution::continuous(alpha, beta);
  }
  const double total = m0 + m1 + wc;
  const double p0 = m0 / total;
  const double p1 = m1 / total;
  const double w = wc / total;
  return MixedBetaDistribution::mixture(p0, p1, w, alpha, beta);
}

PriorSpec as_prior(const MixedBetaDistribution& dist) {
  if (dist.is_improper_limit()) return PriorSpec::beta(dist.a(), dist.b());
  return PriorSpec::mixture(dist.p0(), dist.p1(), dist.w(), dist.a(), dist.b());
}

MixedBetaDistribution posterior_update(const MixedBetaDistribution& prior,
                                       const EvidenceData& data) {
  return posterior_update(as_prior(prior), data);
}

std::vector<GridPoint> density_grid(const MixedBetaDistribution& dist, Count points) {
  if (points < 2) throw DomainError("density_grid: need at least 2 points");
  std::vector<GridPoint> grid;
  if (dist.has_continuous_part()) {
    grid.reserve(points + 2);
    const double step = 1.0 / static_cast<double>(points + 1);
    for (Count i = 1; i <= points; ++i) {
      const double theta = static_cast<double>(i) * step;
      grid.push_back({theta, dist.density(theta), GridPoint::Kind::Density});
    }
  }
  if (dist.p0() > 0.0) grid.push_back({0.0, dist.p0(), GridPoint::Kind::Atom});
  if (dist.p1() > 0.0) grid.push_back({1.0, dist.p1(), GridPoint::Kind::Atom});
  return grid;
}

}  // namespace induction
