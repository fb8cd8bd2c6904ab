#include "induction/confidence.hpp"

#include <cmath>

#include "induction/errors.hpp"

namespace induction {
namespace {

constexpr double kQuantileTolerance = 1e-10;

void require_trials(const EvidenceData& data, const char* what) {
  if (data.n() == 0) throw DomainError(std::string(what) + ": needs at least one trial");
}

// Smallest theta in [0, 1] with I_theta(a, b) >= target.
double invert_incomplete_beta(double a, double b, double target) {
  if (target <= 0.0) return 0.0;
  if (target >= 1.0) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > kQuantileTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (numerics::regularized_incomplete_beta(mid, a, b) >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

ConfidenceInterval point_interval(double theta, double level) {
  return ConfidenceInterval{theta, theta, level, theta};
}

}  // namespace

std::string_view to_string(PValueKind kind) {
  switch (kind) {
    case PValueKind::RightSide:
      return "right";
    case PValueKind::LeftSide:
      return "left";
    case PValueKind::MidP:
      return "mid";
  }
  return "unknown";
}

std::optional<PValueKind> parse_pvalue_kind(std::string_view text) {
  if (text == "right" || text == "right_side") return PValueKind::RightSide;
  if (text == "left" || text == "left_side") return PValueKind::LeftSide;
  if (text == "mid" || text == "mid_p") return PValueKind::MidP;
  return std::nullopt;
}

double p_value(PValueKind kind, const EvidenceData& data, double theta) {
  const Count n = data.n();
  const Count t = data.t();
  switch (kind) {
    case PValueKind::RightSide:
      return numerics::binomial_right_tail(n, t, theta);
    case PValueKind::LeftSide:
      if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError("p_value: theta must lie in [0, 1]");
      return numerics::binomial_right_tail(n, n - t, 1.0 - theta);
    case PValueKind::MidP: {
      const double above = t == n ? 0.0 : numerics::binomial_right_tail(n, t + 1, theta);
      return above + 0.5 * numerics::binomial_pmf(n, t, theta);
    }
  }
  throw DomainError("p_value: unknown kind");
}

MixedBetaDistribution confidence_distribution(PValueKind kind, const EvidenceData& data) {
  require_trials(data, "confidence_distribution");
  const double n = static_cast<double>(data.n());
  const double t = static_cast<double>(data.t());
  switch (kind) {
    case PValueKind::RightSide:
      // d/dtheta P(T >= t | theta) is the Beta(t, n - t + 1) density; for t = 0
      // the P-value is identically 1 and all mass sits at theta = 0.
      if (data.t() == 0) return MixedBetaDistribution::improper_limit(0.0, n + 1.0);
      return MixedBetaDistribution::continuous(t, n - t + 1.0);
    case PValueKind::LeftSide:
      return confidence_distribution(PValueKind::RightSide, EvidenceData(data.n(), data.failures()))
          .reflect();
    case PValueKind::MidP:
      return MixedBetaDistribution::continuous(t + 0.5, n - t + 0.5);
  }
  throw DomainError("confidence_distribution: unknown kind");
}

PriorSpec induced_prior(PValueKind kind, const EvidenceData& data) {
  const MixedBetaDistribution dist = confidence_distribution(kind, data);
  if (!dist.has_continuous_part()) {
    throw PriorNotIdentifiable("induced_prior: confidence distribution is a pure atom");
  }
  // Beta(a, b) density over the kernel theta^t (1 - theta)^(n - t).
  return PriorSpec::beta(dist.a() - static_cast<double>(data.t()),
                         dist.b() - static_cast<double>(data.failures()));
}

double quantile(const MixedBetaDistribution& dist, double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw DomainError("quantile: probability must lie in [0, 1]");
  if (u <= dist.p0()) return 0.0;
  if (!dist.has_continuous_part() || u > dist.p0() + dist.w()) return 1.0;
  return invert_incomplete_beta(dist.a(), dist.b(), (u - dist.p0()) / dist.w());
}

ConfidenceInterval confidence_interval(const MixedBetaDistribution& dist, double level) {
  if (!(level > 0.0 && level <= 1.0)) {
    throw DomainError("confidence_interval: level must lie in (0, 1]");
  }
  if (dist.p1() >= level) return point_interval(1.0, level);
  if (dist.p0() >= level) return point_interval(0.0, level);
  const double tail = 0.5 * (1.0 - level);
  const double lower = quantile(dist, tail);
  const double upper = quantile(dist, 1.0 - tail);
  ConfidenceInterval ci{lower, upper, level, std::nullopt};
  if (lower == upper) ci.degenerate_point = lower;
  return ci;
}

}  // namespace induction
