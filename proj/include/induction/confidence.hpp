#pragma once

#include <optional>
#include <string_view>

#include "induction/distributions.hpp"

namespace induction {

/// Which P-value function generates the confidence distribution.
enum class PValueKind {
  RightSide,  // P(T_n >= t | theta)
  LeftSide,   // right-side P-value of the complemented data, i.e. P(T_n <= t | theta)
  MidP,       // P(T_n > t | theta) + P(T_n = t | theta) / 2
};

std::string_view to_string(PValueKind kind);
/// Accepts "right", "left", "mid" (and the enum spellings right_side, left_side, mid_p).
std::optional<PValueKind> parse_pvalue_kind(std::string_view text);

struct ConfidenceInterval {
  double lower;
  double upper;
  double level;
  std::optional<double> degenerate_point;  // set iff lower == upper

  bool contains(double theta) const noexcept { return lower <= theta && theta <= upper; }
  bool is_degenerate() const noexcept { return degenerate_point.has_value(); }
};

double p_value(PValueKind kind, const EvidenceData& data, double theta);

/// Distribution whose cdf is the P-value function in theta.
///
///   RightSide: Beta(t, n - t + 1); atom at 0 when t = 0.
///   LeftSide:  Beta(t + 1, n - t); atom at 1 when t = n.
///   MidP:      Beta(t + 1/2, n - t + 1/2) for every t.
///
/// Throws DomainError for n = 0.
MixedBetaDistribution confidence_distribution(PValueKind kind, const EvidenceData& data);

/// c0(theta) proportional to confidence density / likelihood. Throws
/// PriorNotIdentifiable when the confidence distribution is a pure atom.
PriorSpec induced_prior(PValueKind kind, const EvidenceData& data);

/// Equal-tailed interval of a mixed distribution. If an atom carries at least
/// `level` of the mass the interval is that single point. Throws DomainError
/// unless 0 < level <= 1.
ConfidenceInterval confidence_interval(const MixedBetaDistribution& dist, double level);

/// Smallest theta with F(theta) >= u.
double quantile(const MixedBetaDistribution& dist, double u);

}  // namespace induction
