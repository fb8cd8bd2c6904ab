#pragma once

#include <string>
#include <vector>

#include "induction/numerics.hpp"

namespace induction {

/// Observed Bernoulli summary: n trials, t successes.
class EvidenceData {
 public:
  /// Throws DomainError if t > n.
  EvidenceData(Count n, Count t);

  Count n() const noexcept { return n_; }
  Count t() const noexcept { return t_; }
  Count failures() const noexcept { return n_ - t_; }

  bool all_successes() const noexcept { return t_ == n_; }
  bool all_failures() const noexcept { return t_ == 0; }

  friend bool operator==(const EvidenceData&, const EvidenceData&) = default;

 private:
  Count n_;
  Count t_;
};

/// Prior over theta in [0, 1]: atoms at 0 and 1 plus a weighted Beta(alpha, beta)
/// part. A zero shape parameter makes the prior improper; improper priors carry
/// no atoms and are only ever used through their analytic limits.
class PriorSpec {
 public:
  /// Proper or improper Beta(alpha, beta) with no atoms.
  static PriorSpec beta(double alpha, double beta);
  /// Proper mixture; weights must sum to one and the Beta part must be proper
  /// whenever its weight is positive.
  static PriorSpec mixture(double mass_at_zero, double mass_at_one, double continuous_weight,
                           double alpha, double beta);

  static PriorSpec laplace() { return beta(1.0, 1.0); }
  static PriorSpec jeffreys_continuous() { return beta(0.5, 0.5); }
  static PriorSpec jeffreys_mixture() { return mixture(0.0, 0.5, 0.5, 1.0, 1.0); }
  static PriorSpec haldane() { return beta(0.0, 0.0); }
  static PriorSpec induced_right() { return beta(0.0, 1.0); }
  static PriorSpec induced_left() { return beta(1.0, 0.0); }

  double mass_at_zero() const noexcept { return mass_at_zero_; }
  double mass_at_one() const noexcept { return mass_at_one_; }
  double continuous_weight() const noexcept { return continuous_weight_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  bool proper() const noexcept { return alpha_ > 0.0 && beta_ > 0.0; }

  friend bool operator==(const PriorSpec&, const PriorSpec&) = default;

 private:
  PriorSpec(double m0, double m1, double w, double alpha, double beta)
      : mass_at_zero_(m0), mass_at_one_(m1), continuous_weight_(w), alpha_(alpha), beta_(beta) {}

  double mass_at_zero_;
  double mass_at_one_;
  double continuous_weight_;
  double alpha_;
  double beta_;
};

/// Prior for 1 - theta: atoms swapped, Beta(beta, alpha).
PriorSpec reflect(const PriorSpec& prior);

/// Human-readable name ("laplace", "beta:2,3", ...).
std::string describe(const PriorSpec& prior);

/// Posterior or confidence distribution over theta: mass p0 at 0, p1 at 1 and
/// weight w on a proper Beta(a, b) density, p0 + p1 + w = 1.
///
/// When the distribution is the limit of an improper-prior update (for example
/// Beta(1, 0) after n straight successes) it is a pure atom whose shape keeps
/// the limiting Beta parameters, one of them exactly 0. Updating such a
/// distribution again resumes from that improper shape.
class MixedBetaDistribution {
 public:
  /// Proper Beta(a, b) with w = 1.
  static MixedBetaDistribution continuous(double a, double b);
  /// General form; validates the invariants.
  static MixedBetaDistribution mixture(double p0, double p1, double w, double a, double b);
  /// Limit of Beta(a, b) as one shape goes to zero; exactly one of a, b is 0.
  static MixedBetaDistribution improper_limit(double a, double b);

  double p0() const noexcept { return p0_; }
  double p1() const noexcept { return p1_; }
  double w() const noexcept { return w_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

  double mass_at_zero() const noexcept { return p0_; }
  double mass_at_one() const noexcept { return p1_; }
  bool has_continuous_part() const noexcept { return w_ > 0.0; }
  /// Pure atom reached as the limit of an improper update.
  bool is_improper_limit() const noexcept { return !(a_ > 0.0 && b_ > 0.0); }

  double mean() const;
  /// Density of the continuous component, scaled by w. Zero outside (0, 1).
  double density(double theta) const;
  /// F(theta) = p0 [theta >= 0] + w I_theta(a, b) + p1 [theta >= 1].
  double cdf(double theta) const;
  /// Distribution of 1 - theta.
  MixedBetaDistribution reflect() const;

  friend bool operator==(const MixedBetaDistribution&, const MixedBetaDistribution&) = default;

 private:
  MixedBetaDistribution(double p0, double p1, double w, double a, double b)
      : p0_(p0), p1_(p1), w_(w), a_(a), b_(b) {}

  double p0_;
  double p1_;
  double w_;
  double a_;
  double b_;
};

/// Bayes update. Proper priors reweight their atoms and Beta part by the
/// marginal likelihood; improper priors take the analytic limit: a proper
/// Beta(alpha + t, beta + n - t) when both shapes are positive, otherwise an
/// atom at the boundary the vanishing shape points to.
///
/// Throws NoUpdatePossible for the Haldane prior with n = 0, or when no
/// component of the prior is compatible with the data.
MixedBetaDistribution posterior_update(const PriorSpec& prior, const EvidenceData& data);

/// Sequential form: treats a previous posterior as the prior.
MixedBetaDistribution posterior_update(const MixedBetaDistribution& prior,
                                       const EvidenceData& data);

/// The prior a distribution represents when used for a further update.
PriorSpec as_prior(const MixedBetaDistribution& dist);

struct GridPoint {
  enum class Kind { Density, Atom };
  double theta;
  double value;  // w * density for Kind::Density, probability mass for Kind::Atom
  Kind kind;
};

/// Continuous part on `points` evenly spaced interior points i / (points + 1),
/// followed by atom records for positive p0 and p1. Throws DomainError if
/// points < 2.
std::vector<GridPoint> density_grid(const MixedBetaDistribution& dist, Count points);

inline double mass_at_one(const MixedBetaDistribution& dist) { return dist.p1(); }
inline double mass_at_zero(const MixedBetaDistribution& dist) { return dist.p0(); }

}  // namespace induction
