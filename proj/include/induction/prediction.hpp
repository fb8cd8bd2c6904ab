#pragma once

#include <optional>

#include "induction/distributions.hpp"

namespace induction {

/// Number of future consecutive successes asked about; infinite() denotes the
/// general proposition that every future trial succeeds.
class Horizon {
 public:
  static Horizon finite(Count m) { return Horizon(m); }
  static Horizon infinite() { return Horizon(std::nullopt); }

  bool is_infinite() const noexcept { return !steps_.has_value(); }
  /// Only meaningful when !is_infinite().
  Count steps() const { return steps_.value(); }

  friend bool operator==(const Horizon&, const Horizon&) = default;

 private:
  explicit Horizon(std::optional<Count> steps) : steps_(steps) {}
  std::optional<Count> steps_;
};

struct PredictionQuery {
  EvidenceData data;
  Horizon horizon;
};

/// P(X_{n+1} = 1 | data) = p1 + w a / (a + b) of the posterior.
double predict_next(const PriorSpec& prior, const EvidenceData& data);

/// P(next m trials all succeed | data) = p1 + w b(a + m, b) / b(a, b).
double predict_run(const PriorSpec& prior, const EvidenceData& data, Count m);

/// P(G | data): the m -> infinity limit of predict_run, i.e. the posterior
/// mass at theta = 1.
double prob_general(const PriorSpec& prior, const EvidenceData& data);

/// predict_run for finite horizons, prob_general for the infinite one.
double predict(const PriorSpec& prior, const PredictionQuery& query);

/// Relabels successes as failures: (n, t) -> (n, n - t).
EvidenceData transform_complement(const EvidenceData& data);

/// Carnap's C(G, E) = P(G | E) - P(G). Throws UndefinedConfirmation for an
/// improper prior, where P(G) does not exist.
double confirmation_measure(const PriorSpec& prior, const EvidenceData& data);

}  // namespace induction
