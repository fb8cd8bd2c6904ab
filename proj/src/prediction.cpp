#include "induction/prediction.hpp"

#include <cmath>

#include "induction/errors.hpp"

namespace induction {

double predict_next(const PriorSpec& prior, const EvidenceData& data) {
  return posterior_update(prior, data).mean();
}

double predict_run(const PriorSpec& prior, const EvidenceData& data, Count m) {
  if (m == 0) return 1.0;
  const MixedBetaDistribution post = posterior_update(prior, data);
  if (!post.has_continuous_part()) return post.p1();
  const double steps = static_cast<double>(m);
  const double ratio =
      std::exp(numerics::log_beta(post.a() + steps, post.b()) - numerics::log_beta(post.a(), post.b()));
  return post.p1() + post.w() * ratio;
}

double prob_general(const PriorSpec& prior, const EvidenceData& data) {
  return posterior_update(prior, data).p1();
}

double predict(const PriorSpec& prior, const PredictionQuery& query) {
  if (query.horizon.is_infinite()) return prob_general(prior, query.data);
  return predict_run(prior, query.data, query.horizon.steps());
}

EvidenceData transform_complement(const EvidenceData& data) {
  return EvidenceData(data.n(), data.failures());
}

double confirmation_measure(const PriorSpec& prior, const EvidenceData& data) {
  if (!prior.proper()) {
    throw UndefinedConfirmation("confirmation_measure: P(G) is not defined for an improper prior");
  }
  return prob_general(prior, data) - prior.mass_at_one();
}

}  // namespace induction
