#ifndef HYLAT_INFERENCE_HPP
#define HYLAT_INFERENCE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hylat/link.hpp"
#include "hylat/types.hpp"

// Evaluation metrics and parametric-bootstrap inference on the curvature.
// Bootstrap replicates draw their random streams from (seed, replicate
// index), so results are independent of worker scheduling.

namespace hylat {

/// Estimation errors between a true and an estimated embedding: |k_hat - k|
/// and relative squared Frobenius errors of the positions (after
/// canonicalizing both sides and minimizing over residual column-sign flips),
/// the distance matrix, and the probability matrix.
ErrorReport relative_errors(const LatentEmbedding& truth,
                            const LatentEmbedding& est,
                            const LinkFunction& link);

/// Shape of the misspecified-curvature lower bound:
/// (1 - min{sqrt(k'/k), sqrt(k/k')})^2.
double theorem1_bound(double k, double k_prime);

/// Rank-statistic AUC of scores against binary labels, ties counted half.
/// Throws StatError when labels are single-class.
double auc_from_scores(const std::vector<double>& scores,
                       const std::vector<int>& labels);

/// Masks a symmetric holdout set of roughly `fraction` of the unordered
/// pairs, chosen uniformly by seed.
Network with_holdout_mask(const Network& net, double fraction,
                          std::uint64_t seed);

/// Hides `holdout_fraction` of the unordered pairs, fits the model on the
/// remainder, and scores the held-out pairs by fitted linkage probability.
double link_prediction_auc(const Network& net, int d, const InitConfig& icfg,
                           const FitConfig& fcfg, const LinkFunction& link,
                           double holdout_fraction, std::uint64_t seed,
                           Geometry geometry = Geometry::hyperbolic);

struct InfoCriteria {
  double bic = 0.0;
  double aic = 0.0;
};

double bic_value(double loglik, double param_count, double sample_size);
double aic_value(double loglik, double param_count);

/// BIC/AIC with parameter count n*d (+1 for the hyperbolic curvature) and
/// sample size n(n-1)/2.
InfoCriteria information_criteria(double loglik, int n, int d,
                                  Geometry geometry);

/// Parametric-bootstrap likelihood ratio test of Euclidean (k = 0) against
/// hyperbolic (k > 0) latent geometry. Replicates are simulated from the
/// fitted Euclidean embedding; diverging replicate fits are excluded and
/// reported through b_effective.
LrtReport lrt_test(const Network& net, int d, int b_boot,
                   const InitConfig& icfg, const FitConfig& fcfg,
                   const LinkFunction& link, std::uint64_t seed);

/// Percentile bootstrap confidence interval for the curvature magnitude,
/// simulating replicates from the fitted embedding.
CiReport bootstrap_ci(const Network& net, int d, int b_boot, double level,
                      const InitConfig& icfg, const FitConfig& fcfg,
                      const LinkFunction& link, std::uint64_t seed);

/// Quantile with linear interpolation between order statistics.
double percentile(std::vector<double> values, double p);

/// Percentile interval [q_{(1-level)/2}, q_{1-(1-level)/2}].
std::pair<double, double> percentile_interval(const std::vector<double>& values,
                                              double level);

}  // namespace hylat

#endif  // HYLAT_INFERENCE_HPP
