#ifndef HYLAT_MODEL_HPP
#define HYLAT_MODEL_HPP

#include <Eigen/Dense>

#include "hylat/link.hpp"
#include "hylat/types.hpp"

// The probabilistic model: pairwise distance and probability matrices, the
// (optionally masked) negative log-likelihood, and its analytic gradients in
// the curvature and the latent positions.
//
// The likelihood follows the ordered-pair convention (sum over i != j),
// computed as twice the sum over unordered pairs. Probabilities are clamped
// to [1e-12, 1 - 1e-12] before logarithms.

namespace hylat {

/// Pairwise latent distances. Hyperbolic rows are validated against the
/// hyperboloid constraint (tolerance 1e-8) and off-diagonal Gram entries
/// below 1 - 1e-9 raise ManifoldError.
Eigen::MatrixXd distance_matrix(const LatentEmbedding& emb);

/// Entrywise link applied to the off-diagonal distances; zero diagonal.
Eigen::MatrixXd probability_matrix(const LatentEmbedding& emb,
                                   const LinkFunction& link);

/// Negative log-likelihood over observed pairs. No manifold validation is
/// performed here, so the function is well-defined for slightly perturbed
/// ambient positions (as exercised by finite-difference checks).
double neg_log_likelihood(const LatentEmbedding& emb, const Network& net,
                          const LinkFunction& link);

/// Ambient (Euclidean) gradient of neg_log_likelihood in the position matrix.
/// Near-coincident pairs (-z_i^T Lambda z_j < 1 + 1e-9, or Euclidean distance
/// below 1e-9) contribute zero. Handles both geometries.
Eigen::MatrixXd nll_grad_positions(const LatentEmbedding& emb,
                                   const Network& net,
                                   const LinkFunction& link);

/// Derivative of neg_log_likelihood in the curvature magnitude k, via
/// dTheta_ij/dk = -Theta_ij / (2k). Hyperbolic embeddings only.
double nll_grad_curvature(const LatentEmbedding& emb, const Network& net,
                          const LinkFunction& link);

namespace detail {

/// One-pass evaluation of the loss and/or both gradients; the building block
/// behind the public functions and the optimizer's inner loop.
struct ModelEval {
  double loss = 0.0;
  Eigen::MatrixXd grad_positions;
  double grad_curvature = 0.0;
};

ModelEval eval_model(const Eigen::MatrixXd& positions, Geometry geometry,
                     double k, const Network& net, const LinkFunction& link,
                     bool want_loss, bool want_grads);

/// Pairwise distances without manifold validation (diagonal zero).
Eigen::MatrixXd distances_unchecked(const Eigen::MatrixXd& positions,
                                    Geometry geometry, double k);

}  // namespace detail

}  // namespace hylat

#endif  // HYLAT_MODEL_HPP
