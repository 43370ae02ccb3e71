#ifndef HYLAT_OPTIM_HPP
#define HYLAT_OPTIM_HPP

#include "hylat/link.hpp"
#include "hylat/model.hpp"
#include "hylat/types.hpp"

// Combined gradient descent: a plain (clamped) gradient step on the curvature
// magnitude and a manifold gradient-descent step on the latent positions per
// iteration, both evaluated at the pre-step iterate. Stops when the loss
// decrease drops to `epsilon` or the iteration cap is reached.

namespace hylat {

/// One manifold gradient-descent update of all rows: the ambient gradient is
/// mapped to the steepest-descent direction (left-multiplied by Lambda per
/// row), projected onto each tangent space, and retracted along the geodesic
/// with step eta_z. Rows are updated simultaneously from the pre-step
/// embedding.
LatentEmbedding mgd_step(const LatentEmbedding& emb, const Network& net,
                         const LinkFunction& link, double eta_z);

/// Maximum-likelihood fit of the hyperbolic model from a given initial
/// embedding. Throws DivergenceError if the loss becomes non-finite.
FitResult fit(const Network& net, int d, const LatentEmbedding& init,
              const FitConfig& cfg, const LinkFunction& link);

/// Gradient-descent fit of the Euclidean baseline (positions are n x d,
/// unconstrained) with the same stopping rule.
FitResult fit_euclidean(const Network& net, int d, const LatentEmbedding& init,
                        const FitConfig& cfg, const LinkFunction& link);

}  // namespace hylat

#endif  // HYLAT_OPTIM_HPP
