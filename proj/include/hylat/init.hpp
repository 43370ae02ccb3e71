#ifndef HYLAT_INIT_HPP
#define HYLAT_INIT_HPP

#include <Eigen/Dense>

#include "hylat/link.hpp"
#include "hylat/types.hpp"

// Initialization for the non-convex likelihood: a USVT estimate of the
// probability matrix, mapped through the inverse link to a distance estimate,
// optionally refined by a higher-dimensional Euclidean pre-fit, then factored
// into hyperboloid positions for each curvature candidate. The candidate with
// the lowest frozen-curvature fit loss wins.

namespace hylat {

/// The default USVT threshold 2.01 sqrt(n pbar), where pbar is the observed
/// edge density (masked entries count as absent).
double default_usvt_threshold(const Network& net);

/// Singular-value-thresholded distance estimate: reconstructs the probability
/// matrix from the spectral components of the adjacency with |sigma| >= tau,
/// symmetrizes, clips entries to [clip_eps, 1 - clip_eps] and applies the
/// inverse link. Masked entries of the adjacency are treated as 0.
Eigen::MatrixXd usvt(const Network& net, double tau, const LinkFunction& link,
                     double clip_eps);

/// Factors a distance matrix into hyperboloid positions under curvature -k:
/// the target Gram -cosh(sqrt(k) theta0) (diagonal -1) is eigendecomposed,
/// the d largest nonnegative eigenvalues and the most negative eigenvalue are
/// kept, and rows are lifted back onto the sheet. Throws SpectrumError when
/// the spectrum cannot supply d nonnegative and one negative eigenvalue.
LatentEmbedding theta_to_embedding(const Eigen::MatrixXd& theta0, double k,
                                   int d);

/// Classical multidimensional scaling: coordinates from the top `dim`
/// eigenpairs of the double-centered squared-distance Gram matrix.
Eigen::MatrixXd classical_mds(const Eigen::MatrixXd& dist, int dim);

/// Full hyperbolic initialization (USVT, optional Euclidean pre-fit,
/// per-candidate frozen-curvature fits, lowest-loss selection).
LatentEmbedding initialize(const Network& net, int d, const InitConfig& icfg,
                           const FitConfig& fcfg, const LinkFunction& link);

/// Euclidean counterpart: same distance estimate, then classical MDS in
/// dimension d.
LatentEmbedding initialize_euclidean(const Network& net, int d,
                                     const InitConfig& icfg,
                                     const FitConfig& fcfg,
                                     const LinkFunction& link);

/// Identifiability transform: rebuilds the positions as U |S|^{1/2} Lambda
/// from the eigendecomposition of Z Lambda Z^T (via a thin QR factorization),
/// making Z^T Z diagonal while preserving all pairwise distances. Column
/// order is positive eigenvalues descending, the negative one last; spatial
/// column signs make the largest-magnitude entry positive. If two eigenvalues
/// coincide within 1e-10 the configuration is flagged through
/// `non_identifiable` when provided.
LatentEmbedding canonicalize(const LatentEmbedding& emb,
                             bool* non_identifiable = nullptr);

/// initialize() followed by a full fit.
FitResult fit_pipeline(const Network& net, int d, const InitConfig& icfg,
                       const FitConfig& fcfg, const LinkFunction& link);

/// initialize_euclidean() followed by a Euclidean fit.
FitResult fit_pipeline_euclidean(const Network& net, int d,
                                 const InitConfig& icfg, const FitConfig& fcfg,
                                 const LinkFunction& link);

}  // namespace hylat

#endif  // HYLAT_INIT_HPP
