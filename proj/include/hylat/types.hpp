#ifndef HYLAT_TYPES_HPP
#define HYLAT_TYPES_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hylat/errors.hpp"

namespace hylat {

enum class Geometry { hyperbolic, euclidean };

/// Curvature magnitude k > 0 plus an n x (d+1) latent-position matrix whose
/// rows lie on the hyperboloid. The Euclidean baseline uses an n x d matrix
/// of unconstrained rows and ignores `curvature`.
struct LatentEmbedding {
  Geometry geometry = Geometry::hyperbolic;
  double curvature = 1.0;
  Eigen::MatrixXd positions;

  int n() const { return static_cast<int>(positions.rows()); }
  /// Latent dimension d (ambient columns minus one in the hyperbolic case).
  int dim() const {
    const int c = static_cast<int>(positions.cols());
    return geometry == Geometry::hyperbolic ? c - 1 : c;
  }
};

/// Throws unless every row satisfies the hyperboloid constraint within `tol`
/// (hyperbolic case) and the curvature is positive.
void validate_embedding(const LatentEmbedding& emb, double tol = 1e-8);

/// Symmetric binary adjacency with zero diagonal, plus an optional symmetric
/// observation mask (1 = observed).
struct Network {
  Eigen::MatrixXd adjacency;
  std::optional<Eigen::MatrixXd> mask;

  int n() const { return static_cast<int>(adjacency.rows()); }
};

/// Throws unless the adjacency (and mask, if present) is square, symmetric,
/// zero-diagonal and 0/1-valued.
void validate_network(const Network& net);

struct FitConfig {
  std::optional<double> eta_k;  ///< step size for k; defaults to 1/n^2
  std::optional<double> eta_z;  ///< step size for positions; defaults to 1/n
  double epsilon = 1e-4;        ///< stop when the loss decrease drops to this
  int max_iters = 2000;
  double k_min = 1e-3;
  double k_max = 1e3;
  bool freeze_k = false;
};

struct FitResult {
  LatentEmbedding embedding;
  std::vector<double> loss_history;  ///< loss at init, then after each iteration
  int iterations = 0;
  bool converged = false;
  int uphill_steps = 0;  ///< iterations where the loss rose by more than 1e-8

  double final_loss() const { return loss_history.back(); }
};

struct InitConfig {
  std::optional<double> tau;  ///< USVT threshold; defaults to 2.01 sqrt(n pbar)
  std::vector<double> k_candidates = {0.1, 1.0, 10.0};
  std::optional<int> prefit_dim = 20;  ///< Euclidean pre-fit dimension; nullopt disables
  double clip_eps = 1e-6;              ///< probability clip before the inverse link
  int candidate_iters = 200;           ///< fit budget when ranking curvature candidates
  int prefit_iters = 500;              ///< fit budget for the Euclidean pre-fit
  double prefit_epsilon = 1e-3;        ///< stopping threshold for the pre-fit
};

struct SimConfig {
  int n = 0;
  int d = 2;
  Geometry geometry = Geometry::hyperbolic;
  double k = 1.0;        ///< curvature magnitude (hyperbolic case)
  double radius = 3.0;   ///< disk radius for the uniform latent distribution
  std::uint64_t seed = 0;
};

struct GraphStats {
  double edge_density = 0.0;
  double transitivity = 0.0;
  double betweenness_centrality = 0.0;  ///< mean normalized betweenness
  double average_path_length = 0.0;     ///< over the largest connected component
  double diameter = 0.0;                ///< over the largest connected component
};

struct ErrorReport {
  double delta_k = 0.0;      ///< |k_hat - k|
  double delta_z = 0.0;      ///< ||Z_hat - Z||_F^2 / ||Z||_F^2, sign-minimized
  double delta_theta = 0.0;  ///< ||Theta_hat - Theta||_F^2 / ||Theta||_F^2
  double delta_p = 0.0;      ///< ||P_hat - P||_F^2 / ||P||_F^2
};

struct LrtReport {
  double statistic = 0.0;
  std::vector<double> bootstrap_statistics;
  double p_value = 1.0;
  int b_requested = 0;
  int b_effective = 0;  ///< replicates that fitted without divergence
};

struct CiReport {
  double k_hat = 0.0;
  std::vector<double> bootstrap_estimates;
  double lo = 0.0;
  double hi = 0.0;
  double level = 0.95;
  int b_requested = 0;
  int b_effective = 0;
};

}  // namespace hylat

#endif  // HYLAT_TYPES_HPP
