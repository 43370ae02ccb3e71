#include "hylat/init.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "hylat/geometry.hpp"
#include "hylat/model.hpp"
#include "hylat/optim.hpp"
#include "hylat/parallel.hpp"

namespace hylat {

namespace {

Eigen::MatrixXd observed_adjacency(const Network& net) {
  if (!net.mask) return net.adjacency;
  return net.adjacency.cwiseProduct(*net.mask);
}

// Deterministic sign convention: each spatial column's largest-magnitude
// entry positive, the last (time-like) column's mean positive.
void fix_column_signs(Eigen::MatrixXd& z) {
  const Eigen::Index d = z.cols() - 1;
  for (Eigen::Index c = 0; c < d; ++c) {
    Eigen::Index idx = 0;
    z.col(c).cwiseAbs().maxCoeff(&idx);
    if (z(idx, c) < 0) z.col(c) *= -1.0;
  }
  if (z.col(d).mean() < 0) z.col(d) *= -1.0;
}

// Builds positions from eigenpairs of a target Gram Z Lambda Z^T. `vectors`
// holds orthonormal columns matching `values` (ascending). Keeps the d
// largest nonnegative eigenvalues plus the single most negative one.
Eigen::MatrixXd positions_from_eigenpairs(const Eigen::MatrixXd& vectors,
                                          const Eigen::VectorXd& values,
                                          int d) {
  const Eigen::Index m = values.size();
  if (m < d + 1) {
    throw SpectrumError("factorization needs at least d+1 eigenpairs, got " +
                        std::to_string(m));
  }
  const double scale =
      std::max({1.0, std::abs(values[0]), std::abs(values[m - 1])});
  const double tol = 1e-9 * scale;
  if (!(values[0] < 0)) {
    throw SpectrumError("target Gram has no negative eigenvalue");
  }
  // The d largest eigenvalues, descending; all must be nonnegative up to
  // round-off (exact zeros are admissible and map to degenerate coordinates).
  if (values[m - d] < -tol) {
    throw SpectrumError("fewer than " + std::to_string(d) +
                        " nonnegative eigenvalues in the target Gram");
  }
  const Eigen::Index n = vectors.rows();
  Eigen::MatrixXd z(n, d + 1);
  for (int c = 0; c < d; ++c) {
    const Eigen::Index idx = m - 1 - c;
    z.col(c) = vectors.col(idx) * std::sqrt(std::max(values[idx], 0.0));
  }
  // Z = U |S|^{1/2} Lambda negates the time-like column.
  z.col(d) = -vectors.col(0) * std::sqrt(-values[0]);
  fix_column_signs(z);
  for (Eigen::Index i = 0; i < n; ++i) {
    z.row(i) = lift_to_hyperboloid(z.row(i).transpose()).transpose();
  }
  return z;
}

}  // namespace

double default_usvt_threshold(const Network& net) {
  const Eigen::Index n = net.adjacency.rows();
  if (n < 2) return 0.0;
  const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  const double density = 0.5 * observed_adjacency(net).sum() / pairs;
  return 2.01 * std::sqrt(static_cast<double>(n) * density);
}

Eigen::MatrixXd usvt(const Network& net, double tau, const LinkFunction& link,
                     double clip_eps) {
  if (tau < 0) throw ConfigError("usvt: tau must be >= 0");
  if (!(clip_eps > 0) || !(clip_eps < 0.5)) {
    throw ConfigError("usvt: clip_eps must lie in (0, 0.5)");
  }
  const Eigen::MatrixXd a = observed_adjacency(net);
  // For a symmetric matrix the SVD components with sigma_i >= tau are exactly
  // the eigencomponents with |lambda_i| >= tau.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  const Eigen::VectorXd& lam = es.eigenvalues();
  const Eigen::MatrixXd& q = es.eigenvectors();
  Eigen::MatrixXd p0 = Eigen::MatrixXd::Zero(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (std::abs(lam[i]) >= tau) {
      p0.noalias() += lam[i] * q.col(i) * q.col(i).transpose();
    }
  }
  p0 = 0.5 * (p0 + p0.transpose()).eval();
  Eigen::ArrayXXd clipped = p0.array().max(clip_eps).min(1.0 - clip_eps);
  Eigen::MatrixXd theta0 =
      clipped.unaryExpr([&link](double p) { return link.inverse(p); }).matrix();
  theta0.diagonal().setZero();
  return theta0;
}

LatentEmbedding theta_to_embedding(const Eigen::MatrixXd& theta0, double k,
                                   int d) {
  if (!(k > 0)) throw DomainError("theta_to_embedding: k must be > 0");
  if (d < 1) throw DomainError("theta_to_embedding: d must be >= 1");
  if (theta0.rows() != theta0.cols()) {
    throw DimensionError("theta_to_embedding: theta0 must be square");
  }
  const double scale = std::max(1.0, theta0.cwiseAbs().maxCoeff());
  if ((theta0 - theta0.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw DomainError("theta_to_embedding: theta0 must be symmetric");
  }
  // Target Gram Z Lambda Z^T = -cosh(sqrt(k) theta0), diagonal -1.
  Eigen::MatrixXd target =
      (-(std::sqrt(k) * theta0.array()).cosh()).matrix();
  target = 0.5 * (target + target.transpose()).eval();
  target.diagonal().setConstant(-1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(target);
  LatentEmbedding emb;
  emb.geometry = Geometry::hyperbolic;
  emb.curvature = k;
  emb.positions = positions_from_eigenpairs(es.eigenvectors(), es.eigenvalues(), d);
  return emb;
}

Eigen::MatrixXd classical_mds(const Eigen::MatrixXd& dist, int dim) {
  const Eigen::Index n = dist.rows();
  if (dist.cols() != n) throw DimensionError("classical_mds: matrix must be square");
  dim = std::min<int>(dim, static_cast<int>(n));
  if (dim < 1) throw ConfigError("classical_mds: dim must be >= 1");
  const Eigen::MatrixXd sq = dist.cwiseProduct(dist);
  Eigen::MatrixXd centered = sq;
  const Eigen::VectorXd row_mean = sq.rowwise().mean();
  centered.colwise() -= row_mean;
  centered.rowwise() -= row_mean.transpose();
  centered.array() += sq.mean();
  centered *= -0.5;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(centered);
  Eigen::MatrixXd x(n, dim);
  for (int c = 0; c < dim; ++c) {
    const Eigen::Index idx = n - 1 - c;
    x.col(c) = es.eigenvectors().col(idx) *
               std::sqrt(std::max(es.eigenvalues()[idx], 0.0));
    Eigen::Index mi = 0;
    x.col(c).cwiseAbs().maxCoeff(&mi);
    if (x(mi, c) < 0) x.col(c) *= -1.0;
  }
  return x;
}

namespace {

// USVT distance estimate, optionally refined by the Euclidean pre-fit.
Eigen::MatrixXd initial_distances(const Network& net, const InitConfig& icfg,
                                  const FitConfig& fcfg,
                                  const LinkFunction& link) {
  const double tau = icfg.tau ? *icfg.tau : default_usvt_threshold(net);
  Eigen::MatrixXd theta0 = usvt(net, tau, link, icfg.clip_eps);
  if (icfg.prefit_dim) {
    const int pd = std::min(*icfg.prefit_dim, net.n());
    if (pd < 1) throw ConfigError("initialize: prefit_dim must be >= 1");
    LatentEmbedding seed;
    seed.geometry = Geometry::euclidean;
    seed.positions = classical_mds(theta0, pd);
    FitConfig pcfg = fcfg;
    pcfg.max_iters = icfg.prefit_iters;
    pcfg.epsilon = icfg.prefit_epsilon;
    const FitResult pre = fit_euclidean(net, pd, seed, pcfg, link);
    theta0 = distance_matrix(pre.embedding);
  }
  return theta0;
}

}  // namespace

LatentEmbedding initialize(const Network& net, int d, const InitConfig& icfg,
                           const FitConfig& fcfg, const LinkFunction& link) {
  if (icfg.k_candidates.empty()) {
    throw ConfigError("initialize: k_candidates must be non-empty");
  }
  for (double k : icfg.k_candidates) {
    if (!(k > 0)) throw ConfigError("initialize: curvature candidates must be > 0");
  }
  if (icfg.prefit_dim && *icfg.prefit_dim < d) {
    throw ConfigError("initialize: prefit_dim must be >= d");
  }
  const Eigen::MatrixXd theta0 = initial_distances(net, icfg, fcfg, link);

  const int m = static_cast<int>(icfg.k_candidates.size());
  std::vector<double> losses(m, std::numeric_limits<double>::infinity());
  std::vector<LatentEmbedding> fitted(m);
  std::vector<std::string> failures(m);
  parallel_for(m, [&](int j) {
    try {
      const LatentEmbedding start =
          theta_to_embedding(theta0, icfg.k_candidates[j], d);
      FitConfig ccfg = fcfg;
      ccfg.freeze_k = true;
      ccfg.max_iters = icfg.candidate_iters;
      const FitResult res = fit(net, d, start, ccfg, link);
      losses[j] = res.final_loss();
      fitted[j] = res.embedding;
    } catch (const DivergenceError& e) {
      failures[j] = e.what();
    } catch (const SpectrumError& e) {
      failures[j] = e.what();
    }
  });

  int best = -1;
  for (int j = 0; j < m; ++j) {
    if (std::isfinite(losses[j]) && (best < 0 || losses[j] < losses[best])) {
      best = j;
    }
  }
  if (best < 0) {
    throw DivergenceError("initialize: every curvature candidate failed (" +
                          failures[0] + ")", 0);
  }
  return fitted[best];
}

LatentEmbedding initialize_euclidean(const Network& net, int d,
                                     const InitConfig& icfg,
                                     const FitConfig& fcfg,
                                     const LinkFunction& link) {
  const Eigen::MatrixXd theta0 = initial_distances(net, icfg, fcfg, link);
  LatentEmbedding emb;
  emb.geometry = Geometry::euclidean;
  emb.curvature = 0.0;
  emb.positions = classical_mds(theta0, d);
  return emb;
}

LatentEmbedding canonicalize(const LatentEmbedding& emb,
                             bool* non_identifiable) {
  if (emb.geometry != Geometry::hyperbolic) {
    throw DomainError("canonicalize: embedding must be hyperbolic");
  }
  const Eigen::Index n = emb.positions.rows();
  const Eigen::Index cols = emb.positions.cols();
  if (n < cols) {
    throw DimensionError("canonicalize: need at least d+1 points");
  }
  // Z Lambda Z^T = Q (R Lambda R^T) Q^T via thin QR, so only a
  // (d+1) x (d+1) eigenproblem is solved.
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(emb.positions);
  const Eigen::MatrixXd thin_q =
      qr.householderQ() * Eigen::MatrixXd::Identity(n, cols);
  const Eigen::MatrixXd r =
      qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  Eigen::MatrixXd small = r;
  small.col(cols - 1) *= -1.0;
  small = (small * r.transpose()).eval();
  small = 0.5 * (small + small.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(small);

  if (non_identifiable) {
    *non_identifiable = false;
    for (Eigen::Index i = 0; i + 1 < cols; ++i) {
      if (std::abs(es.eigenvalues()[i + 1] - es.eigenvalues()[i]) <= 1e-10) {
        *non_identifiable = true;
      }
    }
  }

  LatentEmbedding out = emb;
  out.positions = positions_from_eigenpairs(thin_q * es.eigenvectors(),
                                            es.eigenvalues(),
                                            static_cast<int>(cols) - 1);
  return out;
}

FitResult fit_pipeline(const Network& net, int d, const InitConfig& icfg,
                       const FitConfig& fcfg, const LinkFunction& link) {
  return fit(net, d, initialize(net, d, icfg, fcfg, link), fcfg, link);
}

FitResult fit_pipeline_euclidean(const Network& net, int d,
                                 const InitConfig& icfg, const FitConfig& fcfg,
                                 const LinkFunction& link) {
  return fit_euclidean(net, d, initialize_euclidean(net, d, icfg, fcfg, link),
                       fcfg, link);
}

}  // namespace hylat
