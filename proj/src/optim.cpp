#include "hylat/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hylat/geometry.hpp"

namespace hylat {

namespace {

void validate_fit_config(const FitConfig& cfg) {
  if (cfg.eta_k && !(*cfg.eta_k > 0)) throw ConfigError("eta_k must be > 0");
  if (cfg.eta_z && !(*cfg.eta_z > 0)) throw ConfigError("eta_z must be > 0");
  if (!(cfg.epsilon > 0)) throw ConfigError("epsilon must be > 0");
  if (cfg.max_iters < 1) throw ConfigError("max_iters must be >= 1");
  if (!(cfg.k_min > 0) || !(cfg.k_min < cfg.k_max)) {
    throw ConfigError("curvature bounds must satisfy 0 < k_min < k_max");
  }
}

Eigen::MatrixXd mgd_update_rows(const Eigen::MatrixXd& z,
                                const Eigen::MatrixXd& grad, double eta_z) {
  const Eigen::Index last = z.cols() - 1;
  Eigen::MatrixXd ge = grad;  // steepest-descent direction Lambda * grad
  ge.col(last) *= -1.0;
  Eigen::MatrixXd out(z.rows(), z.cols());
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    const Eigen::VectorXd zi = z.row(i);
    const Eigen::VectorXd gr = tangent_project(zi, ge.row(i).transpose());
    // Re-lift after the retraction to keep the constraint residual at
    // round-off level over long runs.
    out.row(i) = lift_to_hyperboloid(exp_map(zi, (-eta_z * gr).eval()));
  }
  return out;
}

struct LoopSetup {
  double eta_k;
  double eta_z;
};

LoopSetup resolve_steps(const FitConfig& cfg, int n) {
  const double nn = static_cast<double>(n);
  return {cfg.eta_k.value_or(1.0 / (nn * nn)), cfg.eta_z.value_or(1.0 / nn)};
}

FitResult descend(const Network& net, LatentEmbedding emb,
                  const FitConfig& cfg, const LinkFunction& link) {
  const auto [eta_k, eta_z] = resolve_steps(cfg, net.n());
  const bool hyperbolic = emb.geometry == Geometry::hyperbolic;

  FitResult res;
  double loss = detail::eval_model(emb.positions, emb.geometry, emb.curvature,
                                   net, link, true, false)
                    .loss;
  if (!std::isfinite(loss)) {
    throw DivergenceError("fit: non-finite loss at initialization", 0);
  }
  res.loss_history.push_back(loss);

  for (int t = 0; t < cfg.max_iters; ++t) {
    const auto eval = detail::eval_model(emb.positions, emb.geometry,
                                         emb.curvature, net, link, false, true);
    if (!eval.grad_positions.allFinite() ||
        (hyperbolic && !std::isfinite(eval.grad_curvature))) {
      throw DivergenceError("fit: non-finite gradient at iteration " +
                            std::to_string(t), t);
    }
    if (hyperbolic) {
      if (!cfg.freeze_k) {
        emb.curvature = std::clamp(emb.curvature - eta_k * eval.grad_curvature,
                                   cfg.k_min, cfg.k_max);
      }
      emb.positions = mgd_update_rows(emb.positions, eval.grad_positions, eta_z);
    } else {
      emb.positions -= eta_z * eval.grad_positions;
    }

    const double next = detail::eval_model(emb.positions, emb.geometry,
                                           emb.curvature, net, link, true, false)
                            .loss;
    if (!std::isfinite(next)) {
      throw DivergenceError("fit: non-finite loss at iteration " +
                            std::to_string(t), t);
    }
    const double decrease = loss - next;
    if (decrease < -1e-8) ++res.uphill_steps;
    res.loss_history.push_back(next);
    res.iterations = t + 1;
    loss = next;
    if (decrease <= cfg.epsilon) {
      res.converged = true;
      break;
    }
  }
  res.embedding = std::move(emb);
  return res;
}

}  // namespace

LatentEmbedding mgd_step(const LatentEmbedding& emb, const Network& net,
                         const LinkFunction& link, double eta_z) {
  if (emb.geometry != Geometry::hyperbolic) {
    throw DomainError("mgd_step: embedding must be hyperbolic");
  }
  LatentEmbedding out = emb;
  out.positions =
      mgd_update_rows(emb.positions, nll_grad_positions(emb, net, link), eta_z);
  return out;
}

FitResult fit(const Network& net, int d, const LatentEmbedding& init,
              const FitConfig& cfg, const LinkFunction& link) {
  validate_fit_config(cfg);
  if (init.geometry != Geometry::hyperbolic) {
    throw DomainError("fit: initial embedding must be hyperbolic");
  }
  if (init.positions.cols() != d + 1 || init.positions.rows() != net.n()) {
    throw DimensionError("fit: initial embedding must be n x (d+1)");
  }
  validate_embedding(init);
  if (init.curvature < cfg.k_min || init.curvature > cfg.k_max) {
    throw DomainError("fit: initial curvature " +
                      std::to_string(init.curvature) +
                      " is outside [k_min, k_max]");
  }
  return descend(net, init, cfg, link);
}

FitResult fit_euclidean(const Network& net, int d, const LatentEmbedding& init,
                        const FitConfig& cfg, const LinkFunction& link) {
  validate_fit_config(cfg);
  if (init.geometry != Geometry::euclidean) {
    throw DomainError("fit_euclidean: initial embedding must be euclidean");
  }
  if (init.positions.cols() != d || init.positions.rows() != net.n()) {
    throw DimensionError("fit_euclidean: initial embedding must be n x d");
  }
  return descend(net, init, cfg, link);
}

}  // namespace hylat
