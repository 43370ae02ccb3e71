#include "hylat/model.hpp"

#include <cmath>
#include <string>

#include "hylat/geometry.hpp"

namespace hylat {

namespace {

constexpr double kProbClamp = 1e-12;
// Pair terms are suppressed when -z_i^T Lambda z_j < 1 + kCoincident
// (the distance derivative has a 1/sqrt(x^2-1) singularity at x = 1).
constexpr double kCoincident = 1e-9;

// Lorentzian Gram matrix Z Lambda Z^T.
Eigen::MatrixXd lorentz_gram(const Eigen::MatrixXd& z) {
  const Eigen::Index d = z.cols() - 1;
  Eigen::MatrixXd g = z.leftCols(d) * z.leftCols(d).transpose();
  g.noalias() -= z.col(d) * z.col(d).transpose();
  return g;
}

// delta = max(-G - 1, 0), so that the hyperboloid distance is
// acosh(1 + delta)/sqrt(k) = log1p(delta + sqrt(delta (delta + 2)))/sqrt(k).
Eigen::ArrayXXd gram_delta(const Eigen::MatrixXd& z) {
  return ((-lorentz_gram(z)).array() - 1.0).max(0.0);
}

Eigen::ArrayXXd theta_from_delta(const Eigen::ArrayXXd& delta, double k) {
  Eigen::ArrayXXd theta =
      (delta + (delta * (delta + 2.0)).sqrt()).log1p() / std::sqrt(k);
  theta.matrix().diagonal().setZero();
  return theta;
}

Eigen::ArrayXXd euclidean_distances(const Eigen::MatrixXd& z) {
  const Eigen::VectorXd sq = z.rowwise().squaredNorm();
  Eigen::MatrixXd d2 = sq.replicate(1, z.rows());
  d2 += sq.transpose().replicate(z.rows(), 1);
  d2.noalias() -= 2.0 * z * z.transpose();
  Eigen::ArrayXXd theta = d2.array().max(0.0).sqrt();
  theta.matrix().diagonal().setZero();
  return theta;
}

// Sum over unordered pairs i < j, in a fixed (column-major) order.
double upper_sum(const Eigen::ArrayXXd& t) {
  double s = 0.0;
  for (Eigen::Index j = 1; j < t.cols(); ++j) {
    for (Eigen::Index i = 0; i < j; ++i) s += t(i, j);
  }
  return s;
}

void check_dims(const LatentEmbedding& emb, const Network& net,
                const char* where) {
  if (emb.n() != net.n()) {
    throw DimensionError(std::string(where) + ": embedding has " +
                         std::to_string(emb.n()) + " rows but network has " +
                         std::to_string(net.n()) + " nodes");
  }
  if (net.mask && (net.mask->rows() != net.n() || net.mask->cols() != net.n())) {
    throw DimensionError(std::string(where) + ": mask size mismatch");
  }
}

}  // namespace

void validate_embedding(const LatentEmbedding& emb, double tol) {
  if (emb.geometry == Geometry::euclidean) return;
  if (!(emb.curvature > 0)) {
    throw DomainError("embedding: curvature must be > 0, got " +
                      std::to_string(emb.curvature));
  }
  if (emb.positions.cols() < 3) {
    throw DimensionError("embedding: hyperbolic positions need >= 3 columns");
  }
  const Eigen::Index d = emb.positions.cols() - 1;
  const Eigen::VectorXd residual =
      (emb.positions.leftCols(d).rowwise().squaredNorm() -
       emb.positions.col(d).cwiseAbs2())
          .array() +
      1.0;
  for (Eigen::Index i = 0; i < emb.positions.rows(); ++i) {
    if (std::abs(residual[i]) > tol || !(emb.positions(i, d) > 0)) {
      throw ManifoldError("embedding: row " + std::to_string(i) +
                          " is off the hyperboloid (residual " +
                          std::to_string(residual[i]) + ")");
    }
  }
}

void validate_network(const Network& net) {
  const auto check = [](const Eigen::MatrixXd& m, const char* what) {
    if (m.rows() != m.cols()) {
      throw DataError(std::string(what) + " is not square");
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(j, j) != 0.0) {
        throw DataError(std::string(what) + " has a nonzero diagonal entry");
      }
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const double v = m(i, j);
        if (v != 0.0 && v != 1.0) {
          throw DataError(std::string(what) + " has a non-binary entry");
        }
        if (v != m(j, i)) {
          throw DataError(std::string(what) + " is not symmetric");
        }
      }
    }
  };
  check(net.adjacency, "adjacency");
  if (net.mask) {
    check(*net.mask, "mask");
    if (net.mask->rows() != net.adjacency.rows()) {
      throw DimensionError("mask size does not match adjacency");
    }
  }
}

Eigen::MatrixXd distance_matrix(const LatentEmbedding& emb) {
  if (emb.geometry == Geometry::euclidean) {
    return euclidean_distances(emb.positions).matrix();
  }
  validate_embedding(emb);
  const Eigen::ArrayXXd u = -lorentz_gram(emb.positions).array();
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    for (Eigen::Index i = 0; i < j; ++i) {
      if (u(i, j) < 1.0 - 1e-9) {
        throw ManifoldError("distance_matrix: Gram entry (" +
                            std::to_string(i) + "," + std::to_string(j) +
                            ") = " + std::to_string(-u(i, j)) +
                            " violates the sheet constraint");
      }
    }
  }
  return theta_from_delta((u - 1.0).max(0.0), emb.curvature).matrix();
}

Eigen::MatrixXd probability_matrix(const LatentEmbedding& emb,
                                   const LinkFunction& link) {
  Eigen::ArrayXXd p = link.apply(distance_matrix(emb).array());
  p.matrix().diagonal().setZero();
  return p.matrix();
}

namespace detail {

Eigen::MatrixXd distances_unchecked(const Eigen::MatrixXd& positions,
                                    Geometry geometry, double k) {
  if (geometry == Geometry::euclidean) {
    return euclidean_distances(positions).matrix();
  }
  return theta_from_delta(gram_delta(positions), k).matrix();
}

ModelEval eval_model(const Eigen::MatrixXd& positions, Geometry geometry,
                     double k, const Network& net, const LinkFunction& link,
                     bool want_loss, bool want_grads) {
  const Eigen::Index n = positions.rows();
  const bool hyperbolic = geometry == Geometry::hyperbolic;

  Eigen::ArrayXXd delta;  // hyperbolic only
  Eigen::ArrayXXd theta;
  if (hyperbolic) {
    delta = gram_delta(positions);
    theta = theta_from_delta(delta, k);
  } else {
    theta = euclidean_distances(positions);
  }

  const Eigen::ArrayXXd pc =
      link.apply(theta).max(kProbClamp).min(1.0 - kProbClamp);
  const Eigen::ArrayXXd& a = net.adjacency.array();

  ModelEval out;
  if (want_loss) {
    Eigen::ArrayXXd terms = a * pc.log() + (1.0 - a) * (1.0 - pc).log();
    if (net.mask) terms *= net.mask->array();
    out.loss = -2.0 * upper_sum(terms);
  }

  if (want_grads) {
    // dL/dTheta_ij under the ordered-pair convention.
    Eigen::ArrayXXd w =
        -2.0 * (a - pc) * link.apply_derivative(theta) / (pc * (1.0 - pc));
    w.matrix().diagonal().setZero();
    if (net.mask) w *= net.mask->array();

    if (hyperbolic) {
      // dTheta_ij/dz_i = -(1/sqrt(k)) Lambda z_j / sqrt(u^2 - 1) with
      // u^2 - 1 = delta (delta + 2); near-coincident pairs are suppressed.
      Eigen::ArrayXXd c =
          (delta > kCoincident)
              .select(w * (-1.0 / std::sqrt(k)) /
                          (delta * (delta + 2.0)).sqrt(),
                      Eigen::ArrayXXd::Zero(n, n));
      Eigen::MatrixXd zl = positions;
      zl.col(zl.cols() - 1) *= -1.0;
      out.grad_positions.noalias() = c.matrix() * zl;
      out.grad_curvature = upper_sum(w * theta) * (-1.0 / (2.0 * k));
    } else {
      Eigen::ArrayXXd r =
          (theta > kCoincident)
              .select(w / theta, Eigen::ArrayXXd::Zero(n, n));
      out.grad_positions = r.rowwise().sum().matrix().asDiagonal() * positions;
      out.grad_positions.noalias() -= r.matrix() * positions;
    }
  }
  return out;
}

}  // namespace detail

double neg_log_likelihood(const LatentEmbedding& emb, const Network& net,
                          const LinkFunction& link) {
  check_dims(emb, net, "neg_log_likelihood");
  return detail::eval_model(emb.positions, emb.geometry, emb.curvature, net,
                            link, true, false)
      .loss;
}

Eigen::MatrixXd nll_grad_positions(const LatentEmbedding& emb,
                                   const Network& net,
                                   const LinkFunction& link) {
  check_dims(emb, net, "nll_grad_positions");
  return detail::eval_model(emb.positions, emb.geometry, emb.curvature, net,
                            link, false, true)
      .grad_positions;
}

double nll_grad_curvature(const LatentEmbedding& emb, const Network& net,
                          const LinkFunction& link) {
  check_dims(emb, net, "nll_grad_curvature");
  if (emb.geometry != Geometry::hyperbolic) {
    throw DomainError("nll_grad_curvature: embedding must be hyperbolic");
  }
  return detail::eval_model(emb.positions, emb.geometry, emb.curvature, net,
                            link, false, true)
      .grad_curvature;
}

}  // namespace hylat
