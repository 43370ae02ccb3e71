#ifndef HYLAT_TESTS_TEST_UTIL_HPP
#define HYLAT_TESTS_TEST_UTIL_HPP

#include <Eigen/Dense>
#include <cmath>

#include "hylat/geometry.hpp"
#include "hylat/rng.hpp"
#include "hylat/types.hpp"

namespace hylat_test {

/// Random point on the upper hyperboloid sheet within geodesic distance
/// `rmax` of the apex (in the k = 1 metric).
inline Eigen::VectorXd random_hyperboloid_point(hylat::SplitMix64& rng, int d,
                                                double rmax = 2.0) {
  Eigen::VectorXd dir(d);
  do {
    for (int c = 0; c < d; ++c) dir[c] = rng.next_normal();
  } while (dir.norm() == 0.0);
  dir /= dir.norm();
  const double r = rmax * rng.next_double();
  Eigen::VectorXd x(d + 1);
  x.head(d) = std::sinh(r) * dir;
  x[d] = std::cosh(r);
  return x;
}

inline Eigen::VectorXd random_tangent(hylat::SplitMix64& rng,
                                      const Eigen::VectorXd& z,
                                      double scale = 1.0) {
  Eigen::VectorXd g(z.size());
  for (Eigen::Index c = 0; c < z.size(); ++c) g[c] = scale * rng.next_normal();
  return hylat::tangent_project(z, g);
}

/// Random isometry composed from all pair generators.
inline Eigen::MatrixXd random_rotation(hylat::SplitMix64& rng, int d,
                                       double angle_scale = 1.0) {
  Eigen::MatrixXd q = Eigen::MatrixXd::Identity(d + 1, d + 1);
  for (int i = 0; i < d + 1; ++i) {
    for (int j = i + 1; j < d + 1; ++j) {
      const double theta = angle_scale * (2.0 * rng.next_double() - 1.0);
      q = hylat::rotation_generator(i, j, theta, d) * q;
    }
  }
  return q;
}

inline hylat::LatentEmbedding random_embedding(hylat::SplitMix64& rng, int n,
                                               int d, double k,
                                               double rmax = 2.0) {
  hylat::LatentEmbedding emb;
  emb.geometry = hylat::Geometry::hyperbolic;
  emb.curvature = k;
  emb.positions.resize(n, d + 1);
  for (int i = 0; i < n; ++i) {
    emb.positions.row(i) = random_hyperboloid_point(rng, d, rmax).transpose();
  }
  return emb;
}

/// Symmetric 0/1 adjacency with independent fair coin flips.
inline hylat::Network random_network(hylat::SplitMix64& rng, int n,
                                     double density = 0.5) {
  hylat::Network net;
  net.adjacency = Eigen::MatrixXd::Zero(n, n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (rng.next_double() < density) {
        net.adjacency(i, j) = 1.0;
        net.adjacency(j, i) = 1.0;
      }
    }
  }
  return net;
}

}  // namespace hylat_test

#endif  // HYLAT_TESTS_TEST_UTIL_HPP
