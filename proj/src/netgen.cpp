#include "hylat/netgen.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <vector>

#include "hylat/model.hpp"
#include "hylat/rng.hpp"

namespace hylat {

namespace {

constexpr std::uint64_t kPositionsTag = 1;
constexpr std::uint64_t kEdgesTag = 2;
constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<std::vector<int>> adjacency_lists(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<std::vector<int>> adj(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (i != j && a(i, j) != 0.0) adj[j].push_back(i);
    }
  }
  return adj;
}

}  // namespace

double disk_radius_quantile(double u, double k, double radius) {
  if (!(k > 0)) throw DomainError("disk_radius_quantile: k must be > 0");
  if (radius < 0) throw DomainError("disk_radius_quantile: radius must be >= 0");
  if (u < 0 || u > 1) throw DomainError("disk_radius_quantile: u must be in [0, 1]");
  const double sk = std::sqrt(k);
  return std::acosh(1.0 + u * (std::cosh(sk * radius) - 1.0)) / sk;
}

LatentEmbedding sample_uniform_disk(const SimConfig& cfg) {
  if (cfg.n < 2) throw ConfigError("sample_uniform_disk: n must be >= 2");
  if (cfg.radius < 0) throw ConfigError("sample_uniform_disk: radius must be >= 0");
  LatentEmbedding emb;
  emb.geometry = cfg.geometry;
  SplitMix64 rng(derive_key(cfg.seed, kPositionsTag));

  if (cfg.geometry == Geometry::hyperbolic) {
    if (cfg.d != 2) {
      throw ConfigError("sample_uniform_disk: hyperbolic sampling supports d = 2 only");
    }
    if (!(cfg.k > 0)) throw ConfigError("sample_uniform_disk: k must be > 0");
    emb.curvature = cfg.k;
    emb.positions.resize(cfg.n, 3);
    const double sk = std::sqrt(cfg.k);
    for (int i = 0; i < cfg.n; ++i) {
      const double angle = kTwoPi * rng.next_double();
      const double r = disk_radius_quantile(rng.next_double(), cfg.k, cfg.radius);
      const double s = std::sinh(sk * r);
      emb.positions(i, 0) = s * std::cos(angle);
      emb.positions(i, 1) = s * std::sin(angle);
      emb.positions(i, 2) = std::cosh(sk * r);
    }
    return emb;
  }

  if (cfg.d < 1) throw ConfigError("sample_uniform_disk: d must be >= 1");
  emb.curvature = 0.0;
  emb.positions.resize(cfg.n, cfg.d);
  for (int i = 0; i < cfg.n; ++i) {
    Eigen::VectorXd dir(cfg.d);
    do {
      for (int c = 0; c < cfg.d; ++c) dir[c] = rng.next_normal();
    } while (dir.norm() == 0.0);
    dir /= dir.norm();
    const double r =
        cfg.radius * std::pow(rng.next_double(), 1.0 / static_cast<double>(cfg.d));
    emb.positions.row(i) = (r * dir).transpose();
  }
  return emb;
}

Network generate_network(const LatentEmbedding& emb, const LinkFunction& link,
                         std::uint64_t seed) {
  const Eigen::MatrixXd p = probability_matrix(emb, link);
  const int n = static_cast<int>(p.rows());
  const std::uint64_t edge_seed = derive_key(seed, kEdgesTag);
  Network net;
  net.adjacency = Eigen::MatrixXd::Zero(n, n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (pair_uniform(edge_seed, i, j) < p(i, j)) {
        net.adjacency(i, j) = 1.0;
        net.adjacency(j, i) = 1.0;
      }
    }
  }
  return net;
}

GraphStats graph_stats(const Network& net) {
  const Eigen::MatrixXd& a = net.adjacency;
  const int n = static_cast<int>(a.rows());
  if (n < 2) throw DimensionError("graph_stats: need at least 2 nodes");
  GraphStats stats;
  const double pairs = 0.5 * n * (n - 1);
  stats.edge_density = 0.5 * a.sum() / pairs;

  // Transitivity: 3 * triangles / connected triples.
  const Eigen::VectorXd deg = a.rowwise().sum();
  const double triangles = ((a * a).cwiseProduct(a)).sum() / 6.0;
  const double triples = 0.5 * (deg.array() * (deg.array() - 1.0)).sum();
  stats.transitivity = triples > 0 ? 3.0 * triangles / triples : 0.0;

  const auto adj = adjacency_lists(a);

  // Betweenness (Brandes): accumulate pair dependencies per source.
  std::vector<double> bc(n, 0.0);
  std::vector<int> dist(n), order;
  std::vector<double> sigma(n), delta(n);
  order.reserve(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (int w : adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int w = *it;
      for (int v : adj[w]) {
        if (dist[v] == dist[w] - 1) {
          delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        }
      }
      if (w != s) bc[w] += delta[w];
    }
  }
  // Each unordered pair is counted from both endpoints.
  if (n > 2) {
    const double norm = (n - 1.0) * (n - 2.0) / 2.0;
    double sum = 0.0;
    for (double b : bc) sum += 0.5 * b / norm;
    stats.betweenness_centrality = sum / n;
  }

  // Largest connected component.
  std::vector<int> component(n, -1);
  int best_comp = -1, best_size = 0, n_comp = 0;
  for (int s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    int size = 0;
    std::deque<int> queue{s};
    component[s] = n_comp;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      ++size;
      for (int w : adj[v]) {
        if (component[w] < 0) {
          component[w] = n_comp;
          queue.push_back(w);
        }
      }
    }
    if (size > best_size) {
      best_size = size;
      best_comp = n_comp;
    }
    ++n_comp;
  }

  // BFS distances over the largest component.
  if (best_size >= 2) {
    double total = 0.0;
    int diameter = 0;
    for (int s = 0; s < n; ++s) {
      if (component[s] != best_comp) continue;
      std::fill(dist.begin(), dist.end(), -1);
      dist[s] = 0;
      std::deque<int> queue{s};
      while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w : adj[v]) {
          if (dist[w] < 0) {
            dist[w] = dist[v] + 1;
            queue.push_back(w);
          }
        }
      }
      for (int t = 0; t < n; ++t) {
        if (component[t] == best_comp && t != s) {
          total += dist[t];
          diameter = std::max(diameter, dist[t]);
        }
      }
    }
    stats.average_path_length =
        total / (static_cast<double>(best_size) * (best_size - 1));
    stats.diameter = diameter;
  }
  return stats;
}

std::map<int, int> degree_distribution(const Network& net) {
  std::map<int, int> hist;
  const Eigen::VectorXd deg = net.adjacency.rowwise().sum();
  for (Eigen::Index i = 0; i < deg.size(); ++i) {
    ++hist[static_cast<int>(std::lround(deg[i]))];
  }
  return hist;
}

}  // namespace hylat
