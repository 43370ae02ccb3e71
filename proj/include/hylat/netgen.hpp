#ifndef HYLAT_NETGEN_HPP
#define HYLAT_NETGEN_HPP

#include <cstdint>
#include <map>

#include "hylat/link.hpp"
#include "hylat/types.hpp"

// Simulation of latent positions and networks, plus descriptive graph
// statistics. All randomness is SplitMix64-based and seed-deterministic
// across platforms.

namespace hylat {

/// Inverse CDF of the radial distance of a uniform draw on the hyperbolic
/// disk of radius R under curvature -k: the area element is proportional to
/// sinh(sqrt(k) r) dr, so F(r) = (cosh(sqrt(k) r) - 1)/(cosh(sqrt(k) R) - 1).
double disk_radius_quantile(double u, double k, double radius);

/// Latent positions drawn uniformly on a disk of the configured radius:
/// hyperbolic (d = 2 only) via the sinh-area inverse CDF, Euclidean (any d)
/// via R u^(1/d) with a uniform direction.
LatentEmbedding sample_uniform_disk(const SimConfig& cfg);

/// Independent Bernoulli draws on unordered pairs from the linkage
/// probabilities of the embedding, mirrored to a symmetric adjacency.
Network generate_network(const LatentEmbedding& emb, const LinkFunction& link,
                         std::uint64_t seed);

/// Edge density, global transitivity, mean normalized betweenness, and
/// average path length / diameter over the largest connected component.
GraphStats graph_stats(const Network& net);

/// Exact degree histogram (degree -> node count).
std::map<int, int> degree_distribution(const Network& net);

}  // namespace hylat

#endif  // HYLAT_NETGEN_HPP
