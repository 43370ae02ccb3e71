#include "hylat/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hylat/init.hpp"
#include "hylat/model.hpp"
#include "hylat/netgen.hpp"
#include "hylat/optim.hpp"
#include "hylat/parallel.hpp"
#include "hylat/rng.hpp"

namespace hylat {

namespace {

constexpr std::uint64_t kHoldoutTag = 3;
constexpr std::uint64_t kLrtTag = 4;
constexpr std::uint64_t kCiTag = 5;

double relative_sq_frobenius(const Eigen::MatrixXd& est,
                             const Eigen::MatrixXd& truth) {
  const double denom = truth.squaredNorm();
  if (denom == 0.0) {
    return est.squaredNorm() == 0.0 ? 0.0
                                    : std::numeric_limits<double>::infinity();
  }
  return (est - truth).squaredNorm() / denom;
}

// Unbiased bounded draw via rejection.
std::uint64_t next_below(SplitMix64& rng, std::uint64_t bound) {
  const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
  std::uint64_t v = rng.next();
  while (v >= limit) v = rng.next();
  return v % bound;
}

}  // namespace

ErrorReport relative_errors(const LatentEmbedding& truth,
                            const LatentEmbedding& est,
                            const LinkFunction& link) {
  if (truth.geometry != Geometry::hyperbolic ||
      est.geometry != Geometry::hyperbolic) {
    throw DomainError("relative_errors: both embeddings must be hyperbolic");
  }
  if (truth.n() != est.n() || truth.dim() != est.dim()) {
    throw DimensionError("relative_errors: embeddings must share n and d");
  }
  ErrorReport rep;
  rep.delta_k = std::abs(est.curvature - truth.curvature);
  rep.delta_theta =
      relative_sq_frobenius(distance_matrix(est), distance_matrix(truth));
  rep.delta_p = relative_sq_frobenius(probability_matrix(est, link),
                                      probability_matrix(truth, link));

  const Eigen::MatrixXd zt = canonicalize(truth).positions;
  const Eigen::MatrixXd ze = canonicalize(est).positions;
  const int cols = static_cast<int>(zt.cols());
  // Canonicalization fixes Z only up to per-column signs; take the best of
  // the 2^(d+1) flips.
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cols); ++bits) {
    Eigen::MatrixXd flipped = ze;
    for (int c = 0; c < cols; ++c) {
      if (bits & (std::uint64_t{1} << c)) flipped.col(c) *= -1.0;
    }
    best = std::min(best, relative_sq_frobenius(flipped, zt));
  }
  rep.delta_z = best;
  return rep;
}

double theorem1_bound(double k, double k_prime) {
  if (!(k > 0) || !(k_prime > 0)) {
    throw DomainError("theorem1_bound: curvatures must be > 0");
  }
  const double ratio = std::min(std::sqrt(k_prime / k), std::sqrt(k / k_prime));
  return (1.0 - ratio) * (1.0 - ratio);
}

double auc_from_scores(const std::vector<double>& scores,
                       const std::vector<int>& labels) {
  if (scores.size() != labels.size()) {
    throw DimensionError("auc_from_scores: scores/labels length mismatch");
  }
  const std::size_t m = scores.size();
  std::size_t n_pos = 0;
  for (int l : labels) n_pos += (l != 0);
  const std::size_t n_neg = m - n_pos;
  if (n_pos == 0 || n_neg == 0) {
    throw StatError("auc_from_scores: held-out set contains a single class");
  }
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&scores](std::size_t a, std::size_t b) {
    return scores[a] < scores[b];
  });
  // Midranks over tied scores.
  double rank_sum_pos = 0.0;
  std::size_t i = 0;
  while (i < m) {
    std::size_t j = i;
    while (j + 1 < m && scores[idx[j + 1]] == scores[idx[i]]) ++j;
    const double midrank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) {
      if (labels[idx[t]] != 0) rank_sum_pos += midrank;
    }
    i = j + 1;
  }
  return (rank_sum_pos - 0.5 * n_pos * (n_pos + 1)) /
         (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

Network with_holdout_mask(const Network& net, double fraction,
                          std::uint64_t seed) {
  if (!(fraction >= 0) || !(fraction < 1)) {
    throw ConfigError("holdout fraction must lie in [0, 1)");
  }
  const int n = net.n();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  const auto m = pairs.size();
  const auto h = static_cast<std::size_t>(
      std::llround(fraction * static_cast<double>(m)));
  SplitMix64 rng(derive_key(seed, kHoldoutTag));
  Network out = net;
  out.mask = Eigen::MatrixXd::Ones(n, n);
  out.mask->diagonal().setZero();
  for (std::size_t t = 0; t < h; ++t) {
    const std::size_t pick = t + next_below(rng, m - t);
    std::swap(pairs[t], pairs[pick]);
    const auto [i, j] = pairs[t];
    (*out.mask)(i, j) = 0.0;
    (*out.mask)(j, i) = 0.0;
  }
  return out;
}

double link_prediction_auc(const Network& net, int d, const InitConfig& icfg,
                           const FitConfig& fcfg, const LinkFunction& link,
                           double holdout_fraction, std::uint64_t seed,
                           Geometry geometry) {
  if (net.n() < 3) throw DimensionError("link_prediction_auc: need n >= 3");
  const Network masked = with_holdout_mask(net, holdout_fraction, seed);
  const FitResult res =
      geometry == Geometry::hyperbolic
          ? fit_pipeline(masked, d, icfg, fcfg, link)
          : fit_pipeline_euclidean(masked, d, icfg, fcfg, link);
  const Eigen::MatrixXd p_hat = probability_matrix(res.embedding, link);
  std::vector<double> scores;
  std::vector<int> labels;
  for (int j = 1; j < net.n(); ++j) {
    for (int i = 0; i < j; ++i) {
      if ((*masked.mask)(i, j) == 0.0) {
        scores.push_back(p_hat(i, j));
        labels.push_back(net.adjacency(i, j) != 0.0 ? 1 : 0);
      }
    }
  }
  return auc_from_scores(scores, labels);
}

double bic_value(double loglik, double param_count, double sample_size) {
  return -2.0 * loglik + param_count * std::log(sample_size);
}

double aic_value(double loglik, double param_count) {
  return -2.0 * loglik + 2.0 * param_count;
}

InfoCriteria information_criteria(double loglik, int n, int d,
                                  Geometry geometry) {
  if (!std::isfinite(loglik)) {
    throw DomainError("information_criteria: loglik must be finite");
  }
  const double p = static_cast<double>(n) * d +
                   (geometry == Geometry::hyperbolic ? 1.0 : 0.0);
  const double m = 0.5 * static_cast<double>(n) * (n - 1);
  return {bic_value(loglik, p, m), aic_value(loglik, p)};
}

namespace {

struct BootSlot {
  double value = 0.0;
  bool ok = false;
};

}  // namespace

LrtReport lrt_test(const Network& net, int d, int b_boot,
                   const InitConfig& icfg, const FitConfig& fcfg,
                   const LinkFunction& link, std::uint64_t seed) {
  if (b_boot < 1) throw ConfigError("lrt_test: B must be >= 1");
  const auto statistic = [&](const Network& data) {
    const FitResult h = fit_pipeline(data, d, icfg, fcfg, link);
    const FitResult e = fit_pipeline_euclidean(data, d, icfg, fcfg, link);
    return std::max(0.0, e.final_loss() - h.final_loss());
  };
  LrtReport rep;
  rep.b_requested = b_boot;
  rep.statistic = statistic(net);

  // Null-model parameters: the fitted Euclidean embedding.
  const FitResult null_fit = fit_pipeline_euclidean(net, d, icfg, fcfg, link);
  std::vector<BootSlot> slots(b_boot);
  parallel_for(b_boot, [&](int b) {
    const Network boot = generate_network(null_fit.embedding, link,
                                          derive_key(seed, kLrtTag, b));
    try {
      slots[b].value = statistic(boot);
      slots[b].ok = true;
    } catch (const DivergenceError&) {
      slots[b].ok = false;
    }
  });
  int exceed = 0;
  for (const auto& s : slots) {
    if (!s.ok) continue;
    rep.bootstrap_statistics.push_back(s.value);
    if (s.value >= rep.statistic) ++exceed;
  }
  rep.b_effective = static_cast<int>(rep.bootstrap_statistics.size());
  if (rep.b_effective == 0) {
    throw StatError("lrt_test: every bootstrap replicate diverged");
  }
  rep.p_value = (exceed + 1.0) / (rep.b_effective + 1.0);
  return rep;
}

CiReport bootstrap_ci(const Network& net, int d, int b_boot, double level,
                      const InitConfig& icfg, const FitConfig& fcfg,
                      const LinkFunction& link, std::uint64_t seed) {
  if (b_boot < 20) throw ConfigError("bootstrap_ci: B must be >= 20");
  if (!(level > 0) || !(level < 1)) {
    throw ConfigError("bootstrap_ci: level must lie in (0, 1)");
  }
  const FitResult fit_obs = fit_pipeline(net, d, icfg, fcfg, link);
  CiReport rep;
  rep.b_requested = b_boot;
  rep.level = level;
  rep.k_hat = fit_obs.embedding.curvature;

  std::vector<BootSlot> slots(b_boot);
  parallel_for(b_boot, [&](int b) {
    const Network boot = generate_network(fit_obs.embedding, link,
                                          derive_key(seed, kCiTag, b));
    try {
      slots[b].value =
          fit_pipeline(boot, d, icfg, fcfg, link).embedding.curvature;
      slots[b].ok = true;
    } catch (const DivergenceError&) {
      slots[b].ok = false;
    }
  });
  for (const auto& s : slots) {
    if (s.ok) rep.bootstrap_estimates.push_back(s.value);
  }
  rep.b_effective = static_cast<int>(rep.bootstrap_estimates.size());
  if (rep.b_effective == 0) {
    throw StatError("bootstrap_ci: every bootstrap replicate diverged");
  }
  std::tie(rep.lo, rep.hi) = percentile_interval(rep.bootstrap_estimates, level);
  return rep;
}

double percentile(std::vector<double> values, double p) {
  if (values.empty()) throw StatError("percentile: empty sample");
  if (!(p >= 0) || !(p <= 1)) throw DomainError("percentile: p must be in [0, 1]");
  std::sort(values.begin(), values.end());
  const double h = p * (static_cast<double>(values.size()) - 1.0);
  const auto lo = static_cast<std::size_t>(h);
  if (lo + 1 >= values.size()) return values.back();
  return values[lo] + (h - static_cast<double>(lo)) * (values[lo + 1] - values[lo]);
}

std::pair<double, double> percentile_interval(const std::vector<double>& values,
                                              double level) {
  const double alpha = 1.0 - level;
  return {percentile(values, alpha / 2.0), percentile(values, 1.0 - alpha / 2.0)};
}

}  // namespace hylat
