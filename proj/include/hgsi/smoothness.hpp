#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hgsi/core.hpp"

namespace hgsi {

enum class SmoothnessKind {
  EV,  ///< distances from each node to its hyperedge's feature
  V,   ///< largest pairwise node distance within the hyperedge
};

/// One nonnegative smoothness value per hyperedge.
struct SmoothnessVector {
  std::vector<double> values;
  SmoothnessKind kind = SmoothnessKind::V;
};

struct SmoothnessResult {
  double total = 0.0;  ///< l1 norm of `s`
  SmoothnessVector s;
};

/// Pair statistic used to score a hyperedge from node features alone.
/// Max is the criterion the inference relies on; the others exist for
/// ablation runs.
struct SmoothnessVariant {
  enum class Tag { Max, Mean, Min, Random };

  Tag tag = Tag::Max;
  std::uint64_t seed = 0;  ///< used only by Random

  static SmoothnessVariant max() { return {Tag::Max, 0}; }
  static SmoothnessVariant mean() { return {Tag::Mean, 0}; }
  static SmoothnessVariant min() { return {Tag::Min, 0}; }
  static SmoothnessVariant random(std::uint64_t seed) { return {Tag::Random, seed}; }

  friend bool operator==(const SmoothnessVariant&, const SmoothnessVariant&) = default;
};

/// Squared Euclidean distance between two equally long rows.
double squared_distance(std::span<const double> a, std::span<const double> b);

/// Sum over v in edge of ||x_e - x_v||^2.
double edge_smoothness_ev(std::span<const Index> edge, const FeatureMatrix& xv,
                          std::span<const double> xe);

SmoothnessResult smoothness_ev(const Hypergraph& h, const FeatureMatrix& xv,
                               const FeatureMatrix& xe);

/// Largest squared distance between any two nodes of the edge. Throws
/// EdgeTooSmall for fewer than two nodes.
double edge_smoothness_v(std::span<const Index> edge, const FeatureMatrix& xv);

SmoothnessResult smoothness_v(const Hypergraph& h, const FeatureMatrix& xv);

/// w^T s for the hyperedge-feature smoothness of `candidates`.
double weighted_smoothness_ev(std::span<const double> w, const Hypergraph& candidates,
                              const FeatureMatrix& xv, const FeatureMatrix& xe);

/// w^T s' - sum(log w) + ||w||_1. Every w_i must lie in (0, 1].
double objective_fwv(std::span<const double> w, const SmoothnessVector& s_prime);

/// Max, mean, min, or one seeded random pair of squared distances. The
/// Random pick depends only on the seed and the edge's node set.
double variant_edge_smoothness(std::span<const Index> edge, const FeatureMatrix& xv,
                               SmoothnessVariant variant);

}  // namespace hgsi
