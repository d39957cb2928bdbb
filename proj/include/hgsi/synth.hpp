#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hgsi/core.hpp"

namespace hgsi {

struct SynthConfig {
  Index n = 100;
  std::map<std::size_t, std::size_t> edge_spec{{8, 12}};  ///< size -> count
  double target_overlap = 0.0;                             ///< in [0, 1)
  double sigma = 1e-3;
  std::size_t dim = 1000;
  std::uint64_t seed = 0;
};

struct SyntheticDataset {
  Hypergraph truth;
  FeatureMatrix node_features;
  FeatureMatrix edge_features;
  SynthConfig config;
  double achieved_overlap = 0.0;
};

struct OverlapReport {
  std::vector<double> per_edge;  ///< shared-node fraction of each edge
  double average = 0.0;
};

/// Fraction of each edge's nodes that belong to two or more edges, and the
/// mean over edges. Throws EmptyHypergraph when there are no edges.
OverlapReport overlap_rate(const Hypergraph& h);

/// Largest allowed |achieved - target| average overlap.
inline constexpr double kOverlapTolerance = 0.05;

/// Plants the requested edges with an average overlap within
/// kOverlapTolerance of the target. Deterministic per seed; throws
/// InfeasibleConfig when no attempt lands within tolerance.
Hypergraph generate_ground_truth(const SynthConfig& cfg);

/// Ground truth plus node and hyperedge features sampled from the
/// incidence-graph Gaussian model.
SyntheticDataset make_dataset(const SynthConfig& cfg);

}  // namespace hgsi
