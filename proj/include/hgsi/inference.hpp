#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hgsi/core.hpp"
#include "hgsi/smoothness.hpp"

namespace hgsi {

/// A potential hyperedge: a node (the anchor) plus its size-1 nearest
/// neighbours in feature space.
struct Candidate {
  Edge nodes;  ///< sorted
  Index anchor = 0;

  std::size_t size() const noexcept { return nodes.size(); }
};

struct CandidateSet {
  Index node_count = 0;
  std::vector<Candidate> candidates;   ///< ordered by (size, anchor), no repeated node sets
  std::vector<std::size_t> sizes;      ///< requested sizes, ascending
  std::optional<std::vector<double>> scores;  ///< s' per candidate
  std::optional<std::vector<double>> probs;   ///< w per candidate

  std::size_t count() const noexcept { return candidates.size(); }
  /// Number of candidates of each size.
  std::map<std::size_t, std::size_t> per_size_counts() const;
};

/// Builds one candidate per (size, anchor) pair and drops repeated node sets,
/// keeping the first occurrence. Neighbour ties go to the smaller index.
/// Throws SizeTooSmall (k < 2) or SizeTooLarge (k > n).
CandidateSet generate_candidates(const FeatureMatrix& xv, std::span<const std::size_t> sizes);

/// Fills `scores` with the chosen pair statistic (Max by default).
CandidateSet score_candidates(CandidateSet cs, const FeatureMatrix& xv,
                              SmoothnessVariant variant = SmoothnessVariant::max());

/// Closed-form minimiser of the probability objective: w_i = 1 / (s'_i + 1).
std::vector<double> infer_probabilities(std::span<const double> scores);

/// Keeps the most probable candidates. Ties fall back to the lower score,
/// then to the lexicographically smaller node set. The selected probabilities
/// become the weights of the returned hypergraph.
Hypergraph select_edges(const CandidateSet& cs, const SelectionSpec& spec);

struct HgsiResult {
  CandidateSet candidates;  ///< scored, with probabilities
  Hypergraph selected;
};

/// Candidate generation, scoring, probability inference and selection.
HgsiResult run_hgsi(const FeatureMatrix& xv, std::span<const std::size_t> sizes,
                    const SelectionSpec& spec, SmoothnessVariant variant = SmoothnessVariant::max());

/// sum_k count_k * rho_k over the sizes present in `rho`.
double estimate_edge_count(const std::map<std::size_t, std::size_t>& per_size_candidates,
                           const std::map<std::size_t, double>& rho);

}  // namespace hgsi
