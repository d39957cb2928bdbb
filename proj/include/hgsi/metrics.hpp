#pragma once

#include <optional>
#include <vector>

#include "hgsi/core.hpp"
#include "hgsi/inference.hpp"

namespace hgsi {

struct MatchReport {
  std::size_t true_positives = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Exact node-set matching between predicted and true hyperedges.
/// Empty predictions (or truth) give precision (recall) 0.
MatchReport f1_exact(const Hypergraph& pred, const Hypergraph& truth);

/// Solves the rectangular assignment problem maximising the summed weight.
/// Returns, for each row, the matched column or nullopt. Rows and columns
/// beyond the smaller side stay unmatched.
std::vector<std::optional<std::size_t>> max_weight_assignment(
    const std::vector<std::vector<double>>& weight);

/// Squared Frobenius error between the binary incidence matrices after the
/// best column alignment, divided by the squared norm of the truth matrix.
/// Unmatched columns are compared against zero columns.
double hgmse(const Hypergraph& pred, const Hypergraph& truth);

struct SeparationReport {
  std::optional<double> mean_truth_prob;
  std::optional<double> mean_other_prob;
  /// truth minus other, present when both groups are nonempty
  std::optional<double> gap;
};

SeparationReport probability_separation(const CandidateSet& cs, const Hypergraph& truth);

}  // namespace hgsi
