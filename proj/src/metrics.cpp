#include "hgsi/metrics.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace hgsi {
namespace {

void check_same_n(const Hypergraph& pred, const Hypergraph& truth) {
  if (pred.node_count() != truth.node_count()) {
    throw Error(ErrorCode::NodeCountMismatch, "prediction has n=" + std::to_string(pred.node_count()) +
                                                  ", truth has n=" + std::to_string(truth.node_count()));
  }
}

std::size_t intersection_size(const Edge& a, const Edge& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace

MatchReport f1_exact(const Hypergraph& pred, const Hypergraph& truth) {
  check_same_n(pred, truth);
  // edges within one hypergraph are distinct sets, so each truth edge can
  // match at most one prediction
  const std::set<Edge> truth_set(truth.edges().begin(), truth.edges().end());
  MatchReport r;
  for (const auto& e : pred.edges()) r.true_positives += truth_set.count(e);
  const auto tp = static_cast<double>(r.true_positives);
  r.precision = pred.edge_count() ? tp / static_cast<double>(pred.edge_count()) : 0.0;
  r.recall = truth.edge_count() ? tp / static_cast<double>(truth.edge_count()) : 0.0;
  r.f1 = r.precision + r.recall > 0.0 ? 2.0 * r.precision * r.recall / (r.precision + r.recall) : 0.0;
  return r;
}

std::vector<std::optional<std::size_t>> max_weight_assignment(
    const std::vector<std::vector<double>>& weight) {
  const std::size_t rows = weight.size();
  const std::size_t cols = rows ? weight.front().size() : 0;
  for (const auto& row : weight) {
    if (row.size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged weight matrix");
  }
  std::vector<std::optional<std::size_t>> match(rows);
  if (rows == 0 || cols == 0) return match;

  // Shortest augmenting path Hungarian method on the padded square cost
  // matrix (cost = max weight - weight, padding costs max weight).
  const std::size_t n = std::max(rows, cols);
  double top = 0.0;
  for (const auto& row : weight) {
    for (double w : row) top = std::max(top, w);
  }
  auto cost = [&](std::size_t r, std::size_t c) {
    return (r < rows && c < cols) ? top - weight[r][c] : top;
  };

  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t r = p[j] - 1;
    const std::size_t c = j - 1;
    if (r < rows && c < cols) match[r] = c;
  }
  return match;
}

double hgmse(const Hypergraph& pred, const Hypergraph& truth) {
  check_same_n(pred, truth);
  if (truth.edge_count() == 0 || pred.edge_count() == 0) {
    throw Error(ErrorCode::EmptyHypergraph, "HGMSE needs edges on both sides");
  }
  std::vector<std::vector<double>> overlap(pred.edge_count(),
                                           std::vector<double>(truth.edge_count(), 0.0));
  for (std::size_t i = 0; i < pred.edge_count(); ++i) {
    for (std::size_t j = 0; j < truth.edge_count(); ++j) {
      overlap[i][j] = static_cast<double>(intersection_size(pred.edge(i), truth.edge(j)));
    }
  }
  // ||a - b||^2 = |a| + |b| - 2 |a & b| for binary columns, so the aligned
  // error only depends on the total matched intersection
  const auto match = max_weight_assignment(overlap);
  double matched = 0.0;
  for (std::size_t i = 0; i < match.size(); ++i) {
    if (match[i]) matched += overlap[i][*match[i]];
  }
  const auto pred_norm = static_cast<double>(pred.incidence_count());
  const auto truth_norm = static_cast<double>(truth.incidence_count());
  return (pred_norm + truth_norm - 2.0 * matched) / truth_norm;
}

SeparationReport probability_separation(const CandidateSet& cs, const Hypergraph& truth) {
  if (!cs.probs || cs.probs->size() != cs.count()) {
    throw Error(ErrorCode::InvalidArgument, "separation needs candidate probabilities");
  }
  const std::set<Edge> truth_set(truth.edges().begin(), truth.edges().end());
  double truth_sum = 0.0;
  double other_sum = 0.0;
  std::size_t truth_n = 0;
  std::size_t other_n = 0;
  for (std::size_t i = 0; i < cs.count(); ++i) {
    if (truth_set.count(cs.candidates[i].nodes)) {
      truth_sum += (*cs.probs)[i];
      ++truth_n;
    } else {
      other_sum += (*cs.probs)[i];
      ++other_n;
    }
  }
  SeparationReport r;
  if (truth_n) r.mean_truth_prob = truth_sum / static_cast<double>(truth_n);
  if (other_n) r.mean_other_prob = other_sum / static_cast<double>(other_n);
  if (truth_n && other_n) r.gap = *r.mean_truth_prob - *r.mean_other_prob;
  return r;
}

}  // namespace hgsi
