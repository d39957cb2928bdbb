#include "hgsi/inference.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "hgsi/kernels.hpp"

namespace hgsi {
namespace {

std::vector<std::size_t> normalized_sizes(std::span<const std::size_t> sizes, std::size_t n) {
  if (sizes.empty()) throw Error(ErrorCode::InvalidArgument, "no hyperedge sizes given");
  std::vector<std::size_t> out(sizes.begin(), sizes.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (std::size_t k : out) {
    if (k < 2) throw Error(ErrorCode::SizeTooSmall, "hyperedge size " + std::to_string(k) + " < 2");
    if (k > n) {
      throw Error(ErrorCode::SizeTooLarge, "hyperedge size " + std::to_string(k) + " > n=" +
                                               std::to_string(n));
    }
  }
  return out;
}

/// Ranking order used by selection: higher probability first.
std::vector<std::size_t> ranked(const CandidateSet& cs, const std::vector<std::size_t>& pool) {
  const auto& probs = *cs.probs;
  const auto& scores = *cs.scores;
  std::vector<std::size_t> order = pool;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (probs[a] != probs[b]) return probs[a] > probs[b];
    if (scores[a] != scores[b]) return scores[a] < scores[b];
    return cs.candidates[a].nodes < cs.candidates[b].nodes;
  });
  return order;
}

}  // namespace

std::map<std::size_t, std::size_t> CandidateSet::per_size_counts() const {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& c : candidates) ++counts[c.size()];
  return counts;
}

CandidateSet generate_candidates(const FeatureMatrix& xv, std::span<const std::size_t> sizes) {
  const std::size_t n = xv.rows();
  CandidateSet cs;
  cs.node_count = n;
  cs.sizes = normalized_sizes(sizes, n);

  const std::size_t max_neighbours = cs.sizes.back() - 1;
  const auto dist = kernels::pairwise_sq_distances(xv);
  const auto neighbours = kernels::nearest_neighbours(dist, n, max_neighbours);

  std::set<Edge> seen;
  for (std::size_t k : cs.sizes) {
    for (Index anchor = 0; anchor < n; ++anchor) {
      Edge nodes(neighbours[anchor].begin(),
                 neighbours[anchor].begin() + static_cast<std::ptrdiff_t>(k - 1));
      nodes.push_back(anchor);
      std::sort(nodes.begin(), nodes.end());
      if (seen.insert(nodes).second) cs.candidates.push_back({std::move(nodes), anchor});
    }
  }
  return cs;
}

CandidateSet score_candidates(CandidateSet cs, const FeatureMatrix& xv, SmoothnessVariant variant) {
  if (cs.candidates.empty()) throw Error(ErrorCode::InvalidArgument, "no candidates to score");
  if (xv.rows() != cs.node_count) {
    throw Error(ErrorCode::DimensionMismatch, "features have " + std::to_string(xv.rows()) +
                                                  " rows, candidates index " +
                                                  std::to_string(cs.node_count) + " nodes");
  }
  std::vector<Edge> sets;
  sets.reserve(cs.candidates.size());
  for (const auto& c : cs.candidates) sets.push_back(c.nodes);
  cs.scores = kernels::score_sets(sets, xv, variant);
  cs.probs.reset();
  return cs;
}

std::vector<double> infer_probabilities(std::span<const double> scores) {
  std::vector<double> w;
  w.reserve(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!(scores[i] >= 0.0)) {
      throw Error(ErrorCode::NegativeScore, "score[" + std::to_string(i) + "] = " +
                                                std::to_string(scores[i]));
    }
    w.push_back(1.0 / (scores[i] + 1.0));
  }
  return w;
}

Hypergraph select_edges(const CandidateSet& cs, const SelectionSpec& spec) {
  if (!cs.probs || !cs.scores) {
    throw Error(ErrorCode::InvalidArgument, "selection needs scored candidates with probabilities");
  }
  if (cs.probs->size() != cs.count() || cs.scores->size() != cs.count()) {
    throw Error(ErrorCode::LengthMismatch, "scores/probabilities not aligned with candidates");
  }

  std::vector<std::size_t> chosen;
  if (const auto* top = std::get_if<TopM>(&spec.mode)) {
    if (top->m > cs.count()) {
      throw Error(ErrorCode::NotEnoughCandidates, "requested " + std::to_string(top->m) +
                                                      " edges, only " + std::to_string(cs.count()) +
                                                      " candidates");
    }
    std::vector<std::size_t> all(cs.count());
    std::iota(all.begin(), all.end(), 0);
    auto order = ranked(cs, all);
    chosen.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(top->m));
  } else {
    const auto& per_size = std::get<PerSize>(spec.mode);
    for (const auto& [size, count] : per_size.counts) {
      std::vector<std::size_t> pool;
      for (std::size_t i = 0; i < cs.count(); ++i) {
        if (cs.candidates[i].size() == size) pool.push_back(i);
      }
      if (count > pool.size()) {
        throw Error(ErrorCode::NotEnoughCandidates, "requested " + std::to_string(count) +
                                                        " edges of size " + std::to_string(size) +
                                                        ", only " + std::to_string(pool.size()) +
                                                        " candidates");
      }
      auto order = ranked(cs, pool);
      chosen.insert(chosen.end(), order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count));
    }
  }

  std::vector<Edge> edges;
  std::vector<double> weights;
  edges.reserve(chosen.size());
  weights.reserve(chosen.size());
  for (std::size_t i : chosen) {
    edges.push_back(cs.candidates[i].nodes);
    weights.push_back((*cs.probs)[i]);
  }
  return build_hypergraph(cs.node_count, std::move(edges), std::move(weights));
}

HgsiResult run_hgsi(const FeatureMatrix& xv, std::span<const std::size_t> sizes,
                    const SelectionSpec& spec, SmoothnessVariant variant) {
  CandidateSet cs = score_candidates(generate_candidates(xv, sizes), xv, variant);
  cs.probs = infer_probabilities(*cs.scores);
  Hypergraph selected = select_edges(cs, spec);
  return {std::move(cs), std::move(selected)};
}

double estimate_edge_count(const std::map<std::size_t, std::size_t>& per_size_candidates,
                           const std::map<std::size_t, double>& rho) {
  double total = 0.0;
  for (const auto& [size, r] : rho) {
    if (!(r >= 0.0 && r <= 1.0)) {
      throw Error(ErrorCode::BadRho, "rho for size " + std::to_string(size) + " = " +
                                         std::to_string(r) + " outside [0,1]");
    }
    const auto it = per_size_candidates.find(size);
    if (it == per_size_candidates.end()) {
      throw Error(ErrorCode::InvalidArgument, "rho given for size " + std::to_string(size) +
                                                  " with no candidate count");
    }
    total += static_cast<double>(it->second) * r;
  }
  return total;
}

}  // namespace hgsi
