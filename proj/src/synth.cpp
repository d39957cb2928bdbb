#include "hgsi/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "hgsi/probmodel.hpp"

namespace hgsi {
namespace {

constexpr int kMaxAttempts = 50;
constexpr int kBisectionSteps = 24;
constexpr int kEdgeRetries = 20;

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double average_overlap(Index n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : edges) {
    for (Index v : e) ++degree[v];
  }
  double sum = 0.0;
  for (const auto& e : edges) {
    std::size_t shared = 0;
    for (Index v : e) shared += degree[v] >= 2 ? 1 : 0;
    sum += static_cast<double>(shared) / static_cast<double>(e.size());
  }
  return sum / static_cast<double>(edges.size());
}

// Plants edges in order. Each new edge takes about share * k nodes from the
// already covered ones (stochastically rounded) and the rest from a shuffled
// pool of untouched nodes. Shared nodes are drawn from one randomly chosen
// earlier edge at a time and only from nodes that belong to a single edge,
// so overlap stays local and no node joins more than two edges. Uniformly
// scattered sharing piles shared nodes into tight clusters that look more
// like hyperedges than the planted ones. When the untouched pool runs dry
// the remainder is shared regardless.
std::optional<std::vector<Edge>> plant(Index n, const std::vector<std::size_t>& sizes, double share,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Index> pool(n);
  std::iota(pool.begin(), pool.end(), Index{0});
  std::shuffle(pool.begin(), pool.end(), rng);
  std::size_t next_fresh = 0;

  std::vector<std::vector<std::size_t>> member_of(n);  // edges containing each node
  std::set<Edge> seen;
  std::vector<Edge> edges;
  edges.reserve(sizes.size());
  for (std::size_t k : sizes) {
    bool placed = false;
    for (int attempt = 0; attempt < kEdgeRetries && !placed; ++attempt) {
      const std::size_t covered = next_fresh;
      std::size_t shared = 0;
      if (covered > 0) {
        const double want = share * static_cast<double>(k);
        shared = static_cast<std::size_t>(std::floor(want));
        if (unit(rng) < want - std::floor(want)) ++shared;
        shared = std::min({shared, k, covered});
      }
      const std::size_t available = n - next_fresh;
      const std::size_t forced = k > available ? k - available : 0;
      shared = std::max(shared, forced);
      if (shared > covered) return std::nullopt;

      // shared nodes come from one earlier edge at a time, taking only
      // nodes that are not shared yet
      std::vector<std::size_t> parents(edges.size());
      std::iota(parents.begin(), parents.end(), std::size_t{0});
      std::shuffle(parents.begin(), parents.end(), rng);
      Edge nodes;
      for (std::size_t parent : parents) {
        if (nodes.size() == shared) break;
        std::vector<Index> free_nodes;
        for (Index v : edges[parent]) {
          if (member_of[v].size() == 1) free_nodes.push_back(v);
        }
        std::shuffle(free_nodes.begin(), free_nodes.end(), rng);
        for (Index v : free_nodes) {
          if (nodes.size() == shared) break;
          nodes.push_back(v);
        }
      }
      if (nodes.size() + available < k) {
        std::vector<Index> rest(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(covered));
        std::shuffle(rest.begin(), rest.end(), rng);
        for (Index v : rest) {
          if (nodes.size() + available >= k) break;
          if (std::find(nodes.begin(), nodes.end(), v) == nodes.end()) nodes.push_back(v);
        }
      }
      const std::size_t fresh = k - nodes.size();
      if (fresh > available) return std::nullopt;
      nodes.insert(nodes.end(), pool.begin() + static_cast<std::ptrdiff_t>(next_fresh),
                   pool.begin() + static_cast<std::ptrdiff_t>(next_fresh + fresh));
      std::sort(nodes.begin(), nodes.end());
      if (!seen.insert(nodes).second) continue;

      next_fresh += fresh;
      for (Index v : nodes) member_of[v].push_back(edges.size());
      edges.push_back(std::move(nodes));
      placed = true;
    }
    if (!placed) return std::nullopt;
  }
  return edges;
}

void validate(const SynthConfig& cfg) {
  if (cfg.n == 0) throw Error(ErrorCode::InvalidArgument, "node count must be positive");
  if (cfg.edge_spec.empty()) throw Error(ErrorCode::InvalidArgument, "edge spec is empty");
  if (!(cfg.target_overlap >= 0.0 && cfg.target_overlap < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "target overlap must lie in [0, 1)");
  }
  for (const auto& [size, count] : cfg.edge_spec) {
    if (size < 2) throw Error(ErrorCode::SizeTooSmall, "edge size " + std::to_string(size) + " < 2");
    if (count == 0) {
      throw Error(ErrorCode::InvalidArgument, "edge count for size " + std::to_string(size) + " is 0");
    }
    if (size > cfg.n) {
      throw Error(ErrorCode::InfeasibleConfig, "edge size " + std::to_string(size) + " exceeds n=" +
                                                   std::to_string(cfg.n));
    }
  }
}

}  // namespace

OverlapReport overlap_rate(const Hypergraph& h) {
  if (h.edge_count() == 0) throw Error(ErrorCode::EmptyHypergraph, "overlap of a hypergraph without edges");
  std::vector<std::size_t> degree(h.node_count(), 0);
  for (const auto& e : h.edges()) {
    for (Index v : e) ++degree[v];
  }
  OverlapReport out;
  out.per_edge.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    std::size_t shared = 0;
    for (Index v : e) shared += degree[v] >= 2 ? 1 : 0;
    out.per_edge.push_back(static_cast<double>(shared) / static_cast<double>(e.size()));
  }
  out.average = std::accumulate(out.per_edge.begin(), out.per_edge.end(), 0.0) /
                static_cast<double>(out.per_edge.size());
  return out;
}

Hypergraph generate_ground_truth(const SynthConfig& cfg) {
  validate(cfg);

  std::vector<std::size_t> sizes;
  for (const auto& [size, count] : cfg.edge_spec) sizes.insert(sizes.end(), count, size);
  {
    std::mt19937_64 order_rng(mix(cfg.seed, 0x5153));
    std::shuffle(sizes.begin(), sizes.end(), order_rng);
  }

  const double target = cfg.target_overlap;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::uint64_t seed = mix(cfg.seed, static_cast<std::uint64_t>(attempt) + 1);
    std::optional<std::vector<Edge>> best;
    double best_gap = kOverlapTolerance;

    // Returns the achieved overlap, or nullopt when planting failed.
    auto evaluate = [&](double share) -> std::optional<double> {
      auto edges = plant(cfg.n, sizes, share, seed);
      if (!edges) return std::nullopt;
      const double overlap = average_overlap(cfg.n, *edges);
      const double gap = std::abs(overlap - target);
      if (gap <= best_gap && (!best || gap < best_gap)) {
        best_gap = gap;
        best = std::move(edges);
      }
      return overlap;
    };

    evaluate(0.0);
    double lo = 0.0;
    double hi = 1.0;
    for (int step = 0; step < kBisectionSteps && best_gap > 0.0; ++step) {
      const double mid = 0.5 * (lo + hi);
      const auto overlap = evaluate(mid);
      if (!overlap || *overlap < target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    if (best) return build_hypergraph(cfg.n, std::move(*best));
  }
  throw Error(ErrorCode::InfeasibleConfig,
              "could not plant the requested edges on " + std::to_string(cfg.n) +
                  " nodes within overlap " + std::to_string(target) + " +/- " +
                  std::to_string(kOverlapTolerance));
}

SyntheticDataset make_dataset(const SynthConfig& cfg) {
  Hypergraph truth = generate_ground_truth(cfg);
  const auto laplacian = incidence_laplacian(truth);
  auto features = sample_features(laplacian, {cfg.sigma, cfg.dim, mix(cfg.seed, 0xfea7)});
  const double achieved = overlap_rate(truth).average;
  return {std::move(truth), std::move(features.nodes), std::move(*features.edges), cfg, achieved};
}

}  // namespace hgsi
