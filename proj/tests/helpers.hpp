#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hgsi/core.hpp"

namespace hgsi::testing {

inline FeatureMatrix random_features(std::size_t rows, std::size_t dim, std::mt19937_64& rng,
                                     double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  std::vector<double> data(rows * dim);
  for (auto& v : data) v = g(rng);
  return FeatureMatrix(rows, dim, std::move(data));
}

inline FeatureMatrix features(std::size_t rows, std::size_t dim, std::vector<double> data) {
  return FeatureMatrix(rows, dim, std::move(data));
}

// Random hypergraph with distinct edges of size 2..max_size.
inline Hypergraph random_hypergraph(Index n, std::size_t m, std::size_t max_size, std::mt19937_64& rng,
                                    bool weighted = false) {
  std::uniform_int_distribution<std::size_t> size_dist(2, std::min<std::size_t>(max_size, n));
  std::uniform_real_distribution<double> w_dist(0.05, 1.0);
  std::vector<Index> nodes(n);
  std::iota(nodes.begin(), nodes.end(), Index{0});
  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (int guard = 0; edges.size() < m && guard < 1000; ++guard) {
    std::shuffle(nodes.begin(), nodes.end(), rng);
    Edge e(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(size_dist(rng)));
    std::sort(e.begin(), e.end());
    if (seen.insert(e).second) edges.push_back(std::move(e));
  }
  std::optional<std::vector<double>> w;
  if (weighted) {
    w.emplace();
    for (std::size_t i = 0; i < edges.size(); ++i) w->push_back(w_dist(rng));
  }
  return build_hypergraph(n, std::move(edges), std::move(w));
}

}  // namespace hgsi::testing
