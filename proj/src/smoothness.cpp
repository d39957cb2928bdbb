#include "hgsi/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace hgsi {
namespace {

void check_nodes(std::span<const Index> edge, const FeatureMatrix& xv) {
  for (Index v : edge) {
    if (v >= xv.rows()) {
      throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(v) + " has no feature row (" +
                                                  std::to_string(xv.rows()) + " rows)");
    }
  }
}

void check_feature_rows(const Hypergraph& h, const FeatureMatrix& xv) {
  if (xv.rows() != h.node_count()) {
    throw Error(ErrorCode::RowCountMismatch, "node features have " + std::to_string(xv.rows()) +
                                                 " rows for " + std::to_string(h.node_count()) +
                                                 " nodes");
  }
}

// splitmix64 finaliser
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t edge_seed(std::uint64_t seed, std::span<const Index> edge) {
  std::uint64_t h = mix(seed);
  for (Index v : edge) h = mix(h ^ static_cast<std::uint64_t>(v));
  return h;
}

}  // namespace

double squared_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, std::to_string(a.size()) + " vs " +
                                                  std::to_string(b.size()));
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    acc += diff * diff;
  }
  return acc;
}

double edge_smoothness_ev(std::span<const Index> edge, const FeatureMatrix& xv,
                          std::span<const double> xe) {
  if (edge.empty()) throw Error(ErrorCode::EdgeTooSmall, "empty edge");
  if (xe.size() != xv.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "hyperedge feature has dim " +
                                                  std::to_string(xe.size()) + ", nodes have " +
                                                  std::to_string(xv.dim()));
  }
  check_nodes(edge, xv);
  double total = 0.0;
  for (Index v : edge) total += squared_distance(xe, xv.row(v));
  return total;
}

SmoothnessResult smoothness_ev(const Hypergraph& h, const FeatureMatrix& xv,
                               const FeatureMatrix& xe) {
  check_feature_rows(h, xv);
  if (xe.rows() != h.edge_count()) {
    throw Error(ErrorCode::RowCountMismatch, "hyperedge features have " +
                                                 std::to_string(xe.rows()) + " rows for " +
                                                 std::to_string(h.edge_count()) + " edges");
  }
  if (xe.dim() != xv.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "node dim " + std::to_string(xv.dim()) +
                                                  " vs hyperedge dim " + std::to_string(xe.dim()));
  }
  SmoothnessResult out;
  out.s.kind = SmoothnessKind::EV;
  out.s.values.reserve(h.edge_count());
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const double s = edge_smoothness_ev(h.edge(i), xv, xe.row(i));
    out.s.values.push_back(s);
    out.total += s;
  }
  return out;
}

double edge_smoothness_v(std::span<const Index> edge, const FeatureMatrix& xv) {
  return variant_edge_smoothness(edge, xv, SmoothnessVariant::max());
}

SmoothnessResult smoothness_v(const Hypergraph& h, const FeatureMatrix& xv) {
  check_feature_rows(h, xv);
  SmoothnessResult out;
  out.s.kind = SmoothnessKind::V;
  out.s.values.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    const double s = edge_smoothness_v(e, xv);
    out.s.values.push_back(s);
    out.total += s;
  }
  return out;
}

double weighted_smoothness_ev(std::span<const double> w, const Hypergraph& candidates,
                              const FeatureMatrix& xv, const FeatureMatrix& xe) {
  if (w.size() != candidates.edge_count()) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(w.size()) + " weights for " +
                                               std::to_string(candidates.edge_count()) + " edges");
  }
  for (double wi : w) {
    if (!(wi >= 0.0 && wi <= 1.0)) {
      throw Error(ErrorCode::BadWeight, "probability " + std::to_string(wi) + " outside [0,1]");
    }
  }
  const auto s = smoothness_ev(candidates, xv, xe);
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) total += w[i] * s.s.values[i];
  return total;
}

double objective_fwv(std::span<const double> w, const SmoothnessVector& s_prime) {
  if (s_prime.kind != SmoothnessKind::V) {
    throw Error(ErrorCode::InvalidArgument, "objective expects node-only smoothness values");
  }
  if (w.size() != s_prime.values.size()) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(w.size()) + " weights for " +
                                               std::to_string(s_prime.values.size()) + " scores");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(w[i] > 0.0)) {
      throw Error(ErrorCode::NonPositiveWeight, "w[" + std::to_string(i) + "] = " +
                                                    std::to_string(w[i]));
    }
    if (w[i] > 1.0) {
      throw Error(ErrorCode::BadWeight, "w[" + std::to_string(i) + "] = " + std::to_string(w[i]));
    }
    total += w[i] * s_prime.values[i] - std::log(w[i]) + w[i];
  }
  return total;
}

double variant_edge_smoothness(std::span<const Index> edge, const FeatureMatrix& xv,
                               SmoothnessVariant variant) {
  const std::size_t k = edge.size();
  if (k < 2) {
    throw Error(ErrorCode::EdgeTooSmall, "pairwise smoothness needs >= 2 nodes, got " +
                                             std::to_string(k));
  }
  check_nodes(edge, xv);

  using Tag = SmoothnessVariant::Tag;
  if (variant.tag == Tag::Random) {
    std::mt19937_64 rng(edge_seed(variant.seed, edge));
    std::uniform_int_distribution<std::size_t> pick(0, k * (k - 1) / 2 - 1);
    std::size_t p = pick(rng);
    // unrank p into the pair (a, b) with a < b in row-major order
    std::size_t a = 0;
    while (p >= k - 1 - a) {
      p -= k - 1 - a;
      ++a;
    }
    const std::size_t b = a + 1 + p;
    return squared_distance(xv.row(edge[a]), xv.row(edge[b]));
  }

  double best_max = 0.0;
  double best_min = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const double d = squared_distance(xv.row(edge[a]), xv.row(edge[b]));
      best_max = std::max(best_max, d);
      best_min = std::min(best_min, d);
      sum += d;
    }
  }
  switch (variant.tag) {
    case Tag::Max: return best_max;
    case Tag::Min: return best_min;
    case Tag::Mean: return sum / static_cast<double>(k * (k - 1) / 2);
    case Tag::Random: break;
  }
  return best_max;
}

}  // namespace hgsi
