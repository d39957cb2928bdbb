#include "hgsi/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

namespace hgsi {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EdgeTooSmall: return "EdgeTooSmall";
    case ErrorCode::BadWeight: return "BadWeight";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RowCountMismatch: return "RowCountMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NodeCountMismatch: return "NodeCountMismatch";
    case ErrorCode::FactorizationFailure: return "FactorizationFailure";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::NegativeScore: return "NegativeScore";
    case ErrorCode::NotEnoughCandidates: return "NotEnoughCandidates";
    case ErrorCode::BadRho: return "BadRho";
    case ErrorCode::EmptyHypergraph: return "EmptyHypergraph";
    case ErrorCode::InfeasibleConfig: return "InfeasibleConfig";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

std::size_t Hypergraph::incidence_count() const noexcept {
  std::size_t total = 0;
  for (const auto& e : edges_) total += e.size();
  return total;
}

Hypergraph build_hypergraph(Index n, std::vector<Edge> edges,
                            std::optional<std::vector<double>> weights) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "node count must be positive");
  if (weights && weights->size() != edges.size()) {
    throw Error(ErrorCode::LengthMismatch, "weights length " + std::to_string(weights->size()) +
                                               " != edge count " + std::to_string(edges.size()));
  }

  std::set<Edge> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& e = edges[i];
    std::sort(e.begin(), e.end());
    if (e.size() < 2) {
      throw Error(ErrorCode::EdgeTooSmall, "edge " + std::to_string(i) + " has " +
                                               std::to_string(e.size()) + " node(s)");
    }
    if (e.back() >= n) {
      throw Error(ErrorCode::IndexOutOfRange, "edge " + std::to_string(i) + " references node " +
                                                  std::to_string(e.back()) + " >= n=" +
                                                  std::to_string(n));
    }
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(ErrorCode::InvalidArgument, "edge " + std::to_string(i) + " repeats a node");
    }
    if (!seen.insert(e).second) {
      throw Error(ErrorCode::DuplicateEdge, "edge " + std::to_string(i) + " repeats an earlier edge");
    }
  }
  if (weights) {
    for (std::size_t i = 0; i < weights->size(); ++i) {
      const double w = (*weights)[i];
      if (!(w > 0.0 && w <= 1.0)) {
        throw Error(ErrorCode::BadWeight, "weight " + std::to_string(i) + " = " +
                                              std::to_string(w) + " outside (0,1]");
      }
    }
  }

  Hypergraph h;
  h.n_ = n;
  h.edges_ = std::move(edges);
  h.weights_ = std::move(weights);
  return h;
}

Hypergraph with_weights(const Hypergraph& h, std::vector<double> weights) {
  return build_hypergraph(h.node_count(), h.edges(), std::move(weights));
}

Eigen::MatrixXd incidence_matrix(const Hypergraph& h) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(h.node_count()),
                                              static_cast<Eigen::Index>(h.edge_count()));
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const double w = h.weight(i);
    for (Index v : h.edge(i)) out(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(i)) = w;
  }
  return out;
}

std::vector<Edge> edges_from_incidence(const Eigen::MatrixXd& incidence) {
  std::vector<Edge> edges(static_cast<std::size_t>(incidence.cols()));
  for (Eigen::Index c = 0; c < incidence.cols(); ++c) {
    for (Eigen::Index r = 0; r < incidence.rows(); ++r) {
      if (incidence(r, c) != 0.0) edges[static_cast<std::size_t>(c)].push_back(static_cast<Index>(r));
    }
  }
  return edges;
}

FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t dim, std::vector<double> data)
    : rows_(rows), dim_(dim), data_(std::move(data)) {
  if (rows_ == 0 || dim_ == 0) {
    throw Error(ErrorCode::InvalidArgument, "feature matrix needs at least one row and one column");
  }
  if (data_.size() != rows_ * dim_) {
    throw Error(ErrorCode::InvalidArgument, "feature data has " + std::to_string(data_.size()) +
                                                " values, expected " + std::to_string(rows_ * dim_));
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!std::isfinite(data_[i])) {
      throw Error(ErrorCode::InvalidArgument, "non-finite feature at row " +
                                                  std::to_string(i / dim_) + ", column " +
                                                  std::to_string(i % dim_));
    }
  }
}

FeatureMatrix standardize_columns(const FeatureMatrix& x) {
  const std::size_t rows = x.rows();
  const std::size_t dim = x.dim();
  std::vector<double> out = x.data();
  for (std::size_t c = 0; c < dim; ++c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < rows; ++r) mean += x(r, c);
    mean /= static_cast<double>(rows);
    double var = 0.0;
    for (std::size_t r = 0; r < rows; ++r) var += (x(r, c) - mean) * (x(r, c) - mean);
    var /= static_cast<double>(rows);
    const double scale = var > 0.0 ? 1.0 / std::sqrt(var) : 1.0;
    for (std::size_t r = 0; r < rows; ++r) out[r * dim + c] = (x(r, c) - mean) * scale;
  }
  return FeatureMatrix(rows, dim, std::move(out));
}

SelectionSpec SelectionSpec::top(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "top-m selection needs m >= 1");
  return SelectionSpec{TopM{m}};
}

SelectionSpec SelectionSpec::per_size(std::map<std::size_t, std::size_t> counts) {
  if (counts.empty()) throw Error(ErrorCode::InvalidArgument, "per-size selection is empty");
  for (const auto& [size, count] : counts) {
    if (size < 2) {
      throw Error(ErrorCode::SizeTooSmall, "per-size entry for size " + std::to_string(size));
    }
    if (count == 0) {
      throw Error(ErrorCode::InvalidArgument, "per-size count for size " + std::to_string(size) +
                                                  " must be >= 1");
    }
  }
  return SelectionSpec{PerSize{std::move(counts)}};
}

}  // namespace hgsi
