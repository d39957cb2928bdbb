#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "hgsi/error.hpp"

namespace hgsi {

using Index = std::size_t;

/// A hyperedge is stored as a strictly increasing list of node indices.
using Edge = std::vector<Index>;

/// Immutable hypergraph over nodes [0, n). Edge order defines the column
/// order of the incidence matrix; optional weights scale those columns.
class Hypergraph {
 public:
  Hypergraph() = default;

  Index node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  bool is_weighted() const noexcept { return weights_.has_value(); }
  const std::optional<std::vector<double>>& weights() const noexcept { return weights_; }
  /// Weight of edge i, or 1 for unweighted hypergraphs.
  double weight(std::size_t i) const { return weights_ ? weights_->at(i) : 1.0; }

  /// Number of incidences (sum of edge sizes).
  std::size_t incidence_count() const noexcept;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  friend Hypergraph build_hypergraph(Index, std::vector<Edge>, std::optional<std::vector<double>>);

  Index n_ = 0;
  std::vector<Edge> edges_;
  std::optional<std::vector<double>> weights_;
};

/// Validates and canonicalises (sorts) every edge.
///
/// Throws IndexOutOfRange, DuplicateEdge, EdgeTooSmall, BadWeight or
/// LengthMismatch. A node repeated inside one edge is an InvalidArgument.
Hypergraph build_hypergraph(Index n, std::vector<Edge> edges,
                            std::optional<std::vector<double>> weights = std::nullopt);

/// Copy of h with the given per-edge weights attached.
Hypergraph with_weights(const Hypergraph& h, std::vector<double> weights);

/// n x m incidence matrix; entry (j, i) is w_i (or 1) iff edge i contains node j.
Eigen::MatrixXd incidence_matrix(const Hypergraph& h);

/// Recovers edge sets from the nonzero pattern of an incidence matrix.
std::vector<Edge> edges_from_incidence(const Eigen::MatrixXd& incidence);

/// Dense row-major matrix of finite reals: one row per node (or hyperedge).
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  /// Throws InvalidArgument on zero extents, bad data length, or non-finite entries.
  FeatureMatrix(std::size_t rows, std::size_t dim, std::vector<double> data);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t dim() const noexcept { return dim_; }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * dim_, dim_};
  }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  const std::vector<double>& data() const noexcept { return data_; }

  friend bool operator==(const FeatureMatrix&, const FeatureMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

/// Returns a copy with every column shifted to zero mean and scaled to unit
/// variance. Constant columns are only centred.
FeatureMatrix standardize_columns(const FeatureMatrix& x);

struct TopM {
  std::size_t m = 1;
};

struct PerSize {
  std::map<std::size_t, std::size_t> counts;
};

/// How many candidates to keep: m overall, or a fixed count per edge size.
struct SelectionSpec {
  std::variant<TopM, PerSize> mode;

  static SelectionSpec top(std::size_t m);
  static SelectionSpec per_size(std::map<std::size_t, std::size_t> counts);
};

}  // namespace hgsi
