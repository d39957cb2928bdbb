#include <algorithm>
#include <string>

#include "hgsi/kernels.hpp"
#include "kernels_detail.hpp"

namespace hgsi::kernels {
namespace detail {

double row_distance(const FeatureMatrix& x, std::size_t a, std::size_t b) {
  const auto ra = x.row(a);
  const auto rb = x.row(b);
  double acc = 0.0;
  for (std::size_t c = 0; c < ra.size(); ++c) {
    const double diff = ra[c] - rb[c];
    acc += diff * diff;
  }
  return acc;
}

std::vector<Index> neighbours_of(std::span<const double> dist, std::size_t n, std::size_t anchor,
                                 std::size_t count) {
  std::vector<Index> order;
  order.reserve(n - 1);
  for (Index v = 0; v < n; ++v) {
    if (v != anchor) order.push_back(v);
  }
  const double* row = dist.data() + anchor * n;
  auto closer = [row](Index a, Index b) { return row[a] < row[b] || (row[a] == row[b] && a < b); };
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count), order.end(),
                    closer);
  order.resize(count);
  return order;
}

void back_substitute_column(const Eigen::MatrixXd& lower, Eigen::MatrixXd& rhs, Eigen::Index col) {
  // column i of `lower` is row i of lower^T, so the inner loop is contiguous
  const Eigen::Index n = lower.rows();
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    double acc = rhs(i, col);
    for (Eigen::Index j = i + 1; j < n; ++j) acc -= lower(j, i) * rhs(j, col);
    rhs(i, col) = acc / lower(i, i);
  }
}

void check_neighbour_request(std::span<const double> dist, std::size_t n, std::size_t count) {
  if (dist.size() != n * n) {
    throw Error(ErrorCode::DimensionMismatch, "distance matrix has " + std::to_string(dist.size()) +
                                                  " entries for n=" + std::to_string(n));
  }
  if (count >= n) {
    throw Error(ErrorCode::SizeTooLarge, "asked for " + std::to_string(count) +
                                             " neighbours among " + std::to_string(n) + " rows");
  }
}

void check_square(const Eigen::MatrixXd& lower, const Eigen::MatrixXd& rhs) {
  if (lower.rows() != lower.cols() || lower.rows() != rhs.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "triangular solve shape mismatch");
  }
}

void check_sets(std::span<const Edge> sets, const FeatureMatrix& x) {
  for (const auto& s : sets) {
    if (s.size() < 2) throw Error(ErrorCode::EdgeTooSmall, "set with fewer than two nodes");
    for (Index v : s) {
      if (v >= x.rows()) {
        throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(v) + " has no feature row");
      }
    }
  }
}

}  // namespace detail

namespace serial {

std::vector<double> pairwise_sq_distances(const FeatureMatrix& x) {
  const std::size_t n = x.rows();
  std::vector<double> dist(n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double d = detail::row_distance(x, a, b);
      dist[a * n + b] = d;
      dist[b * n + a] = d;
    }
  }
  return dist;
}

std::vector<std::vector<Index>> nearest_neighbours(std::span<const double> dist, std::size_t n,
                                                   std::size_t count) {
  detail::check_neighbour_request(dist, n, count);
  std::vector<std::vector<Index>> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = detail::neighbours_of(dist, n, v, count);
  return out;
}

std::vector<double> score_sets(std::span<const Edge> sets, const FeatureMatrix& x,
                               SmoothnessVariant variant) {
  detail::check_sets(sets, x);
  std::vector<double> out(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) out[i] = variant_edge_smoothness(sets[i], x, variant);
  return out;
}

void back_substitute_columns(const Eigen::MatrixXd& lower, Eigen::MatrixXd& rhs) {
  detail::check_square(lower, rhs);
  for (Eigen::Index c = 0; c < rhs.cols(); ++c) detail::back_substitute_column(lower, rhs, c);
}

}  // namespace serial
}  // namespace hgsi::kernels
