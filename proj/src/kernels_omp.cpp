#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hgsi/kernels.hpp"
#include "kernels_detail.hpp"

namespace hgsi::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace parallel {

std::vector<double> pairwise_sq_distances(const FeatureMatrix& x) {
  const auto n = static_cast<std::int64_t>(x.rows());
  std::vector<double> dist(x.rows() * x.rows(), 0.0);
  // row a owns the upper-triangle entries (a, b > a) and their mirrors, so
  // no two iterations write the same element
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = a + 1; b < n; ++b) {
      const double d = detail::row_distance(x, static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      dist[static_cast<std::size_t>(a * n + b)] = d;
      dist[static_cast<std::size_t>(b * n + a)] = d;
    }
  }
  return dist;
}

std::vector<std::vector<Index>> nearest_neighbours(std::span<const double> dist, std::size_t n,
                                                   std::size_t count) {
  detail::check_neighbour_request(dist, n, count);
  std::vector<std::vector<Index>> out(n);
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < rows; ++v) {
    out[static_cast<std::size_t>(v)] = detail::neighbours_of(dist, n, static_cast<std::size_t>(v), count);
  }
  return out;
}

std::vector<double> score_sets(std::span<const Edge> sets, const FeatureMatrix& x,
                               SmoothnessVariant variant) {
  // validation happens up front: nothing below may throw inside the region
  detail::check_sets(sets, x);
  std::vector<double> out(sets.size());
  const auto count = static_cast<std::int64_t>(sets.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    out[idx] = variant_edge_smoothness(sets[idx], x, variant);
  }
  return out;
}

void back_substitute_columns(const Eigen::MatrixXd& lower, Eigen::MatrixXd& rhs) {
  detail::check_square(lower, rhs);
  const auto cols = static_cast<std::int64_t>(rhs.cols());
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < cols; ++c) {
    detail::back_substitute_column(lower, rhs, static_cast<Eigen::Index>(c));
  }
}

}  // namespace parallel
}  // namespace hgsi::kernels
