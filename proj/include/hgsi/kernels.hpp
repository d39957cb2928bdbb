#pragma once

// Hot loops of the pipeline. Each kernel has a plain serial reference and an
// OpenMP version; both produce bit-identical output (every output element is
// computed by the same arithmetic, only the iteration is split across
// threads). Tests compare the two and the benchmark target times them.

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hgsi/core.hpp"
#include "hgsi/smoothness.hpp"

namespace hgsi::kernels {

namespace serial {

/// Row-major n x n matrix of squared Euclidean distances between rows of x.
std::vector<double> pairwise_sq_distances(const FeatureMatrix& x);

/// For every anchor, the `count` closest other rows ordered by (distance, index).
std::vector<std::vector<Index>> nearest_neighbours(std::span<const double> dist, std::size_t n,
                                                   std::size_t count);

/// variant_edge_smoothness for every set, in input order.
std::vector<double> score_sets(std::span<const Edge> sets, const FeatureMatrix& x,
                               SmoothnessVariant variant);

/// Overwrites every column z of `rhs` with the solution of lower^T * x = z,
/// where `lower` is a lower-triangular Cholesky factor.
void back_substitute_columns(const Eigen::MatrixXd& lower, Eigen::MatrixXd& rhs);

}  // namespace serial

namespace parallel {

std::vector<double> pairwise_sq_distances(const FeatureMatrix& x);
std::vector<std::vector<Index>> nearest_neighbours(std::span<const double> dist, std::size_t n,
                                                   std::size_t count);
std::vector<double> score_sets(std::span<const Edge> sets, const FeatureMatrix& x,
                               SmoothnessVariant variant);
void back_substitute_columns(const Eigen::MatrixXd& lower, Eigen::MatrixXd& rhs);

}  // namespace parallel

/// Number of OpenMP threads available, or 1 when built without OpenMP.
int max_threads();

using parallel::nearest_neighbours;
using parallel::pairwise_sq_distances;
using parallel::score_sets;
using parallel::back_substitute_columns;

}  // namespace hgsi::kernels
