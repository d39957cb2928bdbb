#pragma once

// Per-element routines shared by the serial and OpenMP kernels so both paths
// run identical arithmetic.

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hgsi/core.hpp"

namespace hgsi::kernels::detail {

double row_distance(const FeatureMatrix& x, std::size_t a, std::size_t b);

std::vector<Index> neighbours_of(std::span<const double> dist, std::size_t n, std::size_t anchor,
                                 std::size_t count);

/// Solves lower^T x = rhs(:, col) in place.
void back_substitute_column(const Eigen::MatrixXd& lower, Eigen::MatrixXd& rhs, Eigen::Index col);

void check_neighbour_request(std::span<const double> dist, std::size_t n, std::size_t count);
void check_square(const Eigen::MatrixXd& lower, const Eigen::MatrixXd& rhs);
void check_sets(std::span<const Edge> sets, const FeatureMatrix& x);

}  // namespace hgsi::kernels::detail
