#pragma once

#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "hgsi/core.hpp"

namespace hgsi {

/// Laplacian of the bipartite node/hyperedge incidence graph:
///
///   [ diag(H 1_m)   -H          ]
///   [ -H^T          diag(H^T 1_n) ]
///
/// with H the (possibly weighted) n x m incidence matrix. Rows 0..n-1 are
/// nodes, rows n..n+m-1 are hyperedges.
struct IncidenceLaplacian {
  Index n = 0;
  std::size_t m = 0;
  Eigen::MatrixXd matrix;

  std::size_t size() const noexcept { return n + m; }
};

IncidenceLaplacian incidence_laplacian(const Hypergraph& h);

struct GaussianModelConfig {
  double sigma = 1e-3;    ///< regulariser; the precision matrix is L + sigma^2 I
  std::size_t dim = 1000;
  std::uint64_t seed = 0;
};

struct SampledFeatures {
  FeatureMatrix nodes;                 ///< n x dim
  std::optional<FeatureMatrix> edges;  ///< m x dim, absent when m == 0
};

/// Draws `dim` independent columns from N(0, (L + sigma^2 I)^{-1}) by
/// factoring the precision matrix as R^T R and solving R x = z for standard
/// normal z. Identical output for identical (L, cfg).
SampledFeatures sample_features(const IncidenceLaplacian& laplacian, const GaussianModelConfig& cfg);

/// trace(X^T L X) for X the node rows stacked over the hyperedge rows.
double negative_log_likelihood(const IncidenceLaplacian& laplacian, const FeatureMatrix& xv,
                               const FeatureMatrix& xe);
/// Node-only form for a Laplacian without hyperedges.
double negative_log_likelihood(const IncidenceLaplacian& laplacian, const FeatureMatrix& xv);

}  // namespace hgsi
