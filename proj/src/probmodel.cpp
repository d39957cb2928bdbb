#include "hgsi/probmodel.hpp"

#include <random>
#include <string>

#include "hgsi/kernels.hpp"

namespace hgsi {
namespace {

Eigen::MatrixXd stack_rows(const FeatureMatrix* xv, const FeatureMatrix* xe) {
  const auto n = static_cast<Eigen::Index>(xv->rows());
  const auto m = static_cast<Eigen::Index>(xe ? xe->rows() : 0);
  const auto d = static_cast<Eigen::Index>(xv->dim());
  Eigen::MatrixXd x(n + m, d);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) x(r, c) = (*xv)(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  }
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) x(n + r, c) = (*xe)(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  }
  return x;
}

FeatureMatrix rows_to_features(const Eigen::MatrixXd& x, Eigen::Index first, Eigen::Index count) {
  const auto d = static_cast<std::size_t>(x.cols());
  std::vector<double> data(static_cast<std::size_t>(count) * d);
  for (Eigen::Index r = 0; r < count; ++r) {
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
      data[static_cast<std::size_t>(r) * d + static_cast<std::size_t>(c)] = x(first + r, c);
    }
  }
  return FeatureMatrix(static_cast<std::size_t>(count), d, std::move(data));
}

double quadratic_trace(const IncidenceLaplacian& laplacian, const Eigen::MatrixXd& x) {
  return (laplacian.matrix * x).cwiseProduct(x).sum();
}

}  // namespace

IncidenceLaplacian incidence_laplacian(const Hypergraph& h) {
  const auto n = static_cast<Eigen::Index>(h.node_count());
  const auto m = static_cast<Eigen::Index>(h.edge_count());
  const Eigen::MatrixXd inc = incidence_matrix(h);

  IncidenceLaplacian out;
  out.n = h.node_count();
  out.m = h.edge_count();
  out.matrix = Eigen::MatrixXd::Zero(n + m, n + m);
  out.matrix.topLeftCorner(n, n).diagonal() = inc.rowwise().sum();
  out.matrix.bottomRightCorner(m, m).diagonal() = inc.colwise().sum().transpose();
  out.matrix.topRightCorner(n, m) = -inc;
  out.matrix.bottomLeftCorner(m, n) = -inc.transpose();
  return out;
}

SampledFeatures sample_features(const IncidenceLaplacian& laplacian, const GaussianModelConfig& cfg) {
  if (!(cfg.sigma > 0.0)) throw Error(ErrorCode::InvalidArgument, "sigma must be positive");
  if (cfg.dim == 0) throw Error(ErrorCode::InvalidArgument, "feature dimension must be >= 1");
  const auto size = static_cast<Eigen::Index>(laplacian.size());
  if (laplacian.matrix.rows() != size || laplacian.matrix.cols() != size) {
    throw Error(ErrorCode::DimensionMismatch, "Laplacian matrix does not match its block sizes");
  }

  Eigen::MatrixXd precision = laplacian.matrix;
  precision.diagonal().array() += cfg.sigma * cfg.sigma;
  Eigen::LLT<Eigen::MatrixXd> llt(precision);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::FactorizationFailure, "L + sigma^2 I is not positive definite");
  }
  const Eigen::MatrixXd lower = llt.matrixL();

  // Draws are generated column by column on one stream, so the result does
  // not depend on the thread count used by the solve.
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto d = static_cast<Eigen::Index>(cfg.dim);
  Eigen::MatrixXd x(size, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index r = 0; r < size; ++r) x(r, c) = normal(rng);
  }
  kernels::back_substitute_columns(lower, x);

  const auto n = static_cast<Eigen::Index>(laplacian.n);
  const auto m = static_cast<Eigen::Index>(laplacian.m);
  SampledFeatures out{rows_to_features(x, 0, n), std::nullopt};
  if (m > 0) out.edges = rows_to_features(x, n, m);
  return out;
}

double negative_log_likelihood(const IncidenceLaplacian& laplacian, const FeatureMatrix& xv,
                               const FeatureMatrix& xe) {
  if (xv.rows() != laplacian.n || xe.rows() != laplacian.m) {
    throw Error(ErrorCode::DimensionMismatch, "feature rows (" + std::to_string(xv.rows()) + ", " +
                                                  std::to_string(xe.rows()) +
                                                  ") do not match Laplacian blocks (" +
                                                  std::to_string(laplacian.n) + ", " +
                                                  std::to_string(laplacian.m) + ")");
  }
  if (xv.dim() != xe.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "node and hyperedge feature dims differ");
  }
  return quadratic_trace(laplacian, stack_rows(&xv, &xe));
}

double negative_log_likelihood(const IncidenceLaplacian& laplacian, const FeatureMatrix& xv) {
  if (laplacian.m != 0 || xv.rows() != laplacian.n) {
    throw Error(ErrorCode::DimensionMismatch, "node-only likelihood needs a Laplacian without "
                                              "hyperedges and one feature row per node");
  }
  return quadratic_trace(laplacian, stack_rows(&xv, nullptr));
}

}  // namespace hgsi
