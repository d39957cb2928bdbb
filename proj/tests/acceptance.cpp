// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "helpers.hpp"
#include "hgsi/experiment.hpp"
#include "hgsi/inference.hpp"
#include "hgsi/metrics.hpp"
#include "hgsi/probmodel.hpp"
#include "hgsi/smoothness.hpp"
#include "hgsi/synth.hpp"

using namespace hgsi;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %2d %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

SynthConfig unihg(double overlap) {
  SynthConfig cfg;
  cfg.n = 100;
  cfg.edge_spec = {{8, 12}};
  cfg.target_overlap = overlap;
  cfg.sigma = 1e-3;
  cfg.dim = 1000;
  cfg.seed = 0;
  return cfg;
}

struct Summary {
  double f1 = 0.0;
  double hgmse = 0.0;
  double min_gap = 1e300;
  std::size_t failed = 0;
};

// Ten seeds, per-size selection, raw features unless `normalize`.
Summary protocol(double overlap, bool normalize) {
  SweepConfig sweep;
  sweep.axis = SweepAxis::Overlap;
  sweep.values = {fmt("%.2f", overlap)};
  sweep.reps = 10;
  sweep.base = unihg(overlap);
  sweep.normalize = normalize;
  const auto res = run_sweep(sweep);
  Summary s;
  s.f1 = res.points[0].f1_mean;
  s.hgmse = res.points[0].hgmse_mean;
  for (const auto& r : res.runs) {
    if (r.outcome.status != "ok") ++s.failed;
    s.min_gap = std::min(s.min_gap, r.outcome.separation_gap.value_or(-1.0));
  }
  return s;
}

void criteria_1_to_4() {
  const auto t0 = Clock::now();
  const Summary low = protocol(0.1, false);
  const double elapsed = seconds_since(t0);
  report(1, low.failed == 0 && low.f1 >= 0.95 && low.hgmse <= 0.05 && elapsed < 60.0,
         "overlap 10%: mean f1 " + fmt("%.4f", low.f1) + " (>= 0.95), mean hgmse " + fmt("%.4f", low.hgmse) +
             " (<= 0.05), " + fmt("%.1f", elapsed) + " s (< 60 s)");

  const Summary mid = protocol(0.3, false);
  const Summary high = protocol(0.5, false);
  const bool monotone = low.f1 >= mid.f1 && mid.f1 >= high.f1;
  report(2, mid.failed == 0 && high.failed == 0 && mid.f1 >= 0.80 && high.f1 >= 0.75 && monotone,
         "mean f1 " + fmt("%.4f", mid.f1) + " at 30% (>= 0.80), " + fmt("%.4f", high.f1) +
             " at 50% (>= 0.75), monotone " + (monotone ? "yes" : "no"));

  SweepConfig ablation;
  ablation.axis = SweepAxis::Variant;
  ablation.values = {"max", "mean", "min", "random"};
  ablation.reps = 10;
  ablation.base = unihg(0.3);
  const auto abl = run_sweep(ablation);
  const double mx = abl.points[0].f1_mean;
  bool strict = true;
  std::string detail = "overlap 30% mean f1:";
  for (const auto& p : abl.points) {
    detail += " " + p.value + " " + fmt("%.4f", p.f1_mean);
    if (p.value != "max" && !(mx > p.f1_mean)) strict = false;
  }
  report(3, strict, detail);

  // Probabilities 1/(s'+1) only separate when s' is O(1). Raw samples at
  // d = 1000 put s' in the thousands, so the gap is measured on z-scored
  // feature columns; the raw gap is printed alongside.
  double min_std_gap = 1e300;
  std::size_t failed = 0;
  for (double overlap : {0.1, 0.3, 0.5}) {
    const Summary s = protocol(overlap, true);
    min_std_gap = std::min(min_std_gap, s.min_gap);
    failed += s.failed;
  }
  const double min_raw_gap = std::min({low.min_gap, mid.min_gap, high.min_gap});
  report(4, failed == 0 && min_std_gap > 0.1,
         "min gap over 30 runs " + fmt("%.4f", min_std_gap) + " on standardized features (> 0.1); raw-feature min gap " +
             fmt("%.2e", min_raw_gap));
}

// Minimises s*w - ln w + w over (0, 1] by successively refined grids.
double grid_minimiser(double s) {
  auto f = [s](double w) { return s * w - std::log(w) + w; };
  double lo = 1e-9;
  double hi = 1.0;
  double best = hi;
  for (int level = 0; level < 8; ++level) {
    const int points = 200;
    const double step = (hi - lo) / points;
    double best_val = INFINITY;
    for (int i = 0; i <= points; ++i) {
      const double w = lo + step * i;
      const double v = f(w);
      if (v < best_val) {
        best_val = v;
        best = w;
      }
    }
    lo = std::max(1e-12, best - 2.0 * step);
    hi = std::min(1.0, best + 2.0 * step);
  }
  return best;
}

void criterion_5() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(505);
  std::uniform_real_distribution<double> s_dist(0.0, 100.0);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    std::vector<double> s(8);
    for (auto& v : s) v = s_dist(rng);
    const auto w = infer_probabilities(s);
    for (std::size_t i = 0; i < s.size(); ++i) worst = std::max(worst, std::abs(w[i] - grid_minimiser(s[i])));
  }
  const double elapsed = seconds_since(t0);
  report(5, worst <= 1e-6 && elapsed < 5.0,
         "max |w - grid argmin| " + fmt("%.2e", worst) + " over 8000 coordinates (<= 1e-6), " +
             fmt("%.2f", elapsed) + " s (< 5 s)");
}

void criterion_6() {
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<std::size_t> size_dist(2, 10);
  std::uniform_int_distribution<std::size_t> dim_dist(1, 8);
  std::size_t violations = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t k = size_dist(rng);
    const std::size_t d = dim_dist(rng);
    const auto x = testing::random_features(k, d, rng, 1.0 + static_cast<double>(t % 5));
    const auto xe = testing::random_features(1, d, rng, 3.0);
    double lhs = 0.0;
    double rhs = 0.0;
    for (std::size_t v = 0; v < k; ++v) lhs += std::sqrt(squared_distance(xe.row(0), x.row(v)));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) rhs = std::max(rhs, std::sqrt(squared_distance(x.row(a), x.row(b))));
    }
    if (lhs < rhs) ++violations;
  }
  report(6, violations == 0,
         std::to_string(violations) + " violations of sum ||x_e - x_v|| >= max ||x_j - x_k|| in 1000 triples");
}

void criterion_7() {
  std::mt19937_64 rng(707);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto h = testing::random_hypergraph(12, 8, 6, rng, true);
    const auto xv = testing::random_features(12, 5, rng);
    const auto xe = testing::random_features(h.edge_count(), 5, rng);
    const double trace = negative_log_likelihood(incidence_laplacian(h), xv, xe);
    const double sum = weighted_smoothness_ev(*h.weights(), build_hypergraph(12, h.edges()), xv, xe);
    worst = std::max(worst, std::abs(trace - sum) / std::max(1.0, std::abs(sum)));
  }
  report(7, worst <= 1e-8, "max relative difference " + fmt("%.2e", worst) + " over 100 hypergraphs (<= 1e-8)");
}

void criterion_8() {
  const auto t0 = Clock::now();
  const double sigma = 1e-3;
  const auto L = incidence_laplacian(build_hypergraph(2, {{0, 1}}));
  const auto s = sample_features(L, {sigma, 50000, 808});

  // explicit inverse of [[a,0,-1],[0,a,-1],[-1,-1,b]] by cofactors
  const double a = 1.0 + sigma * sigma;
  const double b = 2.0 + sigma * sigma;
  const double det = a * (a * b - 1.0) - a;
  double expect[3][3];
  expect[0][0] = (a * b - 1.0) / det;
  expect[1][1] = expect[0][0];
  expect[0][1] = expect[1][0] = 1.0 / det;
  expect[0][2] = expect[2][0] = a / det;
  expect[1][2] = expect[2][1] = a / det;
  expect[2][2] = a * a / det;

  std::vector<std::span<const double>> rows{s.nodes.row(0), s.nodes.row(1), s.edges->row(0)};
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double c = 0.0;
      for (std::size_t k = 0; k < 50000; ++k) c += rows[i][k] * rows[j][k];
      c /= 50000.0;
      worst = std::max(worst, std::abs(c - expect[i][j]) / std::abs(expect[i][j]));
    }
  }
  const double elapsed = seconds_since(t0);
  report(8, worst < 0.05 && elapsed < 10.0,
         "max relative covariance error " + fmt("%.4f", worst) + " (< 0.05), " + fmt("%.2f", elapsed) +
             " s (< 10 s)");
}

void criterion_9() {
  std::mt19937_64 rng(909);
  std::size_t bad_laplacians = 0;
  for (int t = 0; t < 200; ++t) {
    const Index n = 3 + static_cast<Index>(t % 12);
    const auto h = testing::random_hypergraph(n, 1 + static_cast<std::size_t>(t) % 7, 5, rng, t % 2 == 1);
    const auto L = incidence_laplacian(h);
    const auto H = incidence_matrix(h);
    const auto N = static_cast<Eigen::Index>(n);
    const auto M = static_cast<Eigen::Index>(h.edge_count());
    const Eigen::MatrixXd& A = L.matrix;
    bool ok = A.rows() == N + M && A.isApprox(A.transpose(), 0.0);
    ok = ok && A.rowwise().sum().cwiseAbs().maxCoeff() < 1e-12;
    ok = ok && A.topRightCorner(N, M) == -H && A.bottomLeftCorner(M, N) == -H.transpose();
    const Eigen::MatrixXd nodes = A.topLeftCorner(N, N);
    const Eigen::MatrixXd edges = A.bottomRightCorner(M, M);
    ok = ok && nodes.isDiagonal(0.0) && edges.isDiagonal(0.0);
    ok = ok && Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(A).eigenvalues().minCoeff() > -1e-10;
    if (!ok) ++bad_laplacians;
  }

  std::size_t bound_violations = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 5 + static_cast<std::size_t>(t % 40);
    const auto x = testing::random_features(n, 1 + static_cast<std::size_t>(t % 6), rng);
    std::vector<std::size_t> sizes;
    std::uniform_int_distribution<std::size_t> k_dist(2, n);
    const std::size_t count = 1 + static_cast<std::size_t>(t % 3);
    while (sizes.size() < count) {
      const std::size_t k = k_dist(rng);
      if (std::find(sizes.begin(), sizes.end(), k) == sizes.end()) sizes.push_back(k);
    }
    if (generate_candidates(x, sizes).count() > sizes.size() * n) ++bound_violations;
  }
  report(9, bad_laplacians == 0 && bound_violations == 0,
         std::to_string(bad_laplacians) + " of 200 Laplacians break symmetry/zero row sums/PSD/block structure; " +
             std::to_string(bound_violations) + " of 200 candidate sets exceed L*n");
}

void criterion_10() {
  std::mt19937_64 rng(1010);
  std::size_t bad = 0;
  for (int t = 0; t < 100; ++t) {
    const auto h = testing::random_hypergraph(15, 1 + static_cast<std::size_t>(t % 9), 6, rng);
    if (hgmse(h, h) != 0.0 || f1_exact(h, h).f1 != 1.0) ++bad;
    auto edges = h.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    const auto shuffled = build_hypergraph(15, edges);
    const auto other = testing::random_hypergraph(15, 5, 6, rng);
    if (hgmse(shuffled, other) != hgmse(h, other) || hgmse(other, shuffled) != hgmse(other, h)) ++bad;
    if (hgmse(shuffled, h) != 0.0) ++bad;
  }
  report(10, bad == 0, std::to_string(bad) + " failures of hgmse(h,h)=0, f1(h,h)=1 and reorder invariance on 100 h");
}

}  // namespace

int main() {
  criteria_1_to_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
