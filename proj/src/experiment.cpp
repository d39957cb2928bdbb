#include "hgsi/experiment.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "hgsi/inference.hpp"
#include "hgsi/metrics.hpp"

namespace hgsi {
namespace {

std::size_t parse_count(const std::string& text) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || v <= 0) {
    throw Error(ErrorCode::InvalidArgument, "expected a positive integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

double parse_real(const std::string& text) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::InvalidArgument, "expected a number, got '" + text + "'");
  }
  return v;
}

void mean_std(const std::vector<double>& xs, double& mean, double& stddev) {
  mean = 0.0;
  stddev = 0.0;
  if (xs.empty()) return;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  for (double x : xs) stddev += (x - mean) * (x - mean);
  stddev = std::sqrt(stddev / static_cast<double>(xs.size()));
}

}  // namespace

ExperimentOutcome run_experiment(const SynthConfig& cfg, SmoothnessVariant variant, bool normalize) {
  ExperimentOutcome out;
  try {
    const SyntheticDataset data = make_dataset(cfg);
    out.achieved_overlap = data.achieved_overlap;
    const FeatureMatrix features = normalize ? standardize_columns(data.node_features)
                                             : data.node_features;
    std::vector<std::size_t> sizes;
    for (const auto& [size, count] : cfg.edge_spec) sizes.push_back(size);
    const auto result = run_hgsi(features, sizes, SelectionSpec::per_size(cfg.edge_spec), variant);
    out.f1 = f1_exact(result.selected, data.truth).f1;
    out.hgmse = hgmse(result.selected, data.truth);
    out.separation_gap = probability_separation(result.candidates, data.truth).gap;
  } catch (const Error& e) {
    out.status = std::string(to_string(e.code()));
  }
  return out;
}

SweepAxis parse_sweep_axis(const std::string& text) {
  if (text == "nodes") return SweepAxis::Nodes;
  if (text == "edge-size") return SweepAxis::EdgeSize;
  if (text == "overlap") return SweepAxis::Overlap;
  if (text == "variant") return SweepAxis::Variant;
  throw Error(ErrorCode::InvalidArgument, "unknown sweep axis '" + text + "'");
}

std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Nodes: return "nodes";
    case SweepAxis::EdgeSize: return "edge-size";
    case SweepAxis::Overlap: return "overlap";
    case SweepAxis::Variant: return "variant";
  }
  return "unknown";
}

SmoothnessVariant parse_variant(const std::string& text, std::uint64_t seed) {
  if (text == "max") return SmoothnessVariant::max();
  if (text == "mean") return SmoothnessVariant::mean();
  if (text == "min") return SmoothnessVariant::min();
  if (text == "random") return SmoothnessVariant::random(seed);
  throw Error(ErrorCode::InvalidArgument, "unknown smoothness variant '" + text + "'");
}

SynthConfig sweep_point_config(const SweepConfig& sweep, const std::string& value,
                               SmoothnessVariant& variant) {
  SynthConfig cfg = sweep.base;
  variant = sweep.variant;
  switch (sweep.axis) {
    case SweepAxis::Nodes: {
      const std::size_t n = parse_count(value);
      for (auto& [size, count] : cfg.edge_spec) {
        const double scaled = std::round(static_cast<double>(count) * static_cast<double>(n) /
                                         static_cast<double>(sweep.base.n));
        count = std::max<std::size_t>(1, static_cast<std::size_t>(scaled));
      }
      cfg.n = n;
      break;
    }
    case SweepAxis::EdgeSize: {
      if (sweep.base.edge_spec.size() != 1) {
        throw Error(ErrorCode::InvalidArgument, "edge-size sweeps need a single-size edge spec");
      }
      const std::size_t size = parse_count(value);
      const auto [base_size, base_count] = *sweep.base.edge_spec.begin();
      const double scaled = std::round(static_cast<double>(base_count * base_size) /
                                       static_cast<double>(size));
      cfg.edge_spec = {{size, std::max<std::size_t>(1, static_cast<std::size_t>(scaled))}};
      break;
    }
    case SweepAxis::Overlap:
      cfg.target_overlap = parse_real(value);
      break;
    case SweepAxis::Variant:
      variant = parse_variant(value, sweep.base.seed);
      break;
  }
  return cfg;
}

SweepResult run_sweep(const SweepConfig& sweep) {
  if (sweep.values.empty()) throw Error(ErrorCode::InvalidArgument, "sweep needs at least one value");
  if (sweep.reps == 0) throw Error(ErrorCode::InvalidArgument, "sweep needs at least one repetition");

  SweepResult result;
  std::vector<SynthConfig> configs;
  std::vector<SmoothnessVariant> variants;
  for (const auto& value : sweep.values) {
    SmoothnessVariant v;
    configs.push_back(sweep_point_config(sweep, value, v));
    variants.push_back(v);
  }

  const std::size_t total = sweep.values.size() * sweep.reps;
  result.runs.resize(total);
  const auto tasks = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t t = 0; t < tasks; ++t) {
    const auto task = static_cast<std::size_t>(t);
    const std::size_t point = task / sweep.reps;
    const std::size_t rep = task % sweep.reps;
    SynthConfig cfg = configs[point];
    cfg.seed = sweep.base.seed + rep;
    SmoothnessVariant variant = variants[point];
    if (variant.tag == SmoothnessVariant::Tag::Random) variant.seed = cfg.seed;
    result.runs[task] = {sweep.values[point], cfg.seed, run_experiment(cfg, variant, sweep.normalize)};
  }

  for (std::size_t point = 0; point < sweep.values.size(); ++point) {
    std::vector<double> f1s;
    std::vector<double> errs;
    for (std::size_t rep = 0; rep < sweep.reps; ++rep) {
      const auto& o = result.runs[point * sweep.reps + rep].outcome;
      if (o.status != "ok") continue;
      f1s.push_back(o.f1);
      errs.push_back(o.hgmse);
    }
    SweepPoint p;
    p.value = sweep.values[point];
    p.ok_runs = f1s.size();
    mean_std(f1s, p.f1_mean, p.f1_std);
    mean_std(errs, p.hgmse_mean, p.hgmse_std);
    result.points.push_back(p);
  }
  return result;
}

}  // namespace hgsi
