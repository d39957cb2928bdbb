#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgsi/smoothness.hpp"
#include "hgsi/synth.hpp"

namespace hgsi {

/// Result of one synthesise -> infer -> evaluate round.
struct ExperimentOutcome {
  std::string status = "ok";  ///< "ok" or the error code name
  double achieved_overlap = 0.0;
  double f1 = 0.0;
  double hgmse = 0.0;
  std::optional<double> separation_gap;
};

/// Synthesises a dataset from `cfg`, infers with per-size selection matching
/// the planted edge counts, and scores the result against the truth. Domain
/// errors are reported through `status`, not thrown.
ExperimentOutcome run_experiment(const SynthConfig& cfg, SmoothnessVariant variant,
                                 bool normalize = false);

enum class SweepAxis { Nodes, EdgeSize, Overlap, Variant };

SweepAxis parse_sweep_axis(const std::string& text);
std::string to_string(SweepAxis axis);
SmoothnessVariant parse_variant(const std::string& text, std::uint64_t seed);

struct SweepConfig {
  SweepAxis axis = SweepAxis::Overlap;
  std::vector<std::string> values;
  std::size_t reps = 10;
  SynthConfig base;  ///< seed of rep r is base.seed + r
  SmoothnessVariant variant = SmoothnessVariant::max();
  bool normalize = false;
};

struct SweepRun {
  std::string value;
  std::uint64_t seed = 0;
  ExperimentOutcome outcome;
};

struct SweepPoint {
  std::string value;
  std::size_t ok_runs = 0;
  double f1_mean = 0.0;
  double f1_std = 0.0;
  double hgmse_mean = 0.0;
  double hgmse_std = 0.0;
};

struct SweepResult {
  std::vector<SweepRun> runs;      ///< grid order: value-major, then rep
  std::vector<SweepPoint> points;  ///< one per value
};

/// Applies one grid value on top of the base configuration. Node counts
/// scale the planted edge counts proportionally; a new edge size keeps the
/// number of incidences roughly constant.
SynthConfig sweep_point_config(const SweepConfig& sweep, const std::string& value,
                               SmoothnessVariant& variant);

/// Runs every (value, rep) pair, in parallel when OpenMP is available.
/// Output order does not depend on scheduling.
SweepResult run_sweep(const SweepConfig& sweep);

}  // namespace hgsi
