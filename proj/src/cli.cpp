#include "hgsi/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hgsi/experiment.hpp"
#include "hgsi/inference.hpp"
#include "hgsi/io.hpp"
#include "hgsi/metrics.hpp"
#include "hgsi/synth.hpp"

namespace hgsi {
namespace {

namespace fs = std::filesystem;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::size_t parse_size_value(const std::string& text, const std::string& flag) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::ParseError, flag + ": expected a non-negative integer, got '" + text + "'");
  }
  return v;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  for (const auto& item : split_list(text)) sizes.push_back(parse_size_value(item, "--sizes"));
  if (sizes.empty()) throw Error(ErrorCode::ParseError, "--sizes: empty list");
  return sizes;
}

// "8=12,3=5" -> {3: 5, 8: 12}
std::map<std::size_t, std::size_t> parse_size_counts(const std::string& text, const std::string& flag) {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& item : split_list(text)) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::ParseError, flag + ": expected size=count, got '" + item + "'");
    }
    const auto size = parse_size_value(item.substr(0, eq), flag);
    const auto count = parse_size_value(item.substr(eq + 1), flag);
    if (!counts.emplace(size, count).second) {
      throw Error(ErrorCode::ParseError, flag + ": size " + std::to_string(size) + " given twice");
    }
  }
  if (counts.empty()) throw Error(ErrorCode::ParseError, flag + ": empty list");
  return counts;
}

// Unknown names in flags are input errors, not domain errors.
template <class F>
auto flag_value(F&& parse) {
  try {
    return parse();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidArgument) throw;
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string opt_fixed(const std::optional<double>& v) { return v ? fixed(*v) : std::string("-"); }

nlohmann::ordered_json edge_spec_json(const std::map<std::size_t, std::size_t>& spec) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [size, count] : spec) j[std::to_string(size)] = count;
  return j;
}

struct InferArgs {
  std::string features;
  std::string sizes;
  std::optional<std::size_t> top_m;
  std::string per_size;
  std::string variant = "max";
  std::uint64_t seed = 0;
  bool normalize = false;
  std::string out;
  std::string candidates;
};

int cmd_infer(const InferArgs& a, std::ostream& out) {
  // Parameters are checked before any file is touched.
  std::optional<std::map<std::size_t, std::size_t>> per_size;
  if (!a.per_size.empty()) per_size = parse_size_counts(a.per_size, "--per-size");
  std::vector<std::size_t> sizes;
  if (!a.sizes.empty()) {
    sizes = parse_sizes(a.sizes);
  } else if (per_size) {
    for (const auto& [size, count] : *per_size) sizes.push_back(size);
  } else {
    throw Error(ErrorCode::ParseError, "--sizes is required unless --per-size is given");
  }
  for (std::size_t k : sizes) {
    if (k < 2) throw Error(ErrorCode::SizeTooSmall, "hyperedge size " + std::to_string(k) + " < 2");
  }
  if (a.top_m.has_value() == per_size.has_value()) {
    throw Error(ErrorCode::ParseError, "give exactly one of --top-m and --per-size");
  }
  const SelectionSpec spec = a.top_m ? SelectionSpec::top(*a.top_m) : SelectionSpec::per_size(*per_size);
  const SmoothnessVariant variant = flag_value([&] { return parse_variant(a.variant, a.seed); });
  if (a.features.empty()) throw Error(ErrorCode::ParseError, "--features is required");

  FeatureMatrix x = io::read_features_csv(a.features);
  if (a.normalize) x = standardize_columns(x);
  const auto result = run_hgsi(x, sizes, spec, variant);

  if (!a.out.empty()) io::write_hypergraph_json(a.out, result.selected);
  if (!a.candidates.empty()) io::write_candidates_csv(a.candidates, result.candidates);

  std::vector<std::size_t> distinct = sizes;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  out << "selected " << result.selected.edge_count() << " of ≤" << distinct.size() * x.rows()
      << " candidates (" << result.candidates.count() << " distinct)\n";
  if (a.out.empty()) out << io::hypergraph_to_json(result.selected).dump() << "\n";
  return 0;
}

struct SynthArgs {
  std::size_t nodes = 100;
  std::string edges = "8=12";
  double overlap = 0.0;
  std::size_t dim = 1000;
  double sigma = 1e-3;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_synth(const SynthArgs& a, std::ostream& out) {
  SynthConfig cfg;
  cfg.n = a.nodes;
  cfg.edge_spec = parse_size_counts(a.edges, "--edges");
  cfg.target_overlap = a.overlap;
  cfg.dim = a.dim;
  cfg.sigma = a.sigma;
  cfg.seed = a.seed;
  const SyntheticDataset data = make_dataset(cfg);

  const fs::path dir(a.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
  io::write_features_csv(dir / "features.csv", data.node_features);
  io::write_features_csv(dir / "edge_features.csv", data.edge_features);
  io::write_hypergraph_json(dir / "truth.json", data.truth);

  nlohmann::ordered_json m;
  m["tool"] = "hgsi";
  m["version"] = kToolVersion;
  m["n"] = cfg.n;
  m["edge_spec"] = edge_spec_json(cfg.edge_spec);
  m["target_overlap"] = cfg.target_overlap;
  m["achieved_overlap"] = data.achieved_overlap;
  m["sigma"] = cfg.sigma;
  m["dim"] = cfg.dim;
  m["seed"] = cfg.seed;
  io::write_text(dir / "manifest.json", m.dump(2) + "\n");

  out << "wrote " << data.truth.edge_count() << " hyperedges on " << cfg.n << " nodes to " << dir.string()
      << " (overlap " << fixed(data.achieved_overlap) << ")\n";
  return 0;
}

struct EvalArgs {
  std::string pred;
  std::string truth;
  std::string candidates;
  std::string out;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const Hypergraph pred = io::read_hypergraph_json(a.pred);
  const Hypergraph truth = io::read_hypergraph_json(a.truth);
  const MatchReport match = f1_exact(pred, truth);
  const double err = hgmse(pred, truth);
  std::optional<SeparationReport> sep;
  if (!a.candidates.empty()) {
    sep = probability_separation(io::read_candidates_csv(a.candidates, truth.node_count()), truth);
  }
  const auto j = io::metrics_to_json(match, err, sep);
  if (!a.out.empty()) io::write_text(a.out, j.dump(2) + "\n");

  out << "precision  recall     f1         hgmse      gap\n";
  out << fixed(match.precision) << "     " << fixed(match.recall) << "     " << fixed(match.f1) << "     "
      << fixed(err) << "     " << (sep ? opt_fixed(sep->gap) : std::string("-")) << "\n";
  return 0;
}

struct SweepArgs {
  std::string axis;
  std::string values;
  std::size_t reps = 10;
  std::size_t nodes = 100;
  std::string edges = "8=12";
  double overlap = 0.0;
  std::size_t dim = 1000;
  double sigma = 1e-3;
  std::uint64_t seed = 0;
  std::string variant = "max";
  bool normalize = false;
  std::string out;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  SweepConfig sweep;
  sweep.axis = flag_value([&] { return parse_sweep_axis(a.axis); });
  sweep.values = split_list(a.values);
  sweep.reps = a.reps;
  sweep.base.n = a.nodes;
  sweep.base.edge_spec = parse_size_counts(a.edges, "--edges");
  sweep.base.target_overlap = a.overlap;
  sweep.base.dim = a.dim;
  sweep.base.sigma = a.sigma;
  sweep.base.seed = a.seed;
  sweep.variant = flag_value([&] { return parse_variant(a.variant, a.seed); });
  sweep.normalize = a.normalize;
  const SweepResult result = run_sweep(sweep);

  const std::string axis = to_string(sweep.axis);
  std::ostringstream csv;
  csv << "row,axis,value,seed,status,achieved_overlap,f1,hgmse,f1_std,hgmse_std,ok_runs\n";
  for (const auto& r : result.runs) {
    csv << "run," << axis << ',' << r.value << ',' << r.seed << ',' << r.outcome.status << ','
        << io::format_double(r.outcome.achieved_overlap) << ',' << io::format_double(r.outcome.f1) << ','
        << io::format_double(r.outcome.hgmse) << ",,,\n";
  }
  for (const auto& p : result.points) {
    csv << "mean," << axis << ',' << p.value << ",," << (p.ok_runs > 0 ? "ok" : "failed") << ",,"
        << io::format_double(p.f1_mean) << ',' << io::format_double(p.hgmse_mean) << ','
        << io::format_double(p.f1_std) << ',' << io::format_double(p.hgmse_std) << ',' << p.ok_runs
        << '\n';
  }
  if (!a.out.empty()) {
    io::write_text(a.out, csv.str());
  } else {
    out << csv.str();
  }

  out << axis << "  f1 (mean +/- std)     hgmse (mean +/- std)  ok\n";
  for (const auto& p : result.points) {
    out << p.value << "  " << fixed(p.f1_mean) << " +/- " << fixed(p.f1_std) << "  " << fixed(p.hgmse_mean)
        << " +/- " << fixed(p.hgmse_std) << "  " << p.ok_runs << "/" << sweep.reps << "\n";
  }
  return 0;
}

}  // namespace

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
    case ErrorCode::NodeCountMismatch:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::DuplicateEdge:
    case ErrorCode::EdgeTooSmall:
    case ErrorCode::BadWeight:
    case ErrorCode::LengthMismatch:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::RowCountMismatch:
      return 2;
    default:
      return 3;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergraph structure inference from node features"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  InferArgs infer;
  auto* infer_cmd = app.add_subcommand("infer", "infer hyperedges from a features CSV");
  infer_cmd->add_option("--features", infer.features, "node features CSV (no header)");
  infer_cmd->add_option("--sizes", infer.sizes, "comma-separated hyperedge sizes");
  auto* top_m = infer_cmd->add_option("--top-m", infer.top_m, "keep the m most probable candidates");
  auto* per_size = infer_cmd->add_option("--per-size", infer.per_size, "size=count list, e.g. 8=12");
  top_m->excludes(per_size);
  infer_cmd->add_option("--variant", infer.variant, "max, mean, min or random")->capture_default_str();
  infer_cmd->add_option("--seed", infer.seed, "seed for the random variant")->capture_default_str();
  infer_cmd->add_flag("--normalize", infer.normalize, "z-score feature columns first");
  infer_cmd->add_option("--out", infer.out, "selected hypergraph JSON");
  infer_cmd->add_option("--candidates", infer.candidates, "scored candidates CSV");

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic dataset");
  synth_cmd->add_option("--nodes", synth.nodes, "node count")->capture_default_str();
  synth_cmd->add_option("--edges", synth.edges, "size=count list")->capture_default_str();
  synth_cmd->add_option("--overlap", synth.overlap, "target overlap rate")->capture_default_str();
  synth_cmd->add_option("--dim", synth.dim, "feature dimension")->capture_default_str();
  synth_cmd->add_option("--sigma", synth.sigma, "sampler regulariser")->capture_default_str();
  synth_cmd->add_option("--seed", synth.seed)->capture_default_str();
  synth_cmd->add_option("--out", synth.out, "output directory")->required();

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "score a prediction against the truth");
  eval_cmd->add_option("--pred", eval.pred, "predicted hypergraph JSON")->required();
  eval_cmd->add_option("--truth", eval.truth, "ground-truth hypergraph JSON")->required();
  eval_cmd->add_option("--candidates", eval.candidates, "scored candidates CSV for the separation gap");
  eval_cmd->add_option("--out", eval.out, "metrics JSON");

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "run synth, infer and eval over a parameter grid");
  sweep_cmd->add_option("--axis", sw.axis, "nodes, edge-size, overlap or variant")->required();
  sweep_cmd->add_option("--values", sw.values, "comma-separated grid values")->required();
  sweep_cmd->add_option("--reps", sw.reps, "seeds per grid point")->capture_default_str();
  sweep_cmd->add_option("--nodes", sw.nodes)->capture_default_str();
  sweep_cmd->add_option("--edges", sw.edges)->capture_default_str();
  sweep_cmd->add_option("--overlap", sw.overlap)->capture_default_str();
  sweep_cmd->add_option("--dim", sw.dim)->capture_default_str();
  sweep_cmd->add_option("--sigma", sw.sigma)->capture_default_str();
  sweep_cmd->add_option("--seed", sw.seed, "seed of the first repetition")->capture_default_str();
  sweep_cmd->add_option("--variant", sw.variant)->capture_default_str();
  sweep_cmd->add_flag("--normalize", sw.normalize);
  sweep_cmd->add_option("--out", sw.out, "long-format CSV (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (infer_cmd->parsed()) return cmd_infer(infer, out);
    if (synth_cmd->parsed()) return cmd_synth(synth, out);
    if (eval_cmd->parsed()) return cmd_eval(eval, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sw, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace hgsi
