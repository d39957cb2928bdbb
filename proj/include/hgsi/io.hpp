#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "hgsi/core.hpp"
#include "hgsi/inference.hpp"
#include "hgsi/metrics.hpp"

namespace hgsi::io {

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

// Features CSV: no header, one row per entity, comma-separated reals.
FeatureMatrix parse_features_csv(std::istream& in);
FeatureMatrix read_features_csv(const std::filesystem::path& path);
void write_features_csv(std::ostream& out, const FeatureMatrix& x);
void write_features_csv(const std::filesystem::path& path, const FeatureMatrix& x);

// Hypergraph JSON: {"n": int, "edges": [[int, ...], ...], "weights": [float, ...]?}
nlohmann::ordered_json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);
Hypergraph read_hypergraph_json(const std::filesystem::path& path);
void write_hypergraph_json(const std::filesystem::path& path, const Hypergraph& h);

// Candidates CSV: header "nodes,size,anchor,s_prime,prob", nodes ';'-joined,
// rows sorted by probability (highest first).
void write_candidates_csv(std::ostream& out, const CandidateSet& cs);
void write_candidates_csv(const std::filesystem::path& path, const CandidateSet& cs);
CandidateSet parse_candidates_csv(std::istream& in, Index node_count);
CandidateSet read_candidates_csv(const std::filesystem::path& path, Index node_count);

nlohmann::ordered_json metrics_to_json(const MatchReport& match, double hgmse_value,
                                       const std::optional<SeparationReport>& separation);

/// Writes `text` to `path`, throwing IoError on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace hgsi::io
