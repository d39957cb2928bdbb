#include "hgsi/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string_view>

namespace hgsi::io {
namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view text, std::size_t line) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    parse_fail("line " + std::to_string(line) + ": bad number '" + std::string(text) + "'");
  }
  return value;
}

std::size_t parse_index(std::string_view text, std::size_t line) {
  text = trim(text);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    parse_fail("line " + std::to_string(line) + ": bad index '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

std::string join_nodes(const Edge& nodes) {
  std::string s;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(nodes[i]);
  }
  return s;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw Error(ErrorCode::InvalidArgument, "cannot format number");
  return std::string(buf, ptr);
}

FeatureMatrix parse_features_csv(std::istream& in) {
  std::vector<double> data;
  std::size_t rows = 0;
  std::size_t dim = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(line, ',');
    if (rows == 0) {
      dim = fields.size();
    } else if (fields.size() != dim) {
      parse_fail("line " + std::to_string(line_no) + ": " + std::to_string(fields.size()) +
                 " columns, expected " + std::to_string(dim));
    }
    for (auto f : fields) data.push_back(parse_double(f, line_no));
    ++rows;
  }
  if (rows == 0) parse_fail("features file is empty");
  try {
    return FeatureMatrix(rows, dim, std::move(data));
  } catch (const Error& e) {
    parse_fail(e.what());
  }
}

FeatureMatrix read_features_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return parse_features_csv(in);
  } catch (const Error& e) {
    parse_fail(path.string() + ": " + e.what());
  }
}

void write_features_csv(std::ostream& out, const FeatureMatrix& x) {
  std::string line;
  for (std::size_t r = 0; r < x.rows(); ++r) {
    line.clear();
    const auto row = x.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += ',';
      line += format_double(row[c]);
    }
    line += '\n';
    out << line;
  }
}

void write_features_csv(const std::filesystem::path& path, const FeatureMatrix& x) {
  auto out = open_out(path);
  write_features_csv(out, x);
  finish(out, path);
}

nlohmann::ordered_json hypergraph_to_json(const Hypergraph& h) {
  nlohmann::ordered_json j;
  j["n"] = h.node_count();
  j["edges"] = h.edges();
  if (h.weights()) j["weights"] = *h.weights();
  return j;
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    parse_fail("hypergraph JSON needs \"n\" and \"edges\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() <= 0) {
    parse_fail("\"n\" must be a positive integer");
  }
  const auto n = j["n"].get<std::int64_t>();
  if (!j["edges"].is_array()) parse_fail("\"edges\" must be an array");

  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array()) parse_fail("each edge must be an array of node indices");
    Edge nodes;
    for (const auto& v : e) {
      if (!v.is_number_integer()) parse_fail("node indices must be integers");
      const auto idx = v.get<std::int64_t>();
      if (idx < 0 || idx >= n) {
        throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(idx) + " outside [0, " +
                                                    std::to_string(n) + ")");
      }
      nodes.push_back(static_cast<Index>(idx));
    }
    edges.push_back(std::move(nodes));
  }
  std::optional<std::vector<double>> weights;
  if (j.contains("weights") && !j["weights"].is_null()) {
    if (!j["weights"].is_array()) parse_fail("\"weights\" must be an array");
    weights.emplace();
    for (const auto& w : j["weights"]) {
      if (!w.is_number()) parse_fail("weights must be numbers");
      weights->push_back(w.get<double>());
    }
  }
  return build_hypergraph(static_cast<Index>(n), std::move(edges), std::move(weights));
}

Hypergraph read_hypergraph_json(const std::filesystem::path& path) {
  auto in = open_in(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(path.string() + ": " + e.what());
  }
  return hypergraph_from_json(j);
}

void write_hypergraph_json(const std::filesystem::path& path, const Hypergraph& h) {
  write_text(path, hypergraph_to_json(h).dump() + "\n");
}

void write_candidates_csv(std::ostream& out, const CandidateSet& cs) {
  if (!cs.scores || !cs.probs) {
    throw Error(ErrorCode::InvalidArgument, "candidates must be scored before writing");
  }
  const auto& probs = *cs.probs;
  const auto& scores = *cs.scores;
  std::vector<std::size_t> order(cs.count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (probs[a] != probs[b]) return probs[a] > probs[b];
    if (scores[a] != scores[b]) return scores[a] < scores[b];
    return cs.candidates[a].nodes < cs.candidates[b].nodes;
  });
  out << "nodes,size,anchor,s_prime,prob\n";
  for (std::size_t i : order) {
    const auto& c = cs.candidates[i];
    out << join_nodes(c.nodes) << ',' << c.size() << ',' << c.anchor << ','
        << format_double(scores[i]) << ',' << format_double(probs[i]) << '\n';
  }
}

void write_candidates_csv(const std::filesystem::path& path, const CandidateSet& cs) {
  auto out = open_out(path);
  write_candidates_csv(out, cs);
  finish(out, path);
}

CandidateSet parse_candidates_csv(std::istream& in, Index node_count) {
  CandidateSet cs;
  cs.node_count = node_count;
  cs.scores.emplace();
  cs.probs.emplace();
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line) || trim(line) != "nodes,size,anchor,s_prime,prob") {
    parse_fail("candidates CSV must start with header nodes,size,anchor,s_prime,prob");
  }
  ++line_no;
  std::vector<std::size_t> sizes;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 5) parse_fail("line " + std::to_string(line_no) + ": expected 5 fields");
    Candidate c;
    for (auto v : split(fields[0], ';')) {
      const auto idx = parse_index(v, line_no);
      if (idx >= node_count) {
        parse_fail("line " + std::to_string(line_no) + ": node " + std::to_string(idx) + " >= n");
      }
      c.nodes.push_back(idx);
    }
    std::sort(c.nodes.begin(), c.nodes.end());
    if (parse_index(fields[1], line_no) != c.nodes.size()) {
      parse_fail("line " + std::to_string(line_no) + ": size does not match node list");
    }
    c.anchor = parse_index(fields[2], line_no);
    cs.scores->push_back(parse_double(fields[3], line_no));
    cs.probs->push_back(parse_double(fields[4], line_no));
    sizes.push_back(c.size());
    cs.candidates.push_back(std::move(c));
  }
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  cs.sizes = std::move(sizes);
  return cs;
}

CandidateSet read_candidates_csv(const std::filesystem::path& path, Index node_count) {
  auto in = open_in(path);
  return parse_candidates_csv(in, node_count);
}

nlohmann::ordered_json metrics_to_json(const MatchReport& match, double hgmse_value,
                                       const std::optional<SeparationReport>& separation) {
  nlohmann::ordered_json j;
  j["precision"] = match.precision;
  j["recall"] = match.recall;
  j["f1"] = match.f1;
  j["hgmse"] = hgmse_value;
  if (separation) {
    nlohmann::ordered_json s;
    s["truth_mean"] = separation->mean_truth_prob ? nlohmann::ordered_json(*separation->mean_truth_prob)
                                                  : nlohmann::ordered_json(nullptr);
    s["other_mean"] = separation->mean_other_prob ? nlohmann::ordered_json(*separation->mean_other_prob)
                                                  : nlohmann::ordered_json(nullptr);
    s["gap"] = separation->gap ? nlohmann::ordered_json(*separation->gap)
                               : nlohmann::ordered_json(nullptr);
    j["separation"] = s;
  }
  return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  auto out = open_out(path);
  out << text;
  finish(out, path);
}

}  // namespace hgsi::io
