#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "hgsi/cli.hpp"
#include "hgsi/io.hpp"

using namespace hgsi;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hgsi");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("hgsi_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::size_t count_lines(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) n += line.rfind(prefix, 0) == 0 ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("exit code mapping") {
  CHECK(exit_code_for(ErrorCode::ParseError) == 2);
  CHECK(exit_code_for(ErrorCode::IoError) == 2);
  CHECK(exit_code_for(ErrorCode::NodeCountMismatch) == 2);
  CHECK(exit_code_for(ErrorCode::SizeTooSmall) == 3);
  CHECK(exit_code_for(ErrorCode::NotEnoughCandidates) == 3);
  CHECK(exit_code_for(ErrorCode::InfeasibleConfig) == 3);
}

TEST_CASE("argument errors") {
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({}).code == 2);
  CHECK(cli({"infer", "--bogus"}).code == 2);
  const auto small = cli({"infer", "--sizes", "1", "--top-m", "3"});
  CHECK(small.code == 3);
  CHECK(small.err.find("SizeTooSmall") != std::string::npos);
  CHECK(cli({"infer", "--sizes", "1"}).code == 3);
  CHECK(cli({"infer", "--sizes", "3", "--top-m", "2"}).code == 2);
  CHECK(cli({"infer", "--features", "/nonexistent.csv", "--sizes", "3", "--top-m", "2"}).code == 2);
  CHECK(cli({"infer", "--sizes", "3", "--top-m", "2", "--per-size", "3=2"}).code == 2);
  CHECK(cli({"synth", "--nodes", "10", "--edges", "8=5", "--overlap", "0", "--out",
             scratch("infeasible").string()})
            .code == 3);
  CHECK(cli({"synth", "--edges", "8x5", "--out", scratch("badspec").string()}).code == 2);
}

TEST_CASE("infer summary reports the candidate bound") {
  const auto dir = scratch("bound");
  std::mt19937_64 rng(101);
  io::write_features_csv(dir / "f.csv", testing::random_features(479, 6, rng));
  const auto r = cli({"infer", "--features", (dir / "f.csv").string(), "--sizes", "3,8", "--top-m", "220",
                      "--out", (dir / "h.json").string(), "--candidates", (dir / "c.csv").string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("selected 220 of ≤958 candidates", 0) == 0);
  CHECK(io::read_hypergraph_json(dir / "h.json").edge_count() == 220);
  const auto cs = io::read_candidates_csv(dir / "c.csv", 479);
  CHECK(cs.count() <= 958);

  const auto too_many = cli({"infer", "--features", (dir / "f.csv").string(), "--sizes", "3", "--top-m",
                             "5000"});
  CHECK(too_many.code == 3);
  CHECK(too_many.err.find("NotEnoughCandidates") != std::string::npos);
}

TEST_CASE("synth, infer and eval chain") {
  const auto dir = scratch("chain");
  const std::vector<std::string> synth{"synth", "--nodes", "60", "--edges", "6=8", "--overlap", "0.1",
                                       "--dim", "64", "--seed", "7", "--out"};
  auto args = synth;
  args.push_back((dir / "a").string());
  REQUIRE(cli(args).code == 0);
  args.back() = (dir / "b").string();
  REQUIRE(cli(args).code == 0);
  for (const char* f : {"features.csv", "edge_features.csv", "truth.json", "manifest.json"}) {
    REQUIRE(fs::exists(dir / "a" / f));
    CHECK(slurp(dir / "a" / f) == slurp(dir / "b" / f));
  }
  const auto manifest = nlohmann::json::parse(slurp(dir / "a" / "manifest.json"));
  CHECK(manifest["n"] == 60);
  CHECK(manifest["edge_spec"]["6"] == 8);
  CHECK(manifest["seed"] == 7);
  CHECK(manifest["version"] == kToolVersion);
  CHECK(manifest.contains("achieved_overlap"));

  const auto inf = cli({"infer", "--features", (dir / "a" / "features.csv").string(), "--per-size", "6=8",
                        "--out", (dir / "pred.json").string(), "--candidates", (dir / "cand.csv").string()});
  REQUIRE(inf.code == 0);
  const auto ev = cli({"eval", "--pred", (dir / "pred.json").string(), "--truth",
                       (dir / "a" / "truth.json").string(), "--candidates", (dir / "cand.csv").string(),
                       "--out", (dir / "metrics.json").string()});
  REQUIRE(ev.code == 0);
  const auto metrics = nlohmann::json::parse(slurp(dir / "metrics.json"));
  CHECK(metrics["f1"].get<double>() >= 0.5);
  CHECK(metrics.contains("separation"));
  CHECK(count_lines(ev.out, "precision") == 1);

  const auto self = cli({"eval", "--pred", (dir / "a" / "truth.json").string(), "--truth",
                         (dir / "a" / "truth.json").string(), "--out", (dir / "self.json").string()});
  REQUIRE(self.code == 0);
  const auto perfect = nlohmann::json::parse(slurp(dir / "self.json"));
  CHECK(perfect["f1"].get<double>() == 1.0);
  CHECK(perfect["hgmse"].get<double>() == 0.0);
  CHECK_FALSE(perfect.contains("separation"));
}

TEST_CASE("eval input errors") {
  const auto dir = scratch("eval");
  io::write_text(dir / "a.json", R"({"n":4,"edges":[[0,1]]})");
  io::write_text(dir / "b.json", R"({"n":5,"edges":[[0,1]]})");
  io::write_text(dir / "bad.json", "{not json");
  CHECK(cli({"eval", "--pred", (dir / "a.json").string(), "--truth", (dir / "missing.json").string()}).code ==
        2);
  CHECK(cli({"eval", "--pred", (dir / "a.json").string(), "--truth", (dir / "b.json").string()}).code == 2);
  CHECK(cli({"eval", "--pred", (dir / "bad.json").string(), "--truth", (dir / "a.json").string()}).code == 2);
}

TEST_CASE("sweep writes run and aggregate rows") {
  const auto dir = scratch("sweep");
  const auto r = cli({"sweep", "--axis", "overlap", "--values", "0.1,0.3", "--reps", "2", "--nodes", "40",
                      "--edges", "5=6", "--dim", "32", "--out", (dir / "s.csv").string()});
  REQUIRE(r.code == 0);
  const auto csv = slurp(dir / "s.csv");
  CHECK(count_lines(csv, "row,axis,value,seed,status") == 1);
  CHECK(count_lines(csv, "run,overlap,") == 4);
  CHECK(count_lines(csv, "mean,overlap,") == 2);

  const auto failing = cli({"sweep", "--axis", "nodes", "--values", "4,40", "--reps", "1", "--nodes", "40",
                            "--edges", "5=6", "--dim", "16"});
  REQUIRE(failing.code == 0);
  CHECK(count_lines(failing.out, "run,nodes,4,0,InfeasibleConfig") == 1);

  CHECK(cli({"sweep", "--axis", "colour", "--values", "1"}).code == 2);
  CHECK(cli({"sweep", "--axis", "variant", "--values", "max", "--variant", "best"}).code == 2);
}
