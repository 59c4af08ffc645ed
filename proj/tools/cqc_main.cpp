// cqc: mine contrasting quasi-cliques from a pair of graph layers.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cqc/baseline.hpp"
#include "cqc/enumeration.hpp"
#include "cqc/oracle.hpp"
#include "cqc/report.hpp"
#include "cqc/simd/kernels.hpp"
#include "cqc/synthgen.hpp"

namespace {

struct MineOptions {
  std::string graph1;
  std::string graph2;
  std::string delta = "0.5";
  std::string delta_prime = "0";
  std::string r = "0.1";
  std::string base_gamma = "0.5";
  std::size_t min_size = 4;
  bool no_prune = false;
  bool diameter_prune = false;
  bool no_diameter_prune = false;
  std::uint64_t seed = 0;
  std::string out;
  std::string stats;
  std::string label;
  std::uint64_t max_nodes = 0;
  double max_seconds = 0;
};

struct GenOptions {
  cqc::SynthConfig config;
  std::string qc_density = "0.6";
  std::string graph1;
  std::string graph2;
  std::string out;
};

struct StatsOptions {
  std::vector<std::string> files;
  std::string out;
};

void add_mine_options(CLI::App* cmd, MineOptions& o) {
  cmd->add_option("--graph1", o.graph1, "Edge list of layer 1")->required();
  cmd->add_option("--graph2", o.graph2, "Edge list of layer 2")->required();
  cmd->add_option("--delta", o.delta, "Quasi-clique threshold in (0, 1]")->capture_default_str();
  cmd->add_option("--delta-prime", o.delta_prime, "Minimum contrast, exclusive, in [0, 1)")->capture_default_str();
  cmd->add_option("--r", o.r, "Redundancy overlap threshold in (0, 1]")->capture_default_str();
  cmd->add_option("--min-size", o.min_size, "Smallest reported pattern")->capture_default_str();
  cmd->add_option("--base-gamma", o.base_gamma, "Sets whose best gamma is below this score -1")
      ->capture_default_str();
  cmd->add_flag("--no-prune", o.no_prune, "Disable candidate, bound and diameter pruning");
  cmd->add_flag("--diameter-prune", o.diameter_prune, "Enable diameter-based candidate pruning");
  cmd->add_flag("--no-diameter-prune", o.no_diameter_prune, "Disable diameter-based candidate pruning");
  cmd->add_option("--seed", o.seed, "Recorded in the stats; mining itself is deterministic");
  cmd->add_option("--out", o.out, "Pattern JSON lines (default stdout)");
  cmd->add_option("--stats", o.stats, "Run statistics JSON");
  cmd->add_option("--label", o.label, "Run label used in the report");
  cmd->add_option("--max-nodes", o.max_nodes, "Stop after this many visited nodes (0 = no limit)");
  cmd->add_option("--max-seconds", o.max_seconds, "Stop after this much wall time (0 = no limit)");
}

cqc::MiningParams to_params(const MineOptions& o, bool diameter_default) {
  cqc::MiningParams p;
  p.delta = cqc::parse_rational(o.delta);
  p.delta_prime = cqc::parse_rational(o.delta_prime);
  p.redundancy = cqc::parse_rational(o.r);
  p.base_gamma = cqc::parse_rational(o.base_gamma);
  p.min_size = o.min_size;
  p.diameter_pruning = diameter_default;
  if (o.diameter_prune) p.diameter_pruning = true;
  if (o.no_diameter_prune) p.diameter_pruning = false;
  if (o.no_prune) {
    p.candidate_pruning = false;
    p.bound_pruning = false;
    p.diameter_pruning = false;
  }
  p.validate();
  return p;
}

// Writes to `path`, or stdout when empty. Throws on open failure.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw std::runtime_error("cannot write " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish(const std::string& path) {
    stream().flush();
    if (!stream()) throw std::runtime_error("write failed: " + (path.empty() ? std::string("<stdout>") : path));
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void write_json_file(const std::string& path, const cqc::Json& j) {
  Output out(path);
  out.stream() << j.dump(2) << '\n';
  out.finish(path);
}

cqc::LayerPair load_graphs(const MineOptions& o) {
  cqc::LayerPair g = cqc::load_layer_pair(cqc::read_edge_list_file(o.graph1), cqc::read_edge_list_file(o.graph2));
  const auto& rep = g.load_report();
  for (cqc::Layer layer : cqc::kLayers) {
    const std::size_t i = cqc::index(layer);
    if (rep.self_loops_dropped[i] + rep.duplicates_dropped[i] > 0) {
      std::cerr << "note: layer " << cqc::layer_number(layer) << ": dropped " << rep.self_loops_dropped[i]
                << " self-loops and " << rep.duplicates_dropped[i] << " duplicate edges\n";
    }
  }
  return g;
}

void finish_run(const std::string& mode, const MineOptions& o, const cqc::MiningParams& params,
                const cqc::LayerPair& g, const std::vector<cqc::Pattern>& patterns, const cqc::MineStats& stats) {
  Output out(o.out);
  cqc::write_patterns(out.stream(), g, patterns);
  out.finish(o.out);
  if (!o.stats.empty()) {
    cqc::Json j = cqc::stats_json(o.label.empty() ? mode : o.label, mode, stats, cqc::summarize(patterns), params);
    j["seed"] = o.seed;
    j["simd"] = cqc::simd::name(cqc::simd::active().isa);
    write_json_file(o.stats, j);
  }
  if (!stats.completed) std::cerr << "warning: search budget exhausted; result may be incomplete\n";
}

int run_mine(const MineOptions& o) {
  const cqc::MiningParams params = to_params(o, cqc::MiningParams{}.diameter_pruning);
  const cqc::LayerPair g = load_graphs(o);
  cqc::MineResult r = cqc::mine(g, params, nullptr, {o.max_nodes, o.max_seconds});
  finish_run("mine", o, params, g, r.result.patterns(), r.stats);
  return 0;
}

int run_baseline(const MineOptions& o) {
  const cqc::MiningParams params = to_params(o, false);
  const cqc::LayerPair g = load_graphs(o);
  cqc::BaselineResult r = cqc::run_baseline(g, params, {o.max_nodes, o.max_seconds});
  finish_run("baseline", o, params, g, r.result.patterns(), r.stats);
  return 0;
}

int run_oracle(const MineOptions& o) {
  const cqc::MiningParams params = to_params(o, false);
  const cqc::LayerPair g = load_graphs(o);
  const auto start = std::chrono::steady_clock::now();
  cqc::OracleResult r = cqc::enumerate_all(g, params);
  cqc::MineStats stats;
  stats.nodes_visited = (std::uint64_t{1} << g.vertex_count());
  stats.patterns_emitted = r.all_cqcs.size();
  stats.patterns_accepted = r.greedy_result.size();
  stats.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  finish_run("oracle", o, params, g, r.greedy_result.patterns(), stats);
  return 0;
}

int run_gen(GenOptions& o) {
  o.config.qc_density = cqc::parse_rational(o.qc_density);
  const cqc::SynthInstance inst = cqc::generate(o.config);
  for (cqc::Layer layer : cqc::kLayers) {
    const std::string& path = layer == cqc::Layer::kFirst ? o.graph1 : o.graph2;
    Output out(path);
    out.stream() << "# synthetic layer " << cqc::layer_number(layer) << ", n=" << inst.n << ", seed=" << o.config.seed
                 << '\n';
    cqc::write_edge_list(out.stream(), inst.edge_list(layer));
    out.finish(path);
  }
  if (!o.out.empty()) {
    cqc::Json truth;
    truth["n"] = inst.n;
    truth["target_edges"] = o.config.target_edges;
    truth["qc_size"] = o.config.qc_size;
    truth["qc_density"] = cqc::to_double(o.config.qc_density);
    truth["seed"] = o.config.seed;
    for (cqc::Layer layer : cqc::kLayers) {
      cqc::Json sets = cqc::Json::array();
      for (const cqc::VertexSet& s : inst.embedded[cqc::index(layer)]) {
        std::vector<std::string> labels;
        for (cqc::VertexId v : s) labels.push_back(inst.labels[v]);
        sets.push_back(labels);
      }
      truth["embedded" + std::to_string(cqc::layer_number(layer))] = sets;
    }
    write_json_file(o.out, truth);
  }
  return 0;
}

int run_stats(const StatsOptions& o) {
  std::vector<cqc::RunMetrics> runs;
  for (const std::string& path : o.files) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    cqc::Json j;
    try {
      j = cqc::Json::parse(in);
    } catch (const cqc::Json::parse_error& e) {
      throw std::runtime_error(path + ": " + e.what());
    }
    runs.push_back(cqc::metrics_from_stats(j, path));
  }
  Output out(o.out);
  cqc::write_report_csv(out.stream(), runs);
  out.finish(o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contrasting quasi-clique miner"};
  app.require_subcommand(1);

  MineOptions mine_opts;
  MineOptions baseline_opts;
  MineOptions oracle_opts;
  GenOptions gen_opts;
  StatsOptions stats_opts;

  CLI::App* mine = app.add_subcommand("mine", "Best-first contrasting quasi-clique search");
  add_mine_options(mine, mine_opts);
  CLI::App* baseline = app.add_subcommand("baseline", "Complement-graph cross-graph quasi-clique strategy");
  add_mine_options(baseline, baseline_opts);
  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive search, at most 16 vertices");
  add_mine_options(oracle, oracle_opts);

  CLI::App* gen = app.add_subcommand("gen", "Synthetic power-law pair with planted quasi-cliques");
  gen->add_option("--n", gen_opts.config.n, "Vertices")->capture_default_str();
  gen->add_option("--edges", gen_opts.config.target_edges, "Background edges per layer")->capture_default_str();
  gen->add_option("--embedded", gen_opts.config.n_embedded, "Planted sets per layer")->capture_default_str();
  gen->add_option("--qc-size", gen_opts.config.qc_size, "Planted set size")->capture_default_str();
  gen->add_option("--qc-density", gen_opts.qc_density, "Planted edge density")->capture_default_str();
  gen->add_option("--seed", gen_opts.config.seed, "RNG seed")->capture_default_str();
  gen->add_option("--graph1", gen_opts.graph1, "Output edge list, layer 1")->required();
  gen->add_option("--graph2", gen_opts.graph2, "Output edge list, layer 2")->required();
  gen->add_option("--out", gen_opts.out, "Ground-truth JSON");

  CLI::App* stats = app.add_subcommand("stats", "Comparison table from stats JSON files");
  stats->add_option("files", stats_opts.files, "Stats JSON files, one column each")->required();
  stats->add_option("--out", stats_opts.out, "CSV output (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*mine) return run_mine(mine_opts);
    if (*baseline) return run_baseline(baseline_opts);
    if (*oracle) return run_oracle(oracle_opts);
    if (*gen) return run_gen(gen_opts);
    if (*stats) return run_stats(stats_opts);
  } catch (const std::exception& e) {
    std::cerr << "cqc: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
