#include "cqc/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace cqc {

namespace {

double rounded(const Rational& value) { return round_significant(to_double(value)); }

Json optional_number(const std::optional<double>& value) {
  return value ? Json(round_significant(*value)) : Json(nullptr);
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string format_optional(const std::optional<double>& value) {
  return value ? format_number(*value) : "null";
}

std::optional<double> read_optional(const Json& object, const char* key, const std::string& source) {
  if (!object.contains(key)) throw std::runtime_error(source + ": missing field '" + key + "'");
  const Json& v = object.at(key);
  if (v.is_null()) return std::nullopt;
  if (!v.is_number()) throw std::runtime_error(source + ": field '" + key + "' is not a number");
  return v.get<double>();
}

double read_number(const Json& object, const char* key, const std::string& source) {
  auto v = read_optional(object, key, source);
  if (!v) throw std::runtime_error(source + ": field '" + key + "' is null");
  return *v;
}

}  // namespace

Json pattern_json(const LayerPair& graphs, const Pattern& p) {
  std::vector<std::string> labels;
  labels.reserve(p.vertices.size());
  for (VertexId v : p.vertices) labels.push_back(graphs.label(v));
  std::sort(labels.begin(), labels.end());
  Json j;
  j["vertices"] = labels;
  j["e1"] = p.edges[0];
  j["e2"] = p.edges[1];
  j["gamma1"] = rounded(p.gamma[0]);
  j["gamma2"] = rounded(p.gamma[1]);
  j["alpha1"] = rounded(p.alpha[0]);
  j["alpha2"] = rounded(p.alpha[1]);
  j["contrast"] = rounded(p.contrast);
  j["interestingness"] = rounded(p.interestingness);
  j["dense_layer"] = layer_number(p.dense_layer());
  return j;
}

void write_patterns(std::ostream& out, const LayerPair& graphs, std::span<const Pattern> patterns) {
  for (const Pattern& p : patterns) out << pattern_json(graphs, p).dump() << '\n';
}

ResultSummary summarize(std::span<const Pattern> patterns) {
  ResultSummary s;
  s.count = patterns.size();
  if (patterns.empty()) return s;
  double density = 0;
  double size = 0;
  for (const Pattern& p : patterns) {
    s.sum_interestingness += p.interestingness;
    density += to_double(std::max(p.gamma[0], p.gamma[1]));
    size += static_cast<double>(p.size());
  }
  const auto n = static_cast<double>(patterns.size());
  s.avg_interestingness = to_double(s.sum_interestingness) / n;
  s.avg_density = density / n;
  s.avg_size = size / n;
  return s;
}

Json params_json(const MiningParams& params) {
  Json j;
  j["delta"] = to_double(params.delta);
  j["delta_prime"] = to_double(params.delta_prime);
  j["r"] = to_double(params.redundancy);
  j["min_size"] = params.min_size;
  j["base_gamma"] = to_double(params.base_gamma);
  j["candidate_pruning"] = params.candidate_pruning;
  j["bound_pruning"] = params.bound_pruning;
  j["diameter_pruning"] = params.diameter_pruning;
  return j;
}

Json stats_json(const std::string& label, const std::string& mode, const MineStats& stats,
                const ResultSummary& summary, const MiningParams& params) {
  Json j;
  j["label"] = label;
  j["mode"] = mode;
  j["nodes_visited"] = stats.nodes_visited;
  j["patterns_emitted"] = stats.patterns_emitted;
  j["patterns_accepted"] = stats.patterns_accepted;
  j["subtrees_pruned_by_bound"] = stats.subtrees_pruned_by_bound;
  j["candidates_pruned"] = stats.candidates_pruned;
  j["max_queue_size"] = stats.max_queue_size;
  j["wall_time_ms"] = round_significant(stats.wall_time_ms);
  j["completed"] = stats.completed;
  Json r;
  r["count"] = summary.count;
  r["sum_I"] = rounded(summary.sum_interestingness);
  r["avg_I"] = optional_number(summary.avg_interestingness);
  r["avg_density"] = optional_number(summary.avg_density);
  r["avg_size"] = optional_number(summary.avg_size);
  j["result"] = r;
  j["params"] = params_json(params);
  return j;
}

RunMetrics metrics_from_stats(const Json& stats, const std::string& source) {
  if (!stats.is_object()) throw std::runtime_error(source + ": stats must be a JSON object");
  if (!stats.contains("result") || !stats.at("result").is_object()) {
    throw std::runtime_error(source + ": missing object 'result'");
  }
  const Json& r = stats.at("result");
  RunMetrics m;
  m.label = stats.contains("label") && stats.at("label").is_string() ? stats.at("label").get<std::string>() : source;
  m.runtime_ms = read_number(stats, "wall_time_ms", source);
  m.nodes_visited = static_cast<std::uint64_t>(read_number(stats, "nodes_visited", source));
  m.avg_interestingness = read_optional(r, "avg_I", source);
  m.sum_interestingness = read_number(r, "sum_I", source);
  m.avg_density = read_optional(r, "avg_density", source);
  m.avg_size = read_optional(r, "avg_size", source);
  return m;
}

void write_report_csv(std::ostream& out, std::span<const RunMetrics> runs) {
  out << "metric";
  for (const RunMetrics& m : runs) out << ',' << m.label;
  out << '\n';
  auto row = [&](const char* name, auto&& cell) {
    out << name;
    for (const RunMetrics& m : runs) out << ',' << cell(m);
    out << '\n';
  };
  row("runtime_ms", [](const RunMetrics& m) { return format_number(m.runtime_ms); });
  row("nodes_visited", [](const RunMetrics& m) { return std::to_string(m.nodes_visited); });
  row("avg_I", [](const RunMetrics& m) { return format_optional(m.avg_interestingness); });
  row("sum_I", [](const RunMetrics& m) { return format_number(m.sum_interestingness); });
  row("avg_gamma", [](const RunMetrics& m) { return format_optional(m.avg_density); });
  row("avg_size", [](const RunMetrics& m) { return format_optional(m.avg_size); });
}

}  // namespace cqc
