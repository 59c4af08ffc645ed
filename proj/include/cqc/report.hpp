#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "cqc/enumeration.hpp"

namespace cqc {

using Json = nlohmann::ordered_json;

// One JSON object per pattern; labels sorted as strings, decimals rounded to
// six significant digits.
Json pattern_json(const LayerPair& graphs, const Pattern& pattern);
void write_patterns(std::ostream& out, const LayerPair& graphs, std::span<const Pattern> patterns);

struct ResultSummary {
  std::size_t count = 0;
  Rational sum_interestingness{0};
  std::optional<double> avg_interestingness;
  std::optional<double> avg_density;  // mean of the larger gamma per pattern
  std::optional<double> avg_size;
};

ResultSummary summarize(std::span<const Pattern> patterns);

Json params_json(const MiningParams& params);

Json stats_json(const std::string& label, const std::string& mode, const MineStats& stats,
                const ResultSummary& summary, const MiningParams& params);

// The six comparison rows of one run.
struct RunMetrics {
  std::string label;
  double runtime_ms = 0;
  std::uint64_t nodes_visited = 0;
  std::optional<double> avg_interestingness;
  double sum_interestingness = 0;
  std::optional<double> avg_density;
  std::optional<double> avg_size;
};

// Throws std::runtime_error naming `source` when fields are missing or mistyped.
RunMetrics metrics_from_stats(const Json& stats, const std::string& source);

// Header "metric,<label>..." and one row per metric; absent averages are "null".
void write_report_csv(std::ostream& out, std::span<const RunMetrics> runs);

}  // namespace cqc
