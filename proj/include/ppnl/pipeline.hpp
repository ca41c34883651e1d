#pragma once

// Run configuration, presets, agent evaluation and report breakdowns.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ppnl/agent.hpp"
#include "ppnl/dataset.hpp"
#include "ppnl/envgen.hpp"
#include "ppnl/feedback.hpp"
#include "ppnl/metrics.hpp"
#include "ppnl/prompts.hpp"

namespace ppnl {

struct RunConfig {
  std::string preset = "paper-default";
  std::uint64_t seed = kDefaultSeed;
  std::vector<GenConfig> generators;
  /// Fraction of every split kept (rounded up); 1 keeps everything.
  double subsample = 1.0;
};

/// "paper-default" (full corpus) or "desk" (1% of every split).
RunConfig preset_config(std::string_view name, std::uint64_t seed = kDefaultSeed);

/// JSON file with optional keys "preset", "seed", "subsample" and
/// "generators" (a list of generator objects overriding the preset's).
RunConfig load_run_config(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const GenConfig& config);
GenConfig gen_config_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const RunConfig& config);

/// Keeps ceil(fraction * n) instances of each split, chosen by a seeded
/// hash of the id. Output sorted by id.
std::vector<TaskInstance> subsample(std::span<const TaskInstance> instances, double fraction, std::uint64_t seed);

/// Generates, subsamples, solves and verbalizes.
std::vector<DatasetRecord> generate_records(const RunConfig& config);

struct EvalSettings {
  PromptSpec prompt;
  bool egocentric = false;
  bool interactive = false;  // run ReAct episodes instead of one-shot prompts
  EvalOptions metrics;
  EpisodeOptions episode;
  int jobs = 1;
};

struct ScoredRecord {
  const DatasetRecord* record = nullptr;
  std::string response;  // raw answer, or the episode transcript JSON
  InstanceResult result;
  int trials_used = 0;  // episodes only
};

/// Number of gold actions (moves plus inspects); nullopt when unreachable.
std::optional<int> gold_length(const DatasetRecord& record);

struct RunReport {
  nlohmann::ordered_json config;
  MetricsReport overall;
  std::map<std::string, MetricsReport> by_split;
  std::map<std::string, MetricsReport> by_setting;
  std::map<int, MetricsReport> by_obstacles;
  std::map<int, MetricsReport> by_path_length;  // -1 collects unreachable instances
};

RunReport build_report(std::span<const ScoredRecord> scored, nlohmann::ordered_json config = {});

/// Prompts `agent` on every record and scores the answers.
std::vector<ScoredRecord> evaluate_agent(std::span<const DatasetRecord> records, Agent& agent,
                                         const EvalSettings& settings);

/// Scores stored predictions keyed by instance id; missing ids count as
/// unparseable.
std::vector<ScoredRecord> evaluate_predictions(std::span<const DatasetRecord> records,
                                               const std::map<std::string, std::string>& predictions,
                                               const EvalSettings& settings);

nlohmann::ordered_json to_json(const MetricsReport& report);
nlohmann::ordered_json to_json(const RunReport& report);

/// Plain-text table, one row per group, columns in the order Success,
/// Optimal, Exact Match, Feasible, Distance, Unreachable Acc.
std::string format_table(const std::map<std::string, MetricsReport>& rows);

enum class StatsAxis : std::uint8_t { Obstacles, PathLength, Split, Setting };
StatsAxis parse_stats_axis(std::string_view s);

struct StatsRow {
  std::string key;
  std::size_t instances = 0;
  std::size_t unreachable = 0;
  double mean_gold_length = 0;  // over reachable instances
};

std::vector<StatsRow> corpus_stats(std::span<const DatasetRecord> records, StatsAxis axis);
std::string format_stats(const std::vector<StatsRow>& rows);

}  // namespace ppnl
