#pragma once

// Seeded generation of environments, start/goal placements, ordering
// constraints and split assignment.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppnl/rng.hpp"
#include "ppnl/task.hpp"
#include "ppnl/world.hpp"

namespace ppnl {

inline constexpr std::uint64_t kDefaultSeed = 20231013;

struct SplitRatios {
  double train = 0.8;
  double dev = 0.1;
  double test = 0.1;
};

struct GenConfig {
  std::string family = "id6";  // id prefix, unique per config
  int grid_size = 6;
  std::map<int, int> envs_per_obstacle_count;  // obstacle count -> environments
  int placements_single = 30;
  int placements_multi_per_goal_count = 10;
  int goal_count_min = 2;
  int goal_count_max = 6;
  SplitRatios split_ratios;
  /// Share of each obstacle bucket kept for train/dev/unseen-placement test;
  /// the rest becomes the unseen-environment test.
  double development_env_fraction = 0.8;
  /// When set, every instance gets this split and no environment is held out.
  std::optional<Split> fixed_split;
  std::uint64_t master_seed = kDefaultSeed;

  /// Throws std::invalid_argument on non-positive counts, bad ratios or an
  /// obstacle count that leaves too few free cells.
  void validate() const;
};

GenConfig in_distribution_config(std::uint64_t seed = kDefaultSeed);
GenConfig ood_5x5_config(std::uint64_t seed = kDefaultSeed);
GenConfig ood_7x7_config(std::uint64_t seed = kDefaultSeed);
GenConfig ood_obstacles_config(std::uint64_t seed = kDefaultSeed);
/// The four configs above, in that order.
std::vector<GenConfig> paper_default_configs(std::uint64_t seed = kDefaultSeed);

struct EnvironmentRecord {
  std::string id;  // e.g. "id6-k03-e017"
  int obstacle_count = 0;
  Environment env;
  bool held_out = false;
};

/// n choose k, saturating at INT64_MAX.
std::int64_t binomial(int n, int k);

/// Distinct environments per obstacle bucket, capped at the number of
/// possible obstacle sets. Held-out flags are not assigned here.
std::vector<EnvironmentRecord> generate_environments(const GenConfig& config);

/// Uniform split size s in [1, goal_count-1], then a uniform s-subset as the
/// before side. Both sides ascending. Throws when goal_count < 2.
OrderingConstraint sample_constraint(std::size_t goal_count, Stream& rng);

/// `count` placements of a start and `goal_count` goals drawn without
/// replacement from the free cells. Each placement uses its own stream keyed
/// by its id. Constrained settings also draw a constraint. Split is left at
/// Train. Throws when the environment has too few free cells.
std::vector<TaskInstance> sample_placements(const Environment& env, std::string_view env_id, Setting setting,
                                            std::size_t goal_count, int count, std::uint64_t seed);

/// Sizes of the train/dev/test parts of n items: floors of the first two
/// ratios, remainder to test.
struct SplitSizes {
  int train = 0;
  int dev = 0;
  int test = 0;
};
SplitSizes split_sizes(int n, const SplitRatios& ratios);

/// Number of environments of a bucket of n that stay in development.
int development_env_count(int n, double fraction);

/// Marks a deterministic subset of each obstacle bucket as held out.
void assign_held_out(std::vector<EnvironmentRecord>& envs, const GenConfig& config);

/// Labels instances of one environment. `groups` lists instance indices that
/// must share a split; groups are shuffled and cut by split_sizes.
void assign_group_splits(std::vector<TaskInstance>& instances, const std::vector<std::vector<std::size_t>>& groups,
                         const SplitRatios& ratios, Stream& rng);

struct Corpus {
  std::vector<EnvironmentRecord> environments;
  std::vector<TaskInstance> instances;  // sorted by id
};

/// Environments, placements for every setting, reachability and splits.
Corpus build_corpus(const GenConfig& config);

/// Concatenation of several configs' corpora, sorted by id.
Corpus build_corpus(const std::vector<GenConfig>& configs);

}  // namespace ppnl
