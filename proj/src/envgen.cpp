#include "ppnl/envgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ppnl/planner.hpp"

namespace ppnl {

namespace {

std::string padded(int value, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*d", width, value);
  return buf;
}

std::string bucket_id(const GenConfig& config, int k) { return config.family + "-k" + padded(k, 2); }

bool is_reachable(const Environment& env, Coordinate start, const std::vector<Coordinate>& goals) {
  const auto mask = reachable_mask(env, start);
  return std::all_of(goals.begin(), goals.end(), [&](Coordinate g) { return mask[env.index(g)] != 0; });
}

std::vector<Coordinate> free_cells(const Environment& env) {
  std::vector<Coordinate> out;
  for (std::size_t i = 0; i < env.cell_count(); ++i)
    if (env.is_free(env.cell(i))) out.push_back(env.cell(i));
  return out;
}

// Every k-subset of [0, n) in lexicographic order.
std::vector<std::vector<std::size_t>> all_combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

void GenConfig::validate() const {
  if (family.empty()) throw std::invalid_argument("config family must be nonempty");
  if (grid_size < 2) throw std::invalid_argument("grid_size must be at least 2");
  if (envs_per_obstacle_count.empty()) throw std::invalid_argument("no obstacle buckets configured");
  if (placements_single < 0 || placements_multi_per_goal_count < 0)
    throw std::invalid_argument("placement counts must be non-negative");
  if (placements_single == 0 && placements_multi_per_goal_count == 0)
    throw std::invalid_argument("at least one placement count must be positive");
  if (goal_count_min < 2 || goal_count_max > 6 || goal_count_min > goal_count_max)
    throw std::invalid_argument("goal counts must lie in [2, 6]");
  const double sum = split_ratios.train + split_ratios.dev + split_ratios.test;
  if (split_ratios.train < 0 || split_ratios.dev < 0 || split_ratios.test < 0 || std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("split ratios must be non-negative and sum to 1");
  if (development_env_fraction <= 0 || development_env_fraction > 1)
    throw std::invalid_argument("development_env_fraction must lie in (0, 1]");

  const int cells = grid_size * grid_size;
  const int needed = std::max(placements_single > 0 ? 2 : 0, placements_multi_per_goal_count > 0 ? goal_count_max + 1 : 0);
  for (const auto& [k, n] : envs_per_obstacle_count) {
    if (k < 0) throw std::invalid_argument("obstacle count must be non-negative");
    if (n <= 0) throw std::invalid_argument("environment count for " + std::to_string(k) + " obstacles must be positive");
    if (k >= cells) throw std::invalid_argument(std::to_string(k) + " obstacles do not fit a " + std::to_string(grid_size) + "x" + std::to_string(grid_size) + " grid");
    if (cells - k < needed)
      throw std::invalid_argument(std::to_string(k) + " obstacles leave fewer than " + std::to_string(needed) + " free cells");
  }
}

GenConfig in_distribution_config(std::uint64_t seed) {
  GenConfig c;
  c.family = "id6";
  c.grid_size = 6;
  c.envs_per_obstacle_count = {{1, 200}, {2, 200}, {3, 200}, {4, 200}, {5, 200}};
  c.master_seed = seed;
  return c;
}

GenConfig ood_5x5_config(std::uint64_t seed) {
  GenConfig c;
  c.family = "ood5";
  c.grid_size = 5;
  c.envs_per_obstacle_count = {{1, 25}, {2, 25}, {3, 25}, {4, 25}, {5, 25}};
  c.fixed_split = Split::Ood5x5;
  c.master_seed = seed;
  return c;
}

GenConfig ood_7x7_config(std::uint64_t seed) {
  GenConfig c = ood_5x5_config(seed);
  c.family = "ood7";
  c.grid_size = 7;
  c.fixed_split = Split::Ood7x7;
  return c;
}

GenConfig ood_obstacles_config(std::uint64_t seed) {
  GenConfig c;
  c.family = "oodobs";
  c.grid_size = 6;
  for (int k = 6; k <= 11; ++k) c.envs_per_obstacle_count[k] = 25;
  c.fixed_split = Split::OodObstacles;
  c.master_seed = seed;
  return c;
}

std::vector<GenConfig> paper_default_configs(std::uint64_t seed) {
  return {in_distribution_config(seed), ood_5x5_config(seed), ood_7x7_config(seed), ood_obstacles_config(seed)};
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const std::int64_t num = n - k + i;
    if (r > std::numeric_limits<std::int64_t>::max() / num) return std::numeric_limits<std::int64_t>::max();
    r = r * num / i;
  }
  return r;
}

std::vector<EnvironmentRecord> generate_environments(const GenConfig& config) {
  config.validate();
  const int n = config.grid_size;
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  std::vector<EnvironmentRecord> out;

  for (const auto& [k, requested] : config.envs_per_obstacle_count) {
    const std::string bucket = bucket_id(config, k);
    const std::int64_t possible = binomial(static_cast<int>(cells), k);
    const auto make_id = [&](int i) { return bucket + "-e" + padded(i, 3); };
    const auto to_cells = [&](const std::vector<std::size_t>& idx) {
      std::vector<Coordinate> obstacles;
      for (const std::size_t i : idx) obstacles.push_back({static_cast<int>(i) / n, static_cast<int>(i) % n});
      return obstacles;
    };

    if (requested >= possible) {
      // Small bucket: take every obstacle set, in a seeded order.
      auto combos = all_combinations(cells, static_cast<std::size_t>(k));
      Stream order(config.master_seed, bucket + "-order");
      order.shuffle(std::span(combos));
      for (std::size_t i = 0; i < combos.size(); ++i) {
        const std::string id = make_id(static_cast<int>(i));
        Stream rng(config.master_seed, id);
        rng.shuffle(std::span(combos[i]));
        out.push_back({id, k, Environment(n, to_cells(combos[i])), false});
      }
      continue;
    }

    std::set<std::vector<std::size_t>> seen;
    std::vector<std::size_t> pool(cells);
    for (int i = 0; i < requested; ++i) {
      const std::string id = make_id(i);
      Stream rng(config.master_seed, id);
      std::vector<std::size_t> pick;
      while (true) {
        std::iota(pool.begin(), pool.end(), 0);
        rng.partial_shuffle(std::span(pool), static_cast<std::size_t>(k));
        pick.assign(pool.begin(), pool.begin() + k);
        auto key = pick;
        std::sort(key.begin(), key.end());
        if (seen.insert(std::move(key)).second) break;
      }
      out.push_back({id, k, Environment(n, to_cells(pick)), false});
    }
  }
  return out;
}

OrderingConstraint sample_constraint(std::size_t goal_count, Stream& rng) {
  if (goal_count < 2) throw std::invalid_argument("a constraint needs at least two goals");
  const auto s = static_cast<std::size_t>(rng.between(1, static_cast<int>(goal_count) - 1));
  std::vector<std::size_t> idx(goal_count);
  std::iota(idx.begin(), idx.end(), 0);
  rng.partial_shuffle(std::span(idx), s);
  OrderingConstraint c;
  c.before.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(s));
  c.after.assign(idx.begin() + static_cast<std::ptrdiff_t>(s), idx.end());
  std::sort(c.before.begin(), c.before.end());
  std::sort(c.after.begin(), c.after.end());
  return c;
}

std::vector<TaskInstance> sample_placements(const Environment& env, std::string_view env_id, Setting setting,
                                            std::size_t goal_count, int count, std::uint64_t seed) {
  if (setting == Setting::Single && goal_count != 1) throw std::invalid_argument("single setting takes one goal");
  if (setting != Setting::Single && (goal_count < 2 || goal_count > 6))
    throw std::invalid_argument("multi-goal settings take 2 to 6 goals");
  const std::vector<Coordinate> cells = free_cells(env);
  if (cells.size() < goal_count + 1)
    throw std::invalid_argument("environment " + std::string(env_id) + " has too few free cells");

  std::vector<TaskInstance> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<Coordinate> pool;
  for (int p = 0; p < count; ++p) {
    std::string key = std::string(env_id);
    if (setting == Setting::Single) {
      key += "-s" + padded(p, 2);
    } else {
      key += "-m" + std::to_string(goal_count) + "-p" + padded(p, 2);
    }
    // Both multi-goal settings share the placement drawn from this key.
    Stream rng(seed, key);
    pool = cells;
    rng.partial_shuffle(std::span(pool), goal_count + 1);

    TaskInstance t{.id = key,
                   .env = env,
                   .start = pool[0],
                   .goals = {pool.begin() + 1, pool.begin() + 1 + static_cast<std::ptrdiff_t>(goal_count)},
                   .constraint = std::nullopt,
                   .setting = setting,
                   .split = Split::Train,
                   .reachable = true};
    if (setting == Setting::MultiUnconstrained) t.id += "-u";
    if (setting == Setting::MultiConstrained) {
      t.id += "-c";
      t.constraint = sample_constraint(goal_count, rng);
    }
    t.reachable = is_reachable(env, t.start, t.goals);
    out.push_back(std::move(t));
  }
  return out;
}

SplitSizes split_sizes(int n, const SplitRatios& ratios) {
  SplitSizes s;
  s.train = static_cast<int>(std::floor(ratios.train * n + 1e-9));
  s.dev = static_cast<int>(std::floor(ratios.dev * n + 1e-9));
  s.test = n - s.train - s.dev;
  return s;
}

int development_env_count(int n, double fraction) { return static_cast<int>(std::floor(fraction * n + 1e-9)); }

void assign_held_out(std::vector<EnvironmentRecord>& envs, const GenConfig& config) {
  if (config.fixed_split) return;
  std::map<int, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < envs.size(); ++i) buckets[envs[i].obstacle_count].push_back(i);
  for (auto& [k, members] : buckets) {
    Stream rng(config.master_seed, bucket_id(config, k) + "-holdout");
    rng.shuffle(std::span(members));
    const int keep = development_env_count(static_cast<int>(members.size()), config.development_env_fraction);
    for (std::size_t j = static_cast<std::size_t>(keep); j < members.size(); ++j) envs[members[j]].held_out = true;
  }
}

void assign_group_splits(std::vector<TaskInstance>& instances, const std::vector<std::vector<std::size_t>>& groups,
                         const SplitRatios& ratios, Stream& rng) {
  std::vector<std::size_t> order(groups.size());
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(std::span(order));
  const SplitSizes sizes = split_sizes(static_cast<int>(groups.size()), ratios);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const int p = static_cast<int>(pos);
    const Split split = p < sizes.train ? Split::Train : p < sizes.train + sizes.dev ? Split::Dev : Split::TestUnseenPlacement;
    for (const std::size_t i : groups[order[pos]]) instances[i].split = split;
  }
}

Corpus build_corpus(const GenConfig& config) {
  Corpus corpus;
  corpus.environments = generate_environments(config);
  assign_held_out(corpus.environments, config);

  for (const EnvironmentRecord& rec : corpus.environments) {
    std::vector<TaskInstance> local;
    std::vector<std::vector<std::size_t>> single_groups;
    std::map<std::size_t, std::vector<std::vector<std::size_t>>> multi_groups;  // goal count -> groups

    if (config.placements_single > 0) {
      auto single = sample_placements(rec.env, rec.id, Setting::Single, 1, config.placements_single, config.master_seed);
      for (auto& t : single) {
        single_groups.push_back({local.size()});
        local.push_back(std::move(t));
      }
    }
    if (config.placements_multi_per_goal_count > 0) {
      for (int l = config.goal_count_min; l <= config.goal_count_max; ++l) {
        const auto gl = static_cast<std::size_t>(l);
        auto plain = sample_placements(rec.env, rec.id, Setting::MultiUnconstrained, gl,
                                       config.placements_multi_per_goal_count, config.master_seed);
        auto constrained = sample_placements(rec.env, rec.id, Setting::MultiConstrained, gl,
                                             config.placements_multi_per_goal_count, config.master_seed);
        for (std::size_t p = 0; p < plain.size(); ++p) {
          multi_groups[gl].push_back({local.size(), local.size() + 1});
          local.push_back(std::move(plain[p]));
          local.push_back(std::move(constrained[p]));
        }
      }
    }

    if (config.fixed_split) {
      for (auto& t : local) t.split = *config.fixed_split;
    } else if (rec.held_out) {
      for (auto& t : local) t.split = Split::TestUnseenEnvironment;
    } else {
      Stream single_rng(config.master_seed, rec.id + "-split-s");
      assign_group_splits(local, single_groups, config.split_ratios, single_rng);
      for (const auto& [l, groups] : multi_groups) {
        Stream multi_rng(config.master_seed, rec.id + "-split-m" + std::to_string(l));
        assign_group_splits(local, groups, config.split_ratios, multi_rng);
      }
    }
    for (auto& t : local) corpus.instances.push_back(std::move(t));
  }

  std::sort(corpus.instances.begin(), corpus.instances.end(),
            [](const TaskInstance& a, const TaskInstance& b) { return a.id < b.id; });
  return corpus;
}

Corpus build_corpus(const std::vector<GenConfig>& configs) {
  Corpus all;
  std::set<std::string> families;
  for (const GenConfig& c : configs) {
    if (!families.insert(c.family).second) throw std::invalid_argument("duplicate config family '" + c.family + "'");
    Corpus part = build_corpus(c);
    for (auto& e : part.environments) all.environments.push_back(std::move(e));
    for (auto& t : part.instances) all.instances.push_back(std::move(t));
  }
  std::sort(all.instances.begin(), all.instances.end(),
            [](const TaskInstance& a, const TaskInstance& b) { return a.id < b.id; });
  return all;
}

}  // namespace ppnl
