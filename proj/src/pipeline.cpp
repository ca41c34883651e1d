#include "ppnl/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "ppnl/planner.hpp"
#include "ppnl/rng.hpp"

namespace ppnl {

using ojson = nlohmann::ordered_json;

RunConfig preset_config(std::string_view name, std::uint64_t seed) {
  RunConfig c;
  c.preset = std::string(name);
  c.seed = seed;
  c.generators = paper_default_configs(seed);
  if (name == "paper-default") return c;
  if (name == "desk") {
    c.subsample = 0.01;
    return c;
  }
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

ojson to_json(const GenConfig& g) {
  ojson j;
  j["family"] = g.family;
  j["grid_size"] = g.grid_size;
  ojson buckets = ojson::object();
  for (const auto& [k, n] : g.envs_per_obstacle_count) buckets[std::to_string(k)] = n;
  j["envs_per_obstacle_count"] = buckets;
  j["placements_single"] = g.placements_single;
  j["placements_multi_per_goal_count"] = g.placements_multi_per_goal_count;
  j["goal_count_min"] = g.goal_count_min;
  j["goal_count_max"] = g.goal_count_max;
  j["split_ratios"] = {g.split_ratios.train, g.split_ratios.dev, g.split_ratios.test};
  j["development_env_fraction"] = g.development_env_fraction;
  j["fixed_split"] = g.fixed_split ? ojson(std::string(to_string(*g.fixed_split))) : ojson(nullptr);
  j["master_seed"] = g.master_seed;
  return j;
}

GenConfig gen_config_from_json(const nlohmann::json& j) {
  GenConfig g;
  if (!j.is_object()) throw std::invalid_argument("generator config must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "family") g.family = value.get<std::string>();
    else if (key == "grid_size") g.grid_size = value.get<int>();
    else if (key == "envs_per_obstacle_count") {
      for (const auto& [k, n] : value.items()) g.envs_per_obstacle_count[std::stoi(k)] = n.get<int>();
    } else if (key == "placements_single") g.placements_single = value.get<int>();
    else if (key == "placements_multi_per_goal_count") g.placements_multi_per_goal_count = value.get<int>();
    else if (key == "goal_count_min") g.goal_count_min = value.get<int>();
    else if (key == "goal_count_max") g.goal_count_max = value.get<int>();
    else if (key == "split_ratios") {
      const auto r = value.get<std::vector<double>>();
      if (r.size() != 3) throw std::invalid_argument("split_ratios needs three values");
      g.split_ratios = {r[0], r[1], r[2]};
    } else if (key == "development_env_fraction") g.development_env_fraction = value.get<double>();
    else if (key == "fixed_split") {
      if (value.is_null()) g.fixed_split.reset();
      else g.fixed_split = parse_split(value.get<std::string>());
    } else if (key == "master_seed") g.master_seed = value.get<std::uint64_t>();
    else throw std::invalid_argument("unknown generator key '" + key + "'");
  }
  g.validate();
  return g;
}

ojson to_json(const RunConfig& c) {
  ojson j;
  j["preset"] = c.preset;
  j["seed"] = c.seed;
  j["subsample"] = c.subsample;
  j["generators"] = ojson::array();
  for (const GenConfig& g : c.generators) j["generators"].push_back(to_json(g));
  return j;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  const auto j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw std::invalid_argument(path.string() + " is not a JSON object");
  try {
    const std::uint64_t seed = j.value("seed", kDefaultSeed);
    RunConfig c = preset_config(j.value("preset", std::string("paper-default")), seed);
    if (j.contains("subsample")) c.subsample = j.at("subsample").get<double>();
    if (j.contains("generators")) {
      c.generators.clear();
      for (const auto& g : j.at("generators")) {
        GenConfig gen = gen_config_from_json(g);
        if (!g.contains("master_seed")) gen.master_seed = seed;
        c.generators.push_back(std::move(gen));
      }
    }
    for (const auto& [key, value] : j.items()) {
      if (key != "preset" && key != "seed" && key != "subsample" && key != "generators")
        throw std::invalid_argument("unknown config key '" + key + "'");
    }
    if (c.subsample <= 0 || c.subsample > 1) throw std::invalid_argument("subsample must lie in (0, 1]");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

std::vector<TaskInstance> subsample(std::span<const TaskInstance> instances, double fraction, std::uint64_t seed) {
  std::map<Split, std::vector<std::pair<std::uint64_t, std::size_t>>> by_split;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const std::uint64_t key = splitmix64(seed ^ splitmix64(fnv1a64(instances[i].id)));
    by_split[instances[i].split].emplace_back(key, i);
  }
  std::vector<TaskInstance> out;
  for (auto& [split, keyed] : by_split) {
    std::sort(keyed.begin(), keyed.end());
    const auto keep = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(keyed.size()) - 1e-9));
    for (std::size_t i = 0; i < keep && i < keyed.size(); ++i) out.push_back(instances[keyed[i].second]);
  }
  std::sort(out.begin(), out.end(), [](const TaskInstance& a, const TaskInstance& b) { return a.id < b.id; });
  return out;
}

std::vector<DatasetRecord> generate_records(const RunConfig& config) {
  Corpus corpus = build_corpus(config.generators);
  if (config.subsample < 1.0) {
    corpus.instances = subsample(corpus.instances, config.subsample, config.seed);
  }
  return make_records(corpus.instances);
}

std::optional<int> gold_length(const DatasetRecord& record) {
  if (!record.instance.reachable) return std::nullopt;
  if (record.gold_plan.empty()) return 0;
  return static_cast<int>(std::count(record.gold_plan.begin(), record.gold_plan.end(), ' ')) + 1;
}

RunReport build_report(std::span<const ScoredRecord> scored, ojson config) {
  MetricsAccumulator overall;
  std::map<std::string, MetricsAccumulator> split;
  std::map<std::string, MetricsAccumulator> setting;
  std::map<int, MetricsAccumulator> obstacles;
  std::map<int, MetricsAccumulator> length;
  for (const ScoredRecord& s : scored) {
    const TaskInstance& t = s.record->instance;
    overall.add(s.result);
    split[std::string(to_string(t.split))].add(s.result);
    setting[std::string(to_string(t.setting))].add(s.result);
    obstacles[static_cast<int>(t.env.obstacles().size())].add(s.result);
    length[gold_length(*s.record).value_or(-1)].add(s.result);
  }
  RunReport r;
  r.config = std::move(config);
  r.overall = overall.report();
  for (const auto& [k, a] : split) r.by_split[k] = a.report();
  for (const auto& [k, a] : setting) r.by_setting[k] = a.report();
  for (const auto& [k, a] : obstacles) r.by_obstacles[k] = a.report();
  for (const auto& [k, a] : length) r.by_path_length[k] = a.report();
  return r;
}

namespace {

template <typename F>
void parallel_for(std::size_t n, int jobs, F body) {
  const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<ScoredRecord> evaluate_agent(std::span<const DatasetRecord> records, Agent& agent,
                                         const EvalSettings& settings) {
  std::vector<ScoredRecord> out(records.size());
  parallel_for(records.size(), settings.jobs, [&](std::size_t i) {
    const DatasetRecord& rec = records[i];
    const TaskInstance& t = rec.instance;
    ScoredRecord& s = out[i];
    s.record = &rec;
    if (settings.interactive) {
      const EpisodeResult ep = run_episode(t, agent, settings.episode);
      s.response = transcript_json(t, ep);
      s.result = ep.metrics;
      s.trials_used = ep.trials_used;
      return;
    }
    AgentRequest req(t);
    req.prompt = build_prompt(settings.prompt, rec.task_text);
    req.egocentric = settings.egocentric;
    s.response = agent.respond(req).text;
    const Prediction p = parse_prediction(extract_answer(s.response), t.multi_goal(), settings.egocentric);
    const auto gold = t.reachable ? gold_plan(t) : std::nullopt;
    s.result = evaluate_prediction(t, gold, p, settings.metrics);
  });
  return out;
}

std::vector<ScoredRecord> evaluate_predictions(std::span<const DatasetRecord> records,
                                               const std::map<std::string, std::string>& predictions,
                                               const EvalSettings& settings) {
  std::vector<ScoredRecord> out(records.size());
  parallel_for(records.size(), settings.jobs, [&](std::size_t i) {
    const DatasetRecord& rec = records[i];
    const TaskInstance& t = rec.instance;
    ScoredRecord& s = out[i];
    s.record = &rec;
    const auto it = predictions.find(t.id);
    const Prediction p = it == predictions.end()
                             ? Prediction{Unparseable{}}
                             : parse_prediction(extract_answer(it->second), t.multi_goal(), settings.egocentric);
    if (it != predictions.end()) s.response = it->second;
    const auto gold = t.reachable ? gold_plan(t) : std::nullopt;
    s.result = evaluate_prediction(t, gold, p, settings.metrics);
  });
  return out;
}

ojson to_json(const MetricsReport& m) {
  ojson j;
  j["success_rate"] = m.success_rate;
  j["optimal_rate"] = m.optimal_rate;
  j["exact_match_rate"] = m.exact_match_rate;
  j["feasible_rate"] = m.feasible_rate;
  j["mean_distance"] = m.mean_distance;
  j["unreachable_accuracy"] = m.unreachable_accuracy;
  j["n_scored"] = m.n_scored;
  j["n_unreachable"] = m.n_unreachable;
  j["n_distance"] = m.n_distance;
  ojson diag = ojson::object();
  for (std::size_t i = 0; i < kDiagnosisCount; ++i)
    if (m.diagnoses[i] > 0) diag[std::string(to_string(static_cast<Diagnosis>(i)))] = m.diagnoses[i];
  j["diagnoses"] = diag;
  return j;
}

ojson to_json(const RunReport& r) {
  ojson j;
  j["config"] = r.config;
  j["overall"] = to_json(r.overall);
  const auto section = [](const auto& rows) {
    ojson s = ojson::object();
    for (const auto& [k, m] : rows) {
      if constexpr (std::is_same_v<std::decay_t<decltype(k)>, int>) {
        s[k < 0 ? std::string("unreachable") : std::to_string(k)] = to_json(m);
      } else {
        s[k] = to_json(m);
      }
    }
    return s;
  };
  j["by_split"] = section(r.by_split);
  j["by_setting"] = section(r.by_setting);
  j["by_obstacles"] = section(r.by_obstacles);
  j["by_path_length"] = section(r.by_path_length);
  return j;
}

std::string format_table(const std::map<std::string, MetricsReport>& rows) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-26s %8s %8s %8s %8s %8s %8s %8s %8s\n", "group", "n", "Success", "Optimal",
                "Exact", "Feasible", "Distance", "Unreach", "n_unr");
  out += buf;
  auto row = [&](const std::string& k, const MetricsReport& m) {
    char dist[16] = "-";
    char unr[16] = "-";
    if (m.n_distance > 0) std::snprintf(dist, sizeof dist, "%.3f", m.mean_distance);
    if (m.n_unreachable > 0) std::snprintf(unr, sizeof unr, "%.3f", m.unreachable_accuracy);
    std::snprintf(buf, sizeof buf, "%-26s %8zu %8.3f %8.3f %8.3f %8.3f %8s %8s %8zu\n", k.c_str(), m.n_scored,
                  m.success_rate, m.optimal_rate, m.exact_match_rate, m.feasible_rate, dist, unr, m.n_unreachable);
    out += buf;
  };
  // "overall" goes last whatever its sort position.
  for (const auto& [k, m] : rows)
    if (k != "overall") row(k, m);
  if (const auto it = rows.find("overall"); it != rows.end()) row(it->first, it->second);
  return out;
}

StatsAxis parse_stats_axis(std::string_view s) {
  if (s == "obstacles") return StatsAxis::Obstacles;
  if (s == "path-length") return StatsAxis::PathLength;
  if (s == "split") return StatsAxis::Split;
  if (s == "setting") return StatsAxis::Setting;
  throw std::invalid_argument("unknown stats axis '" + std::string(s) + "'");
}

std::vector<StatsRow> corpus_stats(std::span<const DatasetRecord> records, StatsAxis axis) {
  struct Acc {
    std::size_t n = 0;
    std::size_t unreachable = 0;
    long long length_sum = 0;
  };
  // Numeric axes sort numerically; unreachable instances get their own row.
  std::map<std::pair<long, std::string>, Acc> groups;
  for (const DatasetRecord& r : records) {
    const TaskInstance& t = r.instance;
    std::pair<long, std::string> key;
    switch (axis) {
      case StatsAxis::Obstacles: key = {static_cast<long>(t.env.obstacles().size()), std::to_string(t.env.obstacles().size())}; break;
      case StatsAxis::PathLength: {
        const auto len = gold_length(r);
        key = len ? std::pair<long, std::string>{*len, std::to_string(*len)} : std::pair<long, std::string>{1L << 30, "unreachable"};
        break;
      }
      case StatsAxis::Split: key = {static_cast<long>(t.split), std::string(to_string(t.split))}; break;
      case StatsAxis::Setting: key = {static_cast<long>(t.setting), std::string(to_string(t.setting))}; break;
    }
    Acc& a = groups[key];
    ++a.n;
    if (!t.reachable) {
      ++a.unreachable;
    } else {
      a.length_sum += gold_length(r).value_or(0);
    }
  }
  std::vector<StatsRow> rows;
  for (const auto& [key, a] : groups) {
    const std::size_t reachable = a.n - a.unreachable;
    rows.push_back({key.second, a.n, a.unreachable,
                    reachable == 0 ? 0.0 : static_cast<double>(a.length_sum) / static_cast<double>(reachable)});
  }
  return rows;
}

std::string format_stats(const std::vector<StatsRow>& rows) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-26s %10s %12s %12s %12s\n", "group", "instances", "unreachable", "unreach_%",
                "mean_gold");
  out += buf;
  std::size_t n = 0;
  std::size_t u = 0;
  for (const StatsRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%-26s %10zu %12zu %12.2f %12.3f\n", r.key.c_str(), r.instances, r.unreachable,
                  r.instances == 0 ? 0.0 : 100.0 * static_cast<double>(r.unreachable) / static_cast<double>(r.instances),
                  r.mean_gold_length);
    out += buf;
    n += r.instances;
    u += r.unreachable;
  }
  std::snprintf(buf, sizeof buf, "%-26s %10zu %12zu\n", "total", n, u);
  out += buf;
  return out;
}

}  // namespace ppnl
