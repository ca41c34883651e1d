// Command-line front end: generate, solve, verbalize, evaluate, episode, stats.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <string>

#include "ppnl/agent.hpp"
#include "ppnl/dataset.hpp"
#include "ppnl/feedback.hpp"
#include "ppnl/pipeline.hpp"
#include "ppnl/planner.hpp"
#include "ppnl/verbalizer.hpp"

namespace {

using namespace ppnl;

struct Common {
  std::string config;
  std::string preset = "paper-default";
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string in;
  std::string split;
  int jobs = 1;
  std::size_t limit = 0;
};

struct StageError : std::runtime_error {
  StageError(const std::string& stage, const std::string& what) : std::runtime_error(stage + ": " + what) {}
};

template <typename F>
auto stage(const char* name, F f) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

void add_common(CLI::App* cmd, Common& c, bool with_out) {
  cmd->add_option("--config", c.config, "JSON run configuration");
  cmd->add_option("--preset", c.preset, "paper-default or desk")->check(CLI::IsMember({"paper-default", "desk"}));
  cmd->add_option("--seed", c.seed, "master seed");
  cmd->add_option("--in", c.in, "read instances from this JSONL corpus instead of generating");
  cmd->add_option("--split", c.split, "only use this split");
  cmd->add_option("--limit", c.limit, "only use the first N instances (0 = all)");
  if (with_out) cmd->add_option("--out", c.out, "output path");
}

RunConfig run_config(const Common& c) {
  RunConfig cfg = c.config.empty() ? preset_config(c.preset) : load_run_config(c.config);
  if (c.seed) {
    cfg.seed = *c.seed;
    for (GenConfig& g : cfg.generators) g.master_seed = *c.seed;
  }
  return cfg;
}

std::vector<DatasetRecord> load_records(const Common& c, bool revalidate = true) {
  std::vector<DatasetRecord> records;
  if (!c.in.empty()) {
    records = stage("read", [&] { return read_jsonl(c.in, ReadOptions{revalidate}); });
  } else {
    const RunConfig cfg = stage("config", [&] { return run_config(c); });
    records = stage("generate", [&] { return generate_records(cfg); });
  }
  if (!c.split.empty()) {
    const Split want = stage("config", [&] { return parse_split(c.split); });
    std::erase_if(records, [&](const DatasetRecord& r) { return r.instance.split != want; });
  }
  if (c.limit > 0 && records.size() > c.limit) records.erase(records.begin() + static_cast<std::ptrdiff_t>(c.limit), records.end());
  return records;
}

std::ostream& output(const Common& c, std::ofstream& file) {
  if (c.out.empty() || c.out == "-") return std::cout;
  file.open(c.out, std::ios::binary);
  if (!file) throw StageError("write", "cannot open " + c.out);
  return file;
}

std::map<std::string, MetricsReport> with_overall(const std::map<std::string, MetricsReport>& rows,
                                                  const MetricsReport& overall) {
  auto out = rows;
  out["overall"] = overall;
  return out;
}

template <typename K>
std::map<std::string, MetricsReport> keyed(const std::map<K, MetricsReport>& rows) {
  std::map<std::string, MetricsReport> out;
  for (const auto& [k, m] : rows) {
    if constexpr (std::is_same_v<K, int>) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "%03d", k);
      out[k < 0 ? std::string("unreachable") : std::string(buf)] = m;
    } else {
      out[k] = m;
    }
  }
  return out;
}

std::map<std::string, std::string> read_predictions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("id") || !j.contains("prediction") ||
        !j["id"].is_string() || !j["prediction"].is_string())
      throw std::runtime_error("line " + std::to_string(n) + ": expected {\"id\": ..., \"prediction\": ...}");
    out[j["id"].get<std::string>()] = j["prediction"].get<std::string>();
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid path-planning benchmark toolkit"};
  app.require_subcommand(1);

  Common c;

  auto* gen = app.add_subcommand("generate", "generate, solve and verbalize the corpus as JSONL");
  add_common(gen, c, true);

  auto* solve = app.add_subcommand("solve", "print gold plans");
  add_common(solve, c, true);
  std::string task_text;
  solve->add_option("--task", task_text, "solve one task given as text");

  auto* verb = app.add_subcommand("verbalize", "print task texts");
  add_common(verb, c, true);
  std::string only_id;
  verb->add_option("--id", only_id, "only this instance");

  std::string agent_kind;
  std::string predictions_path;
  std::string method = "naive";
  std::optional<int> shots;
  bool egocentric = false;
  bool legacy = false;
  std::string report_path;

  auto* eval = app.add_subcommand("evaluate", "score an agent or a predictions file");
  add_common(eval, c, false);
  auto* agent_opt = eval->add_option("--agent", agent_kind, "oracle, greedy, random or llm");
  auto* pred_opt = eval->add_option("--predictions", predictions_path, "JSONL of {id, prediction}");
  agent_opt->excludes(pred_opt);
  eval->add_option("--method", method, "naive, action_effect, cot, react");
  eval->add_option("--shots", shots, "exemplar count");
  eval->add_flag("--egocentric", egocentric, "turn/forward action space (single-goal)");
  eval->add_flag("--legacy-distance", legacy, "sum-of-distances metric with infeasible penalty");
  eval->add_option("--report", report_path, "write the JSON report here");
  eval->add_option("--jobs", c.jobs, "worker threads");
  eval->add_option("--out", c.out, "write per-instance results (JSONL)");

  auto* epi = app.add_subcommand("episode", "run interactive episodes");
  add_common(epi, c, false);
  epi->add_option("--agent", agent_kind, "oracle, greedy, random or llm")->required();
  int max_trials = 3;
  bool optimal_ordering = false;
  epi->add_option("--max-trials", max_trials, "trial budget per leg")->check(CLI::PositiveNumber);
  epi->add_flag("--optimal-ordering", optimal_ordering, "ask for an optimal visit order");
  epi->add_option("--report", report_path, "write the JSON report here");
  epi->add_option("--jobs", c.jobs, "worker threads");
  epi->add_option("--out", c.out, "write transcripts (JSONL)");

  auto* stats = app.add_subcommand("stats", "corpus or evaluation breakdowns");
  add_common(stats, c, false);
  std::string axis = "split";
  stats->add_option("--by", axis, "obstacles, path-length, split or setting")
      ->check(CLI::IsMember({"obstacles", "path-length", "split", "setting"}));
  stats->add_option("--agent", agent_kind, "also evaluate this agent along the axis");

  CLI11_PARSE(app, argc, argv);

  try {
    const std::uint64_t seed = c.seed.value_or(kDefaultSeed);

    if (gen->parsed()) {
      const auto records = load_records(c);
      if (c.out.empty()) c.out = "corpus.jsonl";
      std::ofstream file;
      std::ostream& out = output(c, file);
      stage("write", [&] {
        write_jsonl(out, records);
        return 0;
      });
      std::cerr << format_stats(corpus_stats(records, StatsAxis::Split));
      return 0;
    }

    if (solve->parsed()) {
      if (!task_text.empty()) {
        const ParsedTask p = stage("parse", [&] { return parse_task_text(task_text); });
        TaskInstance t{"task", Environment(p.grid_size, p.obstacles), p.start, p.goals, p.constraint,
                       p.multi_goal ? (p.constraint ? Setting::MultiConstrained : Setting::MultiUnconstrained)
                                    : Setting::Single,
                       Split::Train, true};
        stage("validate", [&] {
          t.validate();
          return 0;
        });
        const auto plan = gold_plan(t);
        std::cout << (plan ? serialize_plan(plan->actions) : std::string(kUnreachableText)) << '\n';
        return 0;
      }
      const auto records = load_records(c, false);
      std::ofstream file;
      std::ostream& out = output(c, file);
      for (const DatasetRecord& r : records) {
        const DatasetRecord solved = make_record(r.instance);
        out << r.instance.id << '\t' << solved.gold_plan << '\n';
      }
      return 0;
    }

    if (verb->parsed()) {
      const auto records = load_records(c, false);
      std::ofstream file;
      std::ostream& out = output(c, file);
      for (const DatasetRecord& r : records) {
        if (!only_id.empty() && r.instance.id != only_id) continue;
        out << r.instance.id << '\t' << verbalize_task(r.instance) << '\n';
      }
      return 0;
    }

    if (eval->parsed() || epi->parsed() || (stats->parsed() && !agent_kind.empty())) {
      const auto records = load_records(c);
      EvalSettings settings;
      settings.prompt.method = stage("config", [&] { return parse_method(method); });
      settings.prompt.shots = shots;
      settings.egocentric = egocentric;
      settings.metrics.legacy_distance = legacy;
      settings.jobs = c.jobs;
      settings.interactive = epi->parsed();
      settings.episode.max_trials = max_trials;
      settings.episode.optimal_ordering_prompt = optimal_ordering;

      std::vector<ScoredRecord> scored;
      std::string who;
      if (!predictions_path.empty()) {
        const auto preds = stage("read", [&] { return read_predictions(predictions_path); });
        scored = stage("evaluate", [&] { return evaluate_predictions(records, preds, settings); });
        who = predictions_path;
      } else {
        if (agent_kind.empty()) throw StageError("config", "give --agent or --predictions");
        auto agent = stage("agent", [&] { return make_agent(agent_kind, seed); });
        scored = stage(settings.interactive ? "episode" : "evaluate",
                       [&] { return evaluate_agent(records, *agent, settings); });
        who = agent->name();
      }

      nlohmann::ordered_json echo;
      echo["agent"] = who;
      echo["method"] = settings.interactive ? "react" : std::string(to_string(settings.prompt.method));
      echo["split"] = c.split.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(c.split);
      echo["instances"] = records.size();
      if (c.in.empty()) echo["run"] = to_json(run_config(c));
      else echo["corpus"] = c.in;
      const RunReport report = build_report(scored, echo);

      if (stats->parsed()) {
        switch (parse_stats_axis(axis)) {
          case StatsAxis::Obstacles: std::cout << format_table(keyed(report.by_obstacles)); break;
          case StatsAxis::PathLength: std::cout << format_table(keyed(report.by_path_length)); break;
          case StatsAxis::Split: std::cout << format_table(with_overall(report.by_split, report.overall)); break;
          case StatsAxis::Setting: std::cout << format_table(with_overall(report.by_setting, report.overall)); break;
        }
        return 0;
      }

      std::cout << format_table(with_overall(report.by_split, report.overall));
      if (settings.interactive) {
        double trials = 0;
        for (const ScoredRecord& s : scored) trials += s.trials_used;
        std::cout << "mean trials used: " << (scored.empty() ? 0.0 : trials / static_cast<double>(scored.size()))
                  << '\n';
      }
      if (!report_path.empty()) {
        std::ofstream rep(report_path);
        if (!rep) throw StageError("write", "cannot open " + report_path);
        rep << to_json(report).dump(2) << '\n';
      }
      if (!c.out.empty()) {
        std::ofstream file;
        std::ostream& out = output(c, file);
        for (const ScoredRecord& s : scored) {
          if (settings.interactive) {
            out << s.response << '\n';
            continue;
          }
          nlohmann::ordered_json j;
          j["id"] = s.record->instance.id;
          j["response"] = s.response;
          j["success"] = s.result.success;
          j["optimal"] = s.result.optimal;
          j["exact_match"] = s.result.exact_match;
          j["feasible"] = s.result.feasible;
          j["distance"] = s.result.distance ? nlohmann::ordered_json(*s.result.distance) : nlohmann::ordered_json(nullptr);
          j["unreachable_correct"] = s.result.unreachable_correct ? nlohmann::ordered_json(*s.result.unreachable_correct)
                                                                  : nlohmann::ordered_json(nullptr);
          j["diagnosis"] = std::string(to_string(s.result.diagnosis));
          out << j.dump() << '\n';
        }
      }
      return 0;
    }

    if (stats->parsed()) {
      const auto records = load_records(c);
      std::cout << format_stats(corpus_stats(records, parse_stats_axis(axis)));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
