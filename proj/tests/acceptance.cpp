// End-to-end acceptance checks, one line per criterion.
//
//   acceptance [--known-deviation N]...
//
// Exits nonzero when a criterion fails that was not listed as a known
// deviation. Known deviations still print FAIL.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "ppnl/agent.hpp"
#include "ppnl/dataset.hpp"
#include "ppnl/envgen.hpp"
#include "ppnl/feedback.hpp"
#include "ppnl/pipeline.hpp"
#include "ppnl/planner.hpp"
#include "ppnl/prompts.hpp"
#include "ppnl/verbalizer.hpp"

using namespace ppnl;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Environment random_env(Stream& rng, int n, int k) {
  std::vector<Coordinate> cells;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) cells.push_back({r, c});
  rng.partial_shuffle(std::span(cells), static_cast<std::size_t>(k));
  return Environment(n, {cells.begin(), cells.begin() + k});
}

std::vector<Coordinate> free_cells(const Environment& e) {
  std::vector<Coordinate> out;
  for (std::size_t i = 0; i < e.cell_count(); ++i)
    if (e.is_free(e.cell(i))) out.push_back(e.cell(i));
  return out;
}

// Shared by several criteria.
struct Fixture {
  Corpus corpus;
  double corpus_seconds = 0;
  std::vector<DatasetRecord> desk;
};

Outcome corpus_counts(const Fixture& f) {
  std::map<std::string, std::map<int, int>> envs;  // family -> k -> count
  for (const auto& e : f.corpus.environments) ++envs[e.id.substr(0, e.id.find('-'))][e.obstacle_count];
  int id_envs = 0;
  for (const auto& [k, n] : envs["id6"]) id_envs += n;
  const bool env_ok =
      id_envs == 836 && envs["id6"] == std::map<int, int>{{1, 36}, {2, 200}, {3, 200}, {4, 200}, {5, 200}};

  std::map<std::pair<Setting, bool>, int> by;  // (setting, ood)
  std::map<Split, int> single_split;
  for (const auto& t : f.corpus.instances) {
    const bool ood = t.split == Split::Ood5x5 || t.split == Split::Ood7x7 || t.split == Split::OodObstacles;
    ++by[{t.setting, ood}];
    if (t.setting == Setting::Single) ++single_split[t.split];
  }
  const int single = by[{Setting::Single, false}];
  const int mu = by[{Setting::MultiUnconstrained, false}];
  const int mc = by[{Setting::MultiConstrained, false}];
  const int ood_single = by[{Setting::Single, true}];
  const int ood_multi = by[{Setting::MultiUnconstrained, true}] + by[{Setting::MultiConstrained, true}];
  const bool inst_ok = single == 25080 && mu == 41800 && mc == 41800 && ood_single == 12000 && ood_multi == 40000;
  const bool split_ok = single_split[Split::Train] == 16032 && single_split[Split::Dev] == 2004 &&
                        single_split[Split::TestUnseenPlacement] == 2004 &&
                        single_split[Split::TestUnseenEnvironment] == 5040;
  const bool fast = f.corpus_seconds < 180;
  return {env_ok && inst_ok && split_ok && fast,
          fmt("envs=%d single=%d multi=%d/%d ood=%d+%d splits=%d/%d/%d/%d in %.1fs", id_envs, single, mu, mc,
              ood_single, ood_multi, single_split[Split::Train], single_split[Split::Dev],
              single_split[Split::TestUnseenPlacement], single_split[Split::TestUnseenEnvironment], f.corpus_seconds)};
}

Outcome solver_exactness() {
  Stream rng(kDefaultSeed, "acceptance-solver");
  int astar_bad = 0, astar_n = 0;
  for (; astar_n < 1000; ++astar_n) {
    const Environment e = random_env(rng, 6, static_cast<int>(rng.below(12)));
    const auto cells = free_cells(e);
    const Coordinate s = cells[rng.below(cells.size())], g = cells[rng.below(cells.size())];
    const auto p = astar_shortest_path(e, s, g);
    if ((p ? p->move_count : -1) != oracle::bfs_distance(e, s, g)) ++astar_bad;
  }

  int tsp_bad = 0, tsp_n = 0;
  for (; tsp_n < 1000; ++tsp_n) {
    const Environment e = random_env(rng, 6, static_cast<int>(rng.below(8)));
    auto cells = free_cells(e);
    const std::size_t l = 2 + rng.below(5);
    rng.partial_shuffle(std::span(cells), l + 1);
    const std::vector<Coordinate> goals(cells.begin() + 1, cells.begin() + 1 + static_cast<long>(l));
    std::optional<OrderingConstraint> con;
    if (rng.below(2) == 1) con = sample_constraint(l, rng);
    std::vector<Coordinate> pts{cells[0]};
    pts.insert(pts.end(), goals.begin(), goals.end());
    std::vector<std::vector<int>> d(l + 1, std::vector<int>(l + 1));
    for (std::size_t a = 0; a <= l; ++a)
      for (std::size_t b = 0; b <= l; ++b) d[a][b] = oracle::bfs_distance(e, pts[a], pts[b]);
    const auto want = oracle::brute_force_tour(d, con);
    const auto got = solve_visit_order(pairwise_distances(e, cells[0], goals), con);
    if (got.has_value() != want.has_value() || (got && got->total_cost != *want)) ++tsp_bad;
  }

  long pairs = 0;
  int grid_bad = 0;
  auto run = [&](std::vector<Coordinate> obs) {
    const Environment e(5, std::move(obs));
    const auto cells = free_cells(e);
    for (const Coordinate s : cells)
      for (const Coordinate g : cells) {
        const auto p = astar_shortest_path(e, s, g);
        if ((p ? p->move_count : -1) != oracle::bfs_distance(e, s, g)) ++grid_bad;
        ++pairs;
      }
  };
  auto at = [](int i) { return Coordinate{i / 5, i % 5}; };
  run({});
  for (int a = 0; a < 25; ++a) {
    run({at(a)});
    for (int b = a + 1; b < 25; ++b) {
      run({at(a), at(b)});
      for (int c = b + 1; c < 25; ++c) run({at(a), at(b), at(c)});
    }
  }
  return {astar_bad == 0 && tsp_bad == 0 && grid_bad == 0,
          fmt("astar %d/%d mismatches, tsp %d/%d mismatches, exhaustive 5x5 %d/%ld mismatches", astar_bad, astar_n,
              tsp_bad, tsp_n, grid_bad, pairs)};
}

Outcome gold_consistency(const Fixture& f) {
  // Persist, reload, then score every stored gold plan against its instance.
  std::stringstream file;
  write_jsonl(file, make_records(f.corpus.instances));
  ReadOptions opts;
  opts.revalidate_gold = false;
  const auto records = read_jsonl(file, opts);
  MetricsAccumulator acc;
  for (const DatasetRecord& r : records) {
    const auto gold = r.instance.reachable ? gold_plan(r.instance) : std::nullopt;
    acc.add(evaluate_prediction(r.instance, gold, parse_prediction(r.gold_plan, r.instance.multi_goal(), false)));
  }
  const MetricsReport m = acc.report();
  const bool ok = m.success_rate == 1.0 && m.optimal_rate == 1.0 && m.exact_match_rate == 1.0 &&
                  m.feasible_rate == 1.0 && m.unreachable_accuracy == 1.0 && records.size() == 160680;
  return {ok, fmt("%zu records: success=%.3f optimal=%.3f exact=%.3f feasible=%.3f unreachable_acc=%.3f (n=%zu)",
                  records.size(), m.success_rate, m.optimal_rate, m.exact_match_rate, m.feasible_rate,
                  m.unreachable_accuracy, m.n_unreachable)};
}

Outcome harness_soundness(const Fixture& f) {
  OracleAgent oracle;
  std::size_t reachable = 0, bad = 0;
  for (const DatasetRecord& r : f.desk) {
    if (!r.instance.reachable) continue;
    ++reachable;
    const auto ep = run_episode(r.instance, oracle);
    if (!ep.success || ep.trials_used != 1 || !ep.metrics.success) ++bad;
  }
  std::size_t stuck_bad = 0, stuck_n = 0;
  for (const DatasetRecord& r : f.desk) {
    if (r.instance.multi_goal() || !r.instance.reachable || stuck_n >= 200) continue;
    // Walk vertically away from the goal until the boundary stops it, every
    // trial. Episode success is judged on the final cell, so the walk must
    // never pass over the goal.
    const bool goal_above = r.instance.goals[0].row <= r.instance.start.row;
    std::string text;
    for (int i = 0; i <= r.instance.env.grid_size(); ++i) text += goal_above ? "down " : "up ";
    ScriptedAgent stuck({text});
    const auto ep = run_episode(r.instance, stuck);
    ++stuck_n;
    if (ep.success || ep.trials_used != 3 || stuck.calls() != 3) ++stuck_bad;
  }
  return {bad == 0 && stuck_bad == 0 && reachable > 0,
          fmt("oracle: %zu/%zu reachable desk episodes solved in one trial; repeating agent: %zu/%zu used 3 trials "
              "and failed",
              reachable - bad, reachable, stuck_n - stuck_bad, stuck_n)};
}

Outcome metric_ordering(const Fixture& f) {
  std::size_t reports = 0, violations = 0;
  auto check = [&](const MetricsReport& m) {
    ++reports;
    if (!(m.exact_match_rate <= m.optimal_rate && m.optimal_rate <= m.success_rate &&
          m.success_rate <= m.feasible_rate))
      ++violations;
  };
  OracleAgent oracle;
  GreedyAgent greedy;
  RandomAgent random(kDefaultSeed);
  for (Agent* a : std::initializer_list<Agent*>{&oracle, &greedy, &random}) {
    for (const bool interactive : {false, true}) {
      EvalSettings s;
      s.interactive = interactive;
      const RunReport r = build_report(evaluate_agent(f.desk, *a, s));
      check(r.overall);
      for (const auto& [k, m] : r.by_split) check(m);
      for (const auto& [k, m] : r.by_setting) check(m);
      for (const auto& [k, m] : r.by_obstacles) check(m);
      for (const auto& [k, m] : r.by_path_length) check(m);
    }
  }
  return {violations == 0, fmt("%zu group reports, %zu violations", reports, violations)};
}

Outcome prompt_fidelity() {
  struct Case {
    const char* file;
    Method method;
    std::optional<int> shots;
    bool optimal;
  };
  const Case cases[] = {{"naive-5", Method::Naive, 5, false},      {"naive-10", Method::Naive, 10, false},
                        {"naive-15", Method::Naive, 15, false},    {"action_effect", Method::ActionEffect, {}, false},
                        {"cot", Method::Cot, {}, false},           {"react", Method::React, {}, false},
                        {"ordering", Method::Ordering, {}, false}, {"ordering-optimal", Method::Ordering, {}, true}};
  int ok = 0;
  std::string bad;
  for (const Case& c : cases) {
    std::ifstream in(std::string(PPNL_GOLDEN_DIR) + "/" + c.file + ".txt", std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    PromptSpec spec;
    spec.method = c.method;
    spec.shots = c.shots;
    spec.optimality_variant = c.optimal;
    if (in && render_exemplars(spec) == ss.str()) ++ok;
    else bad += std::string(" ") + c.file;
  }
  return {ok == 8, fmt("%d/8 fixtures byte-identical%s", ok, bad.c_str())};
}

Outcome unreachable_fraction(const Fixture& f) {
  std::size_t n = 0, unreachable = 0;
  for (const auto& t : f.corpus.instances) {
    if (t.split != Split::OodObstacles || t.setting != Setting::Single) continue;
    ++n;
    unreachable += t.reachable ? 0 : 1;
  }
  const double pct = 100.0 * static_cast<double>(unreachable) / static_cast<double>(n);
  return {std::abs(pct - 15.37) <= 5.0,
          fmt("%zu/%zu = %.2f%% unreachable (target 15.37 +/- 5)", unreachable, n, pct)};
}

Outcome substituted_properties(const Fixture& f) {
  EvalSettings s;
  OracleAgent oracle;
  GreedyAgent greedy;
  RandomAgent random(kDefaultSeed);
  const double so = build_report(evaluate_agent(f.desk, oracle, s)).overall.success_rate;
  const double sg = build_report(evaluate_agent(f.desk, greedy, s)).overall.success_rate;
  const double sr = build_report(evaluate_agent(f.desk, random, s)).overall.success_rate;

  Stream rng(kDefaultSeed, "acceptance-ego");
  int ego_bad = 0;
  for (int i = 0; i < 10000; ++i) {
    std::vector<Action> a(rng.below(25));
    for (auto& x : a) x = static_cast<Action>(rng.below(4));
    if (from_egocentric(to_egocentric(a)) != a) ++ego_bad;
  }

  std::size_t parse_bad = 0;
  for (const TaskInstance& t : f.corpus.instances) {
    try {
      const ParsedTask p = parse_task_text(verbalize_task(t));
      if (p.grid_size != t.env.grid_size() || p.obstacles != t.env.obstacles() || p.start != t.start ||
          p.goals != t.goals || p.constraint != t.constraint || p.multi_goal != t.multi_goal())
        ++parse_bad;
    } catch (const std::exception&) {
      ++parse_bad;
    }
  }
  return {sr < sg && sg < so && ego_bad == 0 && parse_bad == 0,
          fmt("success random=%.3f < greedy=%.3f < oracle=%.3f; ego round trip %d/10000 bad; verbalizer round trip "
              "%zu/%zu bad",
              sr, sg, so, ego_bad, parse_bad, f.corpus.instances.size())};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--known-deviation" && i + 1 < argc) {
      known.insert(std::stoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--known-deviation N]...\n", argv[0]);
      return 2;
    }
  }

  Fixture f;
  const auto t0 = std::chrono::steady_clock::now();
  f.corpus = build_corpus(paper_default_configs());
  f.corpus_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  f.desk = generate_records(preset_config("desk"));

  const std::pair<int, std::function<Outcome()>> checks[] = {
      {1, [&] { return corpus_counts(f); }},
      {2, [] { return solver_exactness(); }},
      {3, [&] { return gold_consistency(f); }},
      {4, [&] { return harness_soundness(f); }},
      {5, [&] { return metric_ordering(f); }},
      {6, [] { return prompt_fidelity(); }},
      {7, [&] { return unreachable_fraction(f); }},
      {8, [&] { return substituted_properties(f); }},
  };

  int unexpected = 0;
  for (const auto& [id, run] : checks) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const bool excused = !o.pass && known.count(id) > 0;
    if (!o.pass && !excused) ++unexpected;
    std::printf("criterion %d: %s - %s%s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                excused ? " [known deviation]" : "");
    std::fflush(stdout);
  }
  return unexpected == 0 ? 0 : 1;
}
