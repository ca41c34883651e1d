#include <gtest/gtest.h>

#include "ppnl/metrics.hpp"
#include "ppnl/planner.hpp"

using namespace ppnl;

namespace {

TaskInstance single(std::vector<Coordinate> obstacles, Coordinate s, Coordinate g) {
  const Environment env(6, std::move(obstacles));
  const bool reach = reachable_mask(env, s)[env.index(g)] != 0;
  return TaskInstance{"s", env, s, {g}, std::nullopt, Setting::Single, Split::Train, reach};
}

InstanceResult score(const TaskInstance& t, std::string_view text, bool ego = false, bool legacy = false) {
  return evaluate_prediction(t, gold_plan(t), parse_prediction(text, t.multi_goal(), ego), EvalOptions{legacy});
}

const TaskInstance kPaper = single({{2, 1}}, {0, 1}, {3, 4});

}  // namespace

TEST(Evaluate, GoldIsPerfect) {
  const auto gold = gold_plan(kPaper);
  const auto r = score(kPaper, serialize_plan(gold->actions));
  EXPECT_TRUE(r.success && r.optimal && r.exact_match && r.feasible);
  EXPECT_FALSE(r.distance);
  EXPECT_EQ(r.diagnosis, Diagnosis::Ok);
}

TEST(Evaluate, ShortPlanDistance) {
  const auto r = score(kPaper, "right right right down down");
  EXPECT_TRUE(r.feasible);
  EXPECT_FALSE(r.success);
  EXPECT_EQ(r.distance, 1);
  EXPECT_EQ(r.diagnosis, Diagnosis::GoalNotReached);
}

TEST(Evaluate, OptimalButNotExact) {
  const auto gold = gold_plan(kPaper);
  ASSERT_NE(serialize_plan(gold->actions), "right right right down down down");
  const auto r = score(kPaper, "right right right down down down");
  EXPECT_TRUE(r.success && r.optimal && r.feasible);
  EXPECT_FALSE(r.exact_match);
  EXPECT_EQ(r.diagnosis, Diagnosis::NotExact);
}

TEST(Evaluate, SuboptimalSuccess) {
  const auto r = score(kPaper, "right right right right down down down left");
  EXPECT_TRUE(r.success && r.feasible);
  EXPECT_FALSE(r.optimal);
  EXPECT_EQ(r.diagnosis, Diagnosis::NotOptimal);
}

TEST(Evaluate, Infeasible) {
  const auto r = score(kPaper, "down down");
  EXPECT_FALSE(r.feasible || r.success);
  EXPECT_FALSE(r.distance);
  EXPECT_EQ(r.diagnosis, Diagnosis::HitObstacle);
  EXPECT_EQ(score(kPaper, "up").diagnosis, Diagnosis::OutOfBounds);
  EXPECT_EQ(score(kPaper, "up", false, true).distance, kLegacyInfeasibleDistance);
}

TEST(Evaluate, Unparseable) {
  const auto r = score(kPaper, "fly north");
  EXPECT_FALSE(r.feasible);
  EXPECT_EQ(r.diagnosis, Diagnosis::Unparseable);
}

TEST(Evaluate, Unreachable) {
  const TaskInstance t = single({{0, 4}, {1, 5}}, {0, 5}, {3, 3});
  ASSERT_FALSE(t.reachable);
  const auto ok = score(t, "Goal not reachable");
  EXPECT_FALSE(ok.reachable);
  EXPECT_EQ(ok.unreachable_correct, true);
  const auto miss = score(t, "down");
  EXPECT_EQ(miss.unreachable_correct, false);
  EXPECT_EQ(miss.diagnosis, Diagnosis::MissedUnreachable);
  const auto fal = score(kPaper, "Goal not reachable");
  EXPECT_FALSE(fal.success || fal.feasible);
  EXPECT_EQ(fal.diagnosis, Diagnosis::FalseUnreachable);
}

TEST(Evaluate, Egocentric) {
  const auto gold = gold_plan(kPaper);
  const auto ego = serialize_plan(to_egocentric(gold->actions));
  const auto r = score(kPaper, ego, true);
  EXPECT_TRUE(r.success && r.optimal && r.exact_match);
  // Same moves with a redundant full spin: still optimal, not exact.
  const auto spun = score(kPaper, "turn left turn left turn left turn left " + ego, true);
  EXPECT_TRUE(spun.success && spun.optimal);
  EXPECT_FALSE(spun.exact_match);
}

TEST(Evaluate, MultiGoalRequiresInspectInOrder) {
  const Environment env(6, {});
  const TaskInstance t{"m", env, {0, 0}, {{0, 2}, {0, 4}}, OrderingConstraint{{1}, {0}},
                       Setting::MultiConstrained, Split::Train, true};
  // Walks past p0 without inspecting, inspects p1, comes back for p0.
  const auto good = score(t, "right right right right inspect left left inspect");
  EXPECT_TRUE(good.success && good.optimal && good.exact_match);
  // Inspecting p0 first does not count: p1 must precede it.
  const auto early = score(t, "right right inspect right right inspect");
  EXPECT_FALSE(early.success);
  EXPECT_TRUE(early.feasible);
  // Remaining: back to p0 (2 moves) plus one inspect.
  EXPECT_EQ(early.distance, 3);
  // Ends on p0 with nothing inspected: out to p1 and back, two inspects.
  const auto no_inspect = score(t, "right right right right left left");
  EXPECT_FALSE(no_inspect.success);
  EXPECT_EQ(no_inspect.distance, 2 + 2 + 2);
}

TEST(VisitedGoals, PredecessorGate) {
  const Environment env(6, {});
  const std::vector<Coordinate> goals{{0, 1}, {0, 2}};
  const auto plan = std::get<std::vector<Action>>(parse_prediction("right inspect right inspect", true, false));
  const auto tr = execute_plan(env, {0, 0}, plan, goals);
  EXPECT_EQ(visited_goals(tr, 2, std::nullopt), (std::vector<bool>{true, true}));
  EXPECT_EQ(visited_goals(tr, 2, OrderingConstraint{{1}, {0}}), (std::vector<bool>{false, true}));
}

TEST(Aggregate, HandBuiltTen) {
  auto mk = [](bool s, bool o, bool e, bool f, std::optional<int> d) {
    InstanceResult r;
    r.success = s;
    r.optimal = o;
    r.exact_match = e;
    r.feasible = f;
    r.distance = d;
    return r;
  };
  std::vector<InstanceResult> rs{
      mk(true, true, true, true, {}),  mk(true, true, true, true, {}),   mk(true, true, false, true, {}),
      mk(true, false, false, true, {}), mk(false, false, false, true, 2), mk(false, false, false, true, 4),
      mk(false, false, false, false, {}), mk(false, false, false, false, {})};
  InstanceResult u1;
  u1.reachable = false;
  u1.unreachable_correct = true;
  InstanceResult u2 = u1;
  u2.unreachable_correct = false;
  rs.push_back(u1);
  rs.push_back(u2);

  const MetricsReport m = aggregate(rs);
  EXPECT_EQ(m.n_scored, 8u);
  EXPECT_EQ(m.n_unreachable, 2u);
  EXPECT_DOUBLE_EQ(m.success_rate, 4.0 / 8);
  EXPECT_DOUBLE_EQ(m.optimal_rate, 3.0 / 8);
  EXPECT_DOUBLE_EQ(m.exact_match_rate, 2.0 / 8);
  EXPECT_DOUBLE_EQ(m.feasible_rate, 6.0 / 8);
  EXPECT_DOUBLE_EQ(m.mean_distance, 3.0);
  EXPECT_EQ(m.n_distance, 2u);
  EXPECT_DOUBLE_EQ(m.unreachable_accuracy, 0.5);

  MetricsAccumulator a, b;
  for (std::size_t i = 0; i < rs.size(); ++i) (i % 2 ? a : b).add(rs[i]);
  a.merge(b);
  const MetricsReport merged = a.report();
  EXPECT_DOUBLE_EQ(merged.success_rate, m.success_rate);
  EXPECT_DOUBLE_EQ(merged.mean_distance, m.mean_distance);
  EXPECT_EQ(a.size(), 10u);
}

TEST(Aggregate, EmptyIsZero) {
  const MetricsReport m = aggregate({});
  EXPECT_EQ(m.n_scored, 0u);
  EXPECT_EQ(m.success_rate, 0.0);
}
