#include "ppnl/metrics.hpp"

#include <algorithm>
#include <array>

namespace ppnl {

std::string_view to_string(Diagnosis d) {
  static constexpr std::array<std::string_view, kDiagnosisCount> names = {
      "ok",           "not_exact",   "not_optimal",       "goal_not_reached",  "out_of_bounds",
      "hit_obstacle", "unparseable", "false_unreachable", "missed_unreachable"};
  return names.at(static_cast<std::size_t>(d));
}

std::vector<bool> visited_goals(const ExecutionTrace& trace, std::size_t goal_count,
                                const std::optional<OrderingConstraint>& constraint) {
  std::vector<bool> visited(goal_count, false);
  const std::vector<std::uint32_t> preds =
      constraint ? constraint->predecessor_masks(goal_count) : std::vector<std::uint32_t>(goal_count, 0);
  std::uint32_t done = 0;
  for (const Inspection& ins : trace.inspected) {
    if (!ins.goal) continue;
    const std::size_t g = *ins.goal;
    if ((preds[g] & ~done) != 0) continue;
    visited[g] = true;
    done |= 1u << g;
  }
  return visited;
}

namespace {

std::optional<int> shortest_moves(const Environment& env, Coordinate from, Coordinate to) {
  const auto plan = astar_shortest_path(env, from, to);
  if (!plan) return std::nullopt;
  return plan->move_count;
}

InstanceResult score_unreachable(const Prediction& prediction) {
  InstanceResult r;
  r.reachable = false;
  r.unreachable_correct = std::holds_alternative<UnreachableDeclared>(prediction);
  if (*r.unreachable_correct) {
    r.diagnosis = Diagnosis::Ok;
  } else if (std::holds_alternative<Unparseable>(prediction)) {
    r.diagnosis = Diagnosis::Unparseable;
  } else {
    r.diagnosis = Diagnosis::MissedUnreachable;
  }
  return r;
}

std::optional<int> remaining_distance(const TaskInstance& instance, Coordinate from, const std::vector<bool>& visited,
                                      const EvalOptions& options) {
  if (!instance.multi_goal()) return shortest_moves(instance.env, from, instance.goals.front());
  if (!options.legacy_distance) return remaining_task_cost(instance.env, from, instance.goals, visited, instance.constraint);
  int sum = 0;
  for (std::size_t g = 0; g < instance.goals.size(); ++g) {
    if (visited[g]) continue;
    const auto d = shortest_moves(instance.env, from, instance.goals[g]);
    if (!d) return std::nullopt;
    sum += *d;
  }
  return sum;
}

}  // namespace

InstanceResult evaluate_prediction(const TaskInstance& instance, const std::optional<Plan>& gold,
                                   const Prediction& prediction, const EvalOptions& options) {
  if (!instance.reachable || !gold) return score_unreachable(prediction);

  InstanceResult r;
  if (std::holds_alternative<Unparseable>(prediction)) {
    r.diagnosis = Diagnosis::Unparseable;
    return r;
  }
  if (std::holds_alternative<UnreachableDeclared>(prediction)) {
    r.diagnosis = Diagnosis::FalseUnreachable;
    return r;
  }

  const auto* ego = std::get_if<std::vector<EgoAction>>(&prediction);
  const std::vector<Action> actions = ego ? from_egocentric(*ego) : std::get<std::vector<Action>>(prediction);

  const ExecutionTrace trace = execute_plan(instance.env, instance.start, actions, instance.goals);
  if (!trace.feasible()) {
    r.diagnosis = trace.failure->kind == ExecutionFailure::Kind::OutOfBounds ? Diagnosis::OutOfBounds
                                                                             : Diagnosis::HitObstacle;
    if (options.legacy_distance) r.distance = kLegacyInfeasibleDistance;
    return r;
  }
  r.feasible = true;

  std::vector<bool> visited;
  if (instance.multi_goal()) {
    visited = visited_goals(trace, instance.goals.size(), instance.constraint);
    r.success = std::all_of(visited.begin(), visited.end(), [](bool v) { return v; });
  } else {
    r.success = trace.final == instance.goals.front();
  }
  if (!r.success) {
    r.distance = remaining_distance(instance, trace.final, visited, options);
    r.diagnosis = Diagnosis::GoalNotReached;
    return r;
  }

  if (ego) {
    const auto forwards = std::count(ego->begin(), ego->end(), EgoAction::Forward);
    r.optimal = forwards == gold->move_count;
    r.exact_match = r.optimal && *ego == to_egocentric(gold->actions);
  } else {
    r.optimal = actions.size() == gold->actions.size();
    r.exact_match = r.optimal && actions == gold->actions;
  }
  r.diagnosis = r.exact_match ? Diagnosis::Ok : r.optimal ? Diagnosis::NotExact : Diagnosis::NotOptimal;
  return r;
}

void MetricsAccumulator::add(const InstanceResult& r) {
  ++diagnoses_[static_cast<std::size_t>(r.diagnosis)];
  if (!r.reachable) {
    ++unreachable_;
    if (r.unreachable_correct.value_or(false)) ++unreachable_correct_;
    return;
  }
  ++scored_;
  success_ += r.success ? 1 : 0;
  optimal_ += r.optimal ? 1 : 0;
  exact_ += r.exact_match ? 1 : 0;
  feasible_ += r.feasible ? 1 : 0;
  if (r.distance) {
    ++n_distance_;
    distance_sum_ += *r.distance;
  }
}

void MetricsAccumulator::merge(const MetricsAccumulator& o) {
  scored_ += o.scored_;
  success_ += o.success_;
  optimal_ += o.optimal_;
  exact_ += o.exact_;
  feasible_ += o.feasible_;
  n_distance_ += o.n_distance_;
  distance_sum_ += o.distance_sum_;
  unreachable_ += o.unreachable_;
  unreachable_correct_ += o.unreachable_correct_;
  for (std::size_t i = 0; i < kDiagnosisCount; ++i) diagnoses_[i] += o.diagnoses_[i];
}

MetricsReport MetricsAccumulator::report() const {
  const auto rate = [](std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  MetricsReport m;
  m.success_rate = rate(success_, scored_);
  m.optimal_rate = rate(optimal_, scored_);
  m.exact_match_rate = rate(exact_, scored_);
  m.feasible_rate = rate(feasible_, scored_);
  m.mean_distance = n_distance_ == 0 ? 0.0 : static_cast<double>(distance_sum_) / static_cast<double>(n_distance_);
  m.unreachable_accuracy = rate(unreachable_correct_, unreachable_);
  m.n_scored = scored_;
  m.n_unreachable = unreachable_;
  m.n_distance = n_distance_;
  m.diagnoses = diagnoses_;
  return m;
}

MetricsReport aggregate(std::span<const InstanceResult> results) {
  MetricsAccumulator acc;
  for (const InstanceResult& r : results) acc.add(r);
  return acc.report();
}

}  // namespace ppnl
