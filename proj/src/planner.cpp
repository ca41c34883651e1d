#include "ppnl/planner.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace ppnl {

std::vector<Coordinate> GridGraph::neighbors(Coordinate c) const {
  std::vector<Coordinate> out;
  out.reserve(4);
  for (const Action a : kExpansionOrder) {
    const Coordinate n = step(c, a);
    if (env_->is_free(n)) out.push_back(n);
  }
  return out;
}

bool GridGraph::adjacent(Coordinate a, Coordinate b) const {
  return env_->is_free(a) && env_->is_free(b) && manhattan(a, b) == 1;
}

GridGraph build_graph(const Environment& env) { return GridGraph(env); }

std::vector<std::uint8_t> reachable_mask(const Environment& env, Coordinate start) {
  std::vector<std::uint8_t> seen(env.cell_count(), 0);
  if (!env.is_free(start)) return seen;
  std::deque<Coordinate> frontier{start};
  seen[env.index(start)] = 1;
  while (!frontier.empty()) {
    const Coordinate c = frontier.front();
    frontier.pop_front();
    for (const Action a : kExpansionOrder) {
      const Coordinate n = step(c, a);
      if (!env.is_free(n) || seen[env.index(n)] != 0) continue;
      seen[env.index(n)] = 1;
      frontier.push_back(n);
    }
  }
  return seen;
}

std::vector<Coordinate> reachable_set(const Environment& env, Coordinate start) {
  const auto mask = reachable_mask(env, start);
  std::vector<Coordinate> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i] != 0) out.push_back(env.cell(i));
  return out;
}

std::optional<Plan> astar_shortest_path(const Environment& env, Coordinate start, Coordinate goal,
                                        const AstarObserver& observer) {
  if (!env.is_free(start) || !env.is_free(goal)) return std::nullopt;

  const std::size_t cells = env.cell_count();
  std::vector<int> cost(cells, kInfinity);
  std::vector<std::uint8_t> closed(cells, 0);
  std::vector<std::int8_t> via(cells, -1);  // index into kExpansionOrder

  // (f, insertion sequence, cell index): equal f pops in FIFO order.
  using Entry = std::tuple<int, std::uint64_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  std::uint64_t sequence = 0;

  cost[env.index(start)] = 0;
  open.emplace(manhattan(start, goal), sequence++, env.index(start));

  while (!open.empty()) {
    const auto [f, seq, idx] = open.top();
    open.pop();
    if (closed[idx] != 0) continue;
    closed[idx] = 1;
    const Coordinate c = env.cell(idx);
    if (observer) observer(c, cost[idx], manhattan(c, goal));
    if (c == goal) break;

    for (std::size_t k = 0; k < 4; ++k) {
      const Coordinate n = step(c, kExpansionOrder[k]);
      if (!env.is_free(n)) continue;
      const std::size_t ni = env.index(n);
      if (closed[ni] != 0) continue;
      const int g = cost[idx] + 1;
      if (g < cost[ni]) {
        cost[ni] = g;
        via[ni] = static_cast<std::int8_t>(k);
        open.emplace(g + manhattan(n, goal), sequence++, ni);
      }
    }
  }

  const std::size_t gi = env.index(goal);
  if (cost[gi] == kInfinity) return std::nullopt;

  Plan plan;
  for (Coordinate c = goal; c != start;) {
    const Action a = kExpansionOrder[static_cast<std::size_t>(via[env.index(c)])];
    plan.actions.push_back(a);
    // Walk back against the move that entered c.
    c = {c.row - (step(c, a).row - c.row), c.col - (step(c, a).col - c.col)};
  }
  std::reverse(plan.actions.begin(), plan.actions.end());
  plan.move_count = static_cast<int>(plan.actions.size());
  return plan;
}

DistanceMatrix pairwise_distances(const Environment& env, Coordinate start, std::span<const Coordinate> goals) {
  DistanceMatrix dm;
  dm.points.push_back(start);
  dm.points.insert(dm.points.end(), goals.begin(), goals.end());
  const std::size_t n = dm.points.size();
  dm.dist.assign(n * n, kInfinity);
  for (std::size_t i = 0; i < n; ++i) {
    dm.at(i, i) = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto plan = astar_shortest_path(env, dm.points[i], dm.points[j]);
      const int d = plan ? plan->move_count : kInfinity;
      dm.at(i, j) = d;
      dm.at(j, i) = d;
    }
  }
  return dm;
}

int tour_cost(const DistanceMatrix& dm, std::span<const std::size_t> order) {
  long long total = 0;
  std::size_t cur = 0;
  for (const std::size_t g : order) {
    const int d = dm.at(cur, g + 1);
    if (d == kInfinity) return kInfinity;
    total += d;
    cur = g + 1;
  }
  return static_cast<int>(total);
}

std::optional<VisitOrder> solve_visit_order(const DistanceMatrix& dm, std::span<const std::uint32_t> predecessor_masks,
                                            std::size_t cap) {
  if (dm.size() == 0) throw std::invalid_argument("distance matrix has no start point");
  const std::size_t n = dm.size() - 1;
  if (n > cap) throw std::invalid_argument("too many goals for the exact solver");
  if (predecessor_masks.size() != n) throw std::invalid_argument("one predecessor mask per goal is required");
  if (n == 0) return VisitOrder{};

  const std::uint32_t full = (1u << n) - 1;
  const std::size_t width = n + 1;  // current point: 0 = start, g+1 = goal g
  // Cost to visit every goal outside `mask`, standing at `cur`.
  std::vector<int> to_go(static_cast<std::size_t>(full + 1) * width, kInfinity);
  const auto slot = [&](std::uint32_t mask, std::size_t cur) -> int& { return to_go[mask * width + cur]; };

  for (std::size_t cur = 0; cur < width; ++cur) slot(full, cur) = 0;
  for (std::uint32_t mask = full; mask-- > 0;) {
    for (std::size_t cur = 0; cur < width; ++cur) {
      if (cur == 0 ? mask != 0 : (mask & (1u << (cur - 1))) == 0) continue;
      int best = kInfinity;
      for (std::size_t g = 0; g < n; ++g) {
        const std::uint32_t bit = 1u << g;
        if ((mask & bit) != 0 || (predecessor_masks[g] & ~mask) != 0) continue;
        const int d = dm.at(cur, g + 1);
        const int rest = slot(mask | bit, g + 1);
        if (d == kInfinity || rest == kInfinity) continue;
        best = std::min(best, d + rest);
      }
      slot(mask, cur) = best;
    }
  }

  if (slot(0, 0) == kInfinity) return std::nullopt;

  VisitOrder result;
  result.total_cost = slot(0, 0);
  std::uint32_t mask = 0;
  std::size_t cur = 0;
  while (mask != full) {
    const int target = slot(mask, cur);
    for (std::size_t g = 0; g < n; ++g) {
      const std::uint32_t bit = 1u << g;
      if ((mask & bit) != 0 || (predecessor_masks[g] & ~mask) != 0) continue;
      const int d = dm.at(cur, g + 1);
      const int rest = slot(mask | bit, g + 1);
      if (d == kInfinity || rest == kInfinity || d + rest != target) continue;
      result.order.push_back(g);
      mask |= bit;
      cur = g + 1;
      break;
    }
  }
  return result;
}

std::optional<VisitOrder> solve_visit_order(const DistanceMatrix& dm, const std::optional<OrderingConstraint>& constraint,
                                            std::size_t cap) {
  const std::size_t n = dm.size() == 0 ? 0 : dm.size() - 1;
  const std::vector<std::uint32_t> masks =
      constraint ? constraint->predecessor_masks(n) : std::vector<std::uint32_t>(n, 0);
  return solve_visit_order(dm, masks, cap);
}

namespace {

std::optional<Plan> plan_along(const Environment& env, Coordinate start, std::span<const Coordinate> goals,
                               std::span<const std::size_t> order) {
  Plan plan;
  Coordinate cur = start;
  for (const std::size_t g : order) {
    const auto leg = astar_shortest_path(env, cur, goals[g]);
    if (!leg) return std::nullopt;
    plan.actions.insert(plan.actions.end(), leg->actions.begin(), leg->actions.end());
    plan.actions.push_back(Action::Inspect);
    plan.move_count += leg->move_count;
    plan.inspect_count += 1;
    cur = goals[g];
  }
  return plan;
}

}  // namespace

std::optional<Plan> assemble_multigoal_plan(const Environment& env, Coordinate start, std::span<const Coordinate> goals,
                                            const std::optional<OrderingConstraint>& constraint) {
  const DistanceMatrix dm = pairwise_distances(env, start, goals);
  const auto order = solve_visit_order(dm, constraint);
  if (!order) return std::nullopt;
  return plan_along(env, start, goals, order->order);
}

std::optional<Plan> gold_plan(const TaskInstance& instance) {
  if (!instance.multi_goal()) return astar_shortest_path(instance.env, instance.start, instance.goals.front());
  return assemble_multigoal_plan(instance.env, instance.start, instance.goals, instance.constraint);
}

std::optional<int> remaining_task_cost(const Environment& env, Coordinate from, std::span<const Coordinate> goals,
                                       const std::vector<bool>& visited,
                                       const std::optional<OrderingConstraint>& constraint) {
  std::vector<std::size_t> remaining;
  for (std::size_t g = 0; g < goals.size(); ++g)
    if (!visited[g]) remaining.push_back(g);
  if (remaining.empty()) return 0;

  std::vector<Coordinate> points;
  for (const std::size_t g : remaining) points.push_back(goals[g]);

  // Position of each original goal among the remaining ones.
  std::vector<int> local(goals.size(), -1);
  for (std::size_t i = 0; i < remaining.size(); ++i) local[remaining[i]] = static_cast<int>(i);

  std::vector<std::uint32_t> masks(remaining.size(), 0);
  if (constraint) {
    std::uint32_t pending_before = 0;
    for (const std::size_t g : constraint->before)
      if (local[g] >= 0) pending_before |= 1u << local[g];
    for (const std::size_t g : constraint->after)
      if (local[g] >= 0) masks[static_cast<std::size_t>(local[g])] = pending_before;
  }

  const DistanceMatrix dm = pairwise_distances(env, from, points);
  const auto order = solve_visit_order(dm, masks);
  if (!order) return std::nullopt;
  return order->total_cost + static_cast<int>(remaining.size());
}

}  // namespace ppnl
