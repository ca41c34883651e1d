#pragma once

// Exact gold-plan computation: reachability, A* with the Manhattan
// heuristic, pairwise distance matrices, and the precedence-constrained
// open-tour solver used for multi-goal plans.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "ppnl/task.hpp"
#include "ppnl/world.hpp"

namespace ppnl {

/// Neighbor expansion order; also the A* tie-break order.
inline constexpr Action kExpansionOrder[4] = {Action::Down, Action::Right, Action::Up, Action::Left};

/// Implicit undirected 4-neighbor graph over the free cells of an environment.
class GridGraph {
 public:
  explicit GridGraph(const Environment& env) : env_(&env) {}

  /// Free, in-bounds neighbors of `c` in expansion order.
  std::vector<Coordinate> neighbors(Coordinate c) const;
  std::size_t degree(Coordinate c) const { return neighbors(c).size(); }
  bool adjacent(Coordinate a, Coordinate b) const;

  const Environment& env() const { return *env_; }

 private:
  const Environment* env_;
};

GridGraph build_graph(const Environment& env);

/// Cells of the connected free component containing `start`, row-major.
std::vector<Coordinate> reachable_set(const Environment& env, Coordinate start);

/// Per-cell flag (indexed by Environment::index) for the component of `start`.
std::vector<std::uint8_t> reachable_mask(const Environment& env, Coordinate start);

struct Plan {
  std::vector<Action> actions;
  int move_count = 0;
  int inspect_count = 0;

  friend bool operator==(const Plan&, const Plan&) = default;
};

/// Called once per expanded node with its cost-so-far and heuristic value.
using AstarObserver = std::function<void(Coordinate node, int cost_so_far, int heuristic)>;

/// Minimum-length plan from start to goal, or nullopt when unreachable.
std::optional<Plan> astar_shortest_path(const Environment& env, Coordinate start, Coordinate goal,
                                        const AstarObserver& observer = {});

inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Shortest-path distances between a start (index 0) and the goals.
struct DistanceMatrix {
  std::vector<Coordinate> points;
  std::vector<int> dist;  // row-major, kInfinity where disconnected

  std::size_t size() const { return points.size(); }
  int at(std::size_t i, std::size_t j) const { return dist[i * points.size() + j]; }
  int& at(std::size_t i, std::size_t j) { return dist[i * points.size() + j]; }
};

DistanceMatrix pairwise_distances(const Environment& env, Coordinate start, std::span<const Coordinate> goals);

struct VisitOrder {
  std::vector<std::size_t> order;  // goal indices (0-based over goals)
  int total_cost = 0;

  friend bool operator==(const VisitOrder&, const VisitOrder&) = default;
};

inline constexpr std::size_t kDefaultExactSolveCap = 12;

/// Minimum-cost open tour from point 0 through every goal. Goal g may be
/// placed only after every goal in predecessor_masks[g]. Among equal-cost
/// tours the lexicographically smallest order is returned. nullopt when no
/// finite tour exists. Throws std::invalid_argument above `cap` goals.
std::optional<VisitOrder> solve_visit_order(const DistanceMatrix& dm, std::span<const std::uint32_t> predecessor_masks,
                                            std::size_t cap = kDefaultExactSolveCap);

std::optional<VisitOrder> solve_visit_order(const DistanceMatrix& dm, const std::optional<OrderingConstraint>& constraint,
                                            std::size_t cap = kDefaultExactSolveCap);

/// Sum of consecutive distances along `order`, starting at point 0.
int tour_cost(const DistanceMatrix& dm, std::span<const std::size_t> order);

/// A* segments along the optimal visit order, with Inspect on arrival at
/// each goal. nullopt when a goal is disconnected from the start.
std::optional<Plan> assemble_multigoal_plan(const Environment& env, Coordinate start, std::span<const Coordinate> goals,
                                            const std::optional<OrderingConstraint>& constraint);

/// The gold plan of an instance, or nullopt when it is unreachable.
std::optional<Plan> gold_plan(const TaskInstance& instance);

/// Minimum number of actions (moves plus inspects) needed to finish a
/// multi-goal task from `from` when `visited` goals are already inspected.
/// nullopt when a remaining goal is disconnected.
std::optional<int> remaining_task_cost(const Environment& env, Coordinate from, std::span<const Coordinate> goals,
                                       const std::vector<bool>& visited,
                                       const std::optional<OrderingConstraint>& constraint);

}  // namespace ppnl
