#pragma once

// Per-instance scoring of predictions and corpus-level aggregation.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "ppnl/planner.hpp"
#include "ppnl/task.hpp"
#include "ppnl/world.hpp"

namespace ppnl {

/// Why a prediction fell short; Ok when it is an exact match (or a correct
/// unreachable declaration).
enum class Diagnosis : std::uint8_t {
  Ok,
  NotExact,
  NotOptimal,
  GoalNotReached,
  OutOfBounds,
  HitObstacle,
  Unparseable,
  FalseUnreachable,   // declared unreachable on a reachable instance
  MissedUnreachable,  // planned on an unreachable instance
};

inline constexpr std::size_t kDiagnosisCount = 9;
std::string_view to_string(Diagnosis d);

struct InstanceResult {
  bool reachable = true;
  bool success = false;
  bool optimal = false;
  bool exact_match = false;
  bool feasible = false;
  std::optional<int> distance;
  std::optional<bool> unreachable_correct;
  Diagnosis diagnosis = Diagnosis::Ok;
};

struct EvalOptions {
  /// Older distance definition: sum of per-goal shortest distances from the
  /// final cell, and 100 for infeasible plans.
  bool legacy_distance = false;
};

inline constexpr int kLegacyInfeasibleDistance = 100;

/// Scores `prediction` against `gold` (nullopt on unreachable instances).
/// Egocentric predictions are converted to absolute moves; their optimality
/// counts forward moves and their exact match compares against the
/// egocentric rendering of the gold plan.
InstanceResult evaluate_prediction(const TaskInstance& instance, const std::optional<Plan>& gold,
                                   const Prediction& prediction, const EvalOptions& options = {});

/// Goals visited by a trace: an Inspect on goal g counts only when every
/// goal that must precede g has already been visited.
std::vector<bool> visited_goals(const ExecutionTrace& trace, std::size_t goal_count,
                                const std::optional<OrderingConstraint>& constraint);

struct MetricsReport {
  double success_rate = 0;
  double optimal_rate = 0;
  double exact_match_rate = 0;
  double feasible_rate = 0;
  double mean_distance = 0;  // 0 when no distance is populated
  double unreachable_accuracy = 0;
  std::size_t n_scored = 0;  // reachable instances
  std::size_t n_unreachable = 0;
  std::size_t n_distance = 0;
  std::array<std::size_t, kDiagnosisCount> diagnoses{};
};

/// Associative fold over results; merge() combines partial reductions.
class MetricsAccumulator {
 public:
  void add(const InstanceResult& r);
  void merge(const MetricsAccumulator& other);
  MetricsReport report() const;
  std::size_t size() const { return scored_ + unreachable_; }

 private:
  std::size_t scored_ = 0;
  std::size_t success_ = 0;
  std::size_t optimal_ = 0;
  std::size_t exact_ = 0;
  std::size_t feasible_ = 0;
  std::size_t n_distance_ = 0;
  long long distance_sum_ = 0;
  std::size_t unreachable_ = 0;
  std::size_t unreachable_correct_ = 0;
  std::array<std::size_t, kDiagnosisCount> diagnoses_{};
};

MetricsReport aggregate(std::span<const InstanceResult> results);

}  // namespace ppnl
