#pragma once

// Grid coordinates, the absolute and egocentric action spaces, and
// deterministic simulation of action sequences.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ppnl {

/// A grid cell. Row 0 is the top row; rows grow downward.
struct Coordinate {
  int row = 0;
  int col = 0;

  friend constexpr auto operator<=>(const Coordinate&, const Coordinate&) = default;
};

/// Renders "(r,c)".
std::string to_string(Coordinate c);

constexpr int manhattan(Coordinate a, Coordinate b) {
  const int dr = a.row > b.row ? a.row - b.row : b.row - a.row;
  const int dc = a.col > b.col ? a.col - b.col : b.col - a.col;
  return dr + dc;
}

enum class Action : std::uint8_t { Up, Down, Left, Right, Inspect };
enum class EgoAction : std::uint8_t { TurnLeft, TurnRight, Forward };

/// Cell reached by a movement action; Inspect returns `from`.
constexpr Coordinate step(Coordinate from, Action a) {
  switch (a) {
    case Action::Up: return {from.row - 1, from.col};
    case Action::Down: return {from.row + 1, from.col};
    case Action::Left: return {from.row, from.col - 1};
    case Action::Right: return {from.row, from.col + 1};
    case Action::Inspect: break;
  }
  return from;
}

std::string_view to_string(Action a);
std::string_view to_string(EgoAction a);

/// Canonical serialization: lowercase tokens joined by single spaces.
std::string serialize_plan(std::span<const Action> actions);
std::string serialize_plan(std::span<const EgoAction> actions);

/// An N x N grid with single-cell obstacles. Obstacle order is preserved
/// because it is part of the verbalized task.
class Environment {
 public:
  /// Throws std::invalid_argument on N < 2, out-of-bounds or duplicate
  /// obstacles.
  Environment(int grid_size, std::vector<Coordinate> obstacles);

  int grid_size() const { return grid_size_; }
  std::size_t cell_count() const { return static_cast<std::size_t>(grid_size_) * grid_size_; }
  const std::vector<Coordinate>& obstacles() const { return obstacles_; }

  bool in_bounds(Coordinate c) const {
    return c.row >= 0 && c.col >= 0 && c.row < grid_size_ && c.col < grid_size_;
  }
  bool is_obstacle(Coordinate c) const { return in_bounds(c) && blocked_[index(c)] != 0; }
  bool is_free(Coordinate c) const { return in_bounds(c) && blocked_[index(c)] == 0; }

  std::size_t index(Coordinate c) const {
    return static_cast<std::size_t>(c.row) * grid_size_ + static_cast<std::size_t>(c.col);
  }
  Coordinate cell(std::size_t index) const {
    return {static_cast<int>(index / grid_size_), static_cast<int>(index % grid_size_)};
  }

  /// Obstacles in row-major order; equal for environments with the same layout.
  std::vector<Coordinate> sorted_obstacles() const;

  friend bool operator==(const Environment& a, const Environment& b) {
    return a.grid_size_ == b.grid_size_ && a.obstacles_ == b.obstacles_;
  }

 private:
  int grid_size_;
  std::vector<Coordinate> obstacles_;
  std::vector<std::uint8_t> blocked_;
};

struct StepOutcome {
  enum class Kind : std::uint8_t { Moved, OutOfBounds, HitObstacle, Inspected };
  Kind kind;
  /// New position (Moved), offending cell (OutOfBounds/HitObstacle), or the
  /// unchanged position (Inspected).
  Coordinate cell;

  friend bool operator==(const StepOutcome&, const StepOutcome&) = default;
};

StepOutcome apply_action(const Environment& env, Coordinate pos, Action action);

struct ExecutionFailure {
  enum class Kind : std::uint8_t { OutOfBounds, HitObstacle };
  Kind kind;
  std::size_t step_index;
  Coordinate cell;

  friend bool operator==(const ExecutionFailure&, const ExecutionFailure&) = default;
};

struct Inspection {
  std::size_t step_index;
  std::optional<std::size_t> goal;  // nullopt when standing on a non-goal cell

  friend bool operator==(const Inspection&, const Inspection&) = default;
};

struct ExecutionTrace {
  std::vector<Coordinate> positions;  // start first, one entry per executed move
  std::vector<Inspection> inspected;
  std::optional<ExecutionFailure> failure;
  Coordinate final;

  bool feasible() const { return !failure.has_value(); }
};

/// Simulates `actions` from `start`, stopping at the first action that leaves
/// the grid or enters an obstacle.
ExecutionTrace execute_plan(const Environment& env, Coordinate start, std::span<const Action> actions,
                            std::span<const Coordinate> goals);

struct UnreachableDeclared {
  friend bool operator==(const UnreachableDeclared&, const UnreachableDeclared&) = default;
};
struct Unparseable {
  std::string raw;
  friend bool operator==(const Unparseable&, const Unparseable&) = default;
};

using Prediction = std::variant<std::vector<Action>, std::vector<EgoAction>, UnreachableDeclared, Unparseable>;

inline constexpr std::string_view kUnreachableText = "Goal not reachable";

/// Parses an agent answer. Tokens are case-insensitive and
/// whitespace-separated; a single trailing period is tolerated. Inspect is
/// accepted only when `multi_goal` is set.
Prediction parse_prediction(std::string_view text, bool multi_goal, bool egocentric);

/// Canonical text of a prediction (plan tokens, "Goal not reachable", or the
/// raw text of an unparseable answer).
std::string serialize_prediction(const Prediction& prediction);

enum class Facing : std::uint8_t { North, East, South, West };

inline constexpr Facing kInitialFacing = Facing::South;

/// Turning left from South faces East, turning right faces West. A reversal
/// is emitted as two left turns. Throws std::invalid_argument on Inspect.
std::vector<EgoAction> to_egocentric(std::span<const Action> actions);
std::vector<Action> from_egocentric(std::span<const EgoAction> actions);

/// True when `actions` is what to_egocentric would emit for some absolute
/// plan: minimal turns before every Forward and no trailing turns.
bool is_canonical_egocentric(std::span<const EgoAction> actions);

}  // namespace ppnl
