#pragma once

// Natural-language rendering of tasks, and the parser that inverts it.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppnl/task.hpp"
#include "ppnl/world.hpp"

namespace ppnl {

/// "a", "a and b", "a, b and c".
std::string join_list(std::span<const std::string> items);

/// "You are in a N by N world." plus the obstacle sentence when k > 0.
std::string verbalize_world(const Environment& env);

/// World text followed by " Go from (r,c) to (r,c)".
std::string verbalize_single(const Environment& env, Coordinate start, Coordinate goal);

std::string verbalize_task(const TaskInstance& instance);

struct ParsedTask {
  int grid_size = 0;
  std::vector<Coordinate> obstacles;
  Coordinate start;
  std::vector<Coordinate> goals;
  std::optional<OrderingConstraint> constraint;
  bool multi_goal = false;

  friend bool operator==(const ParsedTask&, const ParsedTask&) = default;
};

/// Inverse of verbalize_task. Accepts exactly the generated grammar plus an
/// optional trailing period on the constraint sentence. Throws
/// std::invalid_argument with the offending position otherwise.
ParsedTask parse_task_text(std::string_view text);

}  // namespace ppnl
