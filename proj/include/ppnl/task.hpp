#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppnl/world.hpp"

namespace ppnl {

/// Every goal in `before` must be visited before any goal in `after`.
struct OrderingConstraint {
  // Goal indices in rendering order; the generator emits them ascending.
  std::vector<std::size_t> before;
  std::vector<std::size_t> after;

  /// Throws std::invalid_argument unless before/after are nonempty, disjoint
  /// and together cover [0, goal_count).
  void validate(std::size_t goal_count) const;

  /// Bit i of entry j is set when goal i must precede goal j.
  std::vector<std::uint32_t> predecessor_masks(std::size_t goal_count) const;

  friend bool operator==(const OrderingConstraint&, const OrderingConstraint&) = default;
};

enum class Setting : std::uint8_t { Single, MultiUnconstrained, MultiConstrained };

enum class Split : std::uint8_t {
  Train,
  Dev,
  TestUnseenPlacement,
  TestUnseenEnvironment,
  Ood5x5,
  Ood7x7,
  OodObstacles,
};

std::string_view to_string(Setting s);
std::string_view to_string(Split s);
/// Throw std::invalid_argument on unknown names.
Setting parse_setting(std::string_view s);
Split parse_split(std::string_view s);

struct TaskInstance {
  std::string id;
  Environment env;
  Coordinate start;
  std::vector<Coordinate> goals;  // p0 .. p{l-1}
  std::optional<OrderingConstraint> constraint;
  Setting setting = Setting::Single;
  Split split = Split::Train;
  bool reachable = true;

  bool multi_goal() const { return setting != Setting::Single; }

  /// Throws std::invalid_argument when start/goals are not distinct, free and
  /// in-bounds, or the goal count / constraint disagree with the setting.
  void validate() const;
};

}  // namespace ppnl
