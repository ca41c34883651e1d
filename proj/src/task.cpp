#include "ppnl/task.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ppnl {

void OrderingConstraint::validate(std::size_t goal_count) const {
  if (before.empty() || after.empty()) throw std::invalid_argument("constraint sides must be nonempty");
  std::vector<int> seen(goal_count, 0);
  for (const auto* side : {&before, &after}) {
    for (const std::size_t g : *side) {
      if (g >= goal_count) throw std::invalid_argument("constraint names goal p" + std::to_string(g) + " out of range");
      if (seen[g]++ != 0) throw std::invalid_argument("constraint names goal p" + std::to_string(g) + " twice");
    }
  }
  if (before.size() + after.size() != goal_count) throw std::invalid_argument("constraint does not cover every goal");
}

std::vector<std::uint32_t> OrderingConstraint::predecessor_masks(std::size_t goal_count) const {
  std::uint32_t before_mask = 0;
  for (const std::size_t g : before) before_mask |= 1u << g;
  std::vector<std::uint32_t> masks(goal_count, 0);
  for (const std::size_t g : after) masks[g] = before_mask;
  return masks;
}

namespace {

constexpr std::array<std::string_view, 3> kSettingNames = {"single", "multi_unconstrained", "multi_constrained"};
constexpr std::array<std::string_view, 7> kSplitNames = {
    "train", "dev", "test_unseen_placement", "test_unseen_environment", "ood_5x5", "ood_7x7", "ood_obstacles"};

}  // namespace

std::string_view to_string(Setting s) { return kSettingNames.at(static_cast<std::size_t>(s)); }
std::string_view to_string(Split s) { return kSplitNames.at(static_cast<std::size_t>(s)); }

Setting parse_setting(std::string_view s) {
  for (std::size_t i = 0; i < kSettingNames.size(); ++i)
    if (kSettingNames[i] == s) return static_cast<Setting>(i);
  throw std::invalid_argument("unknown setting '" + std::string(s) + "'");
}

Split parse_split(std::string_view s) {
  for (std::size_t i = 0; i < kSplitNames.size(); ++i)
    if (kSplitNames[i] == s) return static_cast<Split>(i);
  throw std::invalid_argument("unknown split '" + std::string(s) + "'");
}

void TaskInstance::validate() const {
  std::vector<Coordinate> points{start};
  points.insert(points.end(), goals.begin(), goals.end());
  for (const Coordinate p : points) {
    if (!env.in_bounds(p)) throw std::invalid_argument("location " + to_string(p) + " is out of bounds");
    if (env.is_obstacle(p)) throw std::invalid_argument("location " + to_string(p) + " is an obstacle");
  }
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    throw std::invalid_argument("start and goals must be distinct");

  if (setting == Setting::Single) {
    if (goals.size() != 1) throw std::invalid_argument("single-goal instance needs exactly one goal");
    if (constraint) throw std::invalid_argument("single-goal instance cannot carry a constraint");
    return;
  }
  if (goals.size() < 2 || goals.size() > 6) throw std::invalid_argument("multi-goal instance needs 2 to 6 goals");
  if (setting == Setting::MultiConstrained) {
    if (!constraint) throw std::invalid_argument("constrained instance is missing its constraint");
    constraint->validate(goals.size());
  } else if (constraint) {
    throw std::invalid_argument("unconstrained instance carries a constraint");
  }
}

}  // namespace ppnl
