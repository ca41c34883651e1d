#include "ppnl/world.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ppnl {

std::string to_string(Coordinate c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::string_view to_string(Action a) {
  switch (a) {
    case Action::Up: return "up";
    case Action::Down: return "down";
    case Action::Left: return "left";
    case Action::Right: return "right";
    case Action::Inspect: return "inspect";
  }
  return "?";
}

std::string_view to_string(EgoAction a) {
  switch (a) {
    case EgoAction::TurnLeft: return "turn left";
    case EgoAction::TurnRight: return "turn right";
    case EgoAction::Forward: return "move forward";
  }
  return "?";
}

namespace {

template <typename T>
std::string join_tokens(std::span<const T> actions) {
  std::string out;
  for (const T a : actions) {
    if (!out.empty()) out += ' ';
    out += to_string(a);
  }
  return out;
}

}  // namespace

std::string serialize_plan(std::span<const Action> actions) { return join_tokens(actions); }
std::string serialize_plan(std::span<const EgoAction> actions) { return join_tokens(actions); }

Environment::Environment(int grid_size, std::vector<Coordinate> obstacles)
    : grid_size_(grid_size), obstacles_(std::move(obstacles)) {
  if (grid_size_ < 2) throw std::invalid_argument("grid size must be at least 2");
  blocked_.assign(cell_count(), 0);
  for (const Coordinate o : obstacles_) {
    if (!in_bounds(o)) throw std::invalid_argument("obstacle " + to_string(o) + " is out of bounds");
    auto& slot = blocked_[index(o)];
    if (slot != 0) throw std::invalid_argument("duplicate obstacle " + to_string(o));
    slot = 1;
  }
}

std::vector<Coordinate> Environment::sorted_obstacles() const {
  std::vector<Coordinate> out = obstacles_;
  std::sort(out.begin(), out.end());
  return out;
}

StepOutcome apply_action(const Environment& env, Coordinate pos, Action action) {
  if (action == Action::Inspect) return {StepOutcome::Kind::Inspected, pos};
  const Coordinate next = step(pos, action);
  if (!env.in_bounds(next)) return {StepOutcome::Kind::OutOfBounds, next};
  if (env.is_obstacle(next)) return {StepOutcome::Kind::HitObstacle, next};
  return {StepOutcome::Kind::Moved, next};
}

ExecutionTrace execute_plan(const Environment& env, Coordinate start, std::span<const Action> actions,
                            std::span<const Coordinate> goals) {
  ExecutionTrace trace;
  trace.positions.push_back(start);
  Coordinate pos = start;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    const StepOutcome out = apply_action(env, pos, actions[i]);
    switch (out.kind) {
      case StepOutcome::Kind::Moved:
        pos = out.cell;
        trace.positions.push_back(pos);
        break;
      case StepOutcome::Kind::Inspected: {
        const auto it = std::find(goals.begin(), goals.end(), pos);
        std::optional<std::size_t> goal;
        if (it != goals.end()) goal = static_cast<std::size_t>(it - goals.begin());
        trace.inspected.push_back({i, goal});
        break;
      }
      case StepOutcome::Kind::OutOfBounds:
        trace.failure = ExecutionFailure{ExecutionFailure::Kind::OutOfBounds, i, out.cell};
        break;
      case StepOutcome::Kind::HitObstacle:
        trace.failure = ExecutionFailure{ExecutionFailure::Kind::HitObstacle, i, out.cell};
        break;
    }
    if (trace.failure) break;
  }
  trace.final = pos;
  return trace;
}

namespace {

std::string normalize_answer(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (const char ch : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  const auto not_space = [](unsigned char ch) { return !std::isspace(ch); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t begin = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > begin) out.push_back(s.substr(begin, i - begin));
  }
  return out;
}

std::optional<Action> parse_action_token(std::string_view token, bool multi_goal) {
  if (token == "up") return Action::Up;
  if (token == "down") return Action::Down;
  if (token == "left") return Action::Left;
  if (token == "right") return Action::Right;
  if (token == "inspect" && multi_goal) return Action::Inspect;
  return std::nullopt;
}

}  // namespace

Prediction parse_prediction(std::string_view text, bool multi_goal, bool egocentric) {
  std::string norm = normalize_answer(text);
  while (!norm.empty() && (norm.back() == '.' || norm.back() == '!')) norm.pop_back();

  if (norm == "goal not reachable") return UnreachableDeclared{};

  const auto tokens = split_whitespace(norm);
  if (!egocentric) {
    std::vector<Action> actions;
    actions.reserve(tokens.size());
    for (const auto token : tokens) {
      const auto a = parse_action_token(token, multi_goal);
      if (!a) return Unparseable{std::string(text)};
      actions.push_back(*a);
    }
    return actions;
  }

  std::vector<EgoAction> actions;
  for (std::size_t i = 0; i < tokens.size(); i += 2) {
    if (i + 1 >= tokens.size()) return Unparseable{std::string(text)};
    const auto verb = tokens[i];
    const auto arg = tokens[i + 1];
    if (verb == "turn" && arg == "left") {
      actions.push_back(EgoAction::TurnLeft);
    } else if (verb == "turn" && arg == "right") {
      actions.push_back(EgoAction::TurnRight);
    } else if (verb == "move" && arg == "forward") {
      actions.push_back(EgoAction::Forward);
    } else {
      return Unparseable{std::string(text)};
    }
  }
  return actions;
}

std::string serialize_prediction(const Prediction& prediction) {
  struct Visitor {
    std::string operator()(const std::vector<Action>& a) const { return serialize_plan(a); }
    std::string operator()(const std::vector<EgoAction>& a) const { return serialize_plan(a); }
    std::string operator()(const UnreachableDeclared&) const { return std::string(kUnreachableText); }
    std::string operator()(const Unparseable& u) const { return u.raw; }
  };
  return std::visit(Visitor{}, prediction);
}

namespace {

// Clockwise order North, East, South, West matches the enum values.
constexpr Facing turn_clockwise(Facing f) { return static_cast<Facing>((static_cast<int>(f) + 1) % 4); }
constexpr Facing turn_counterclockwise(Facing f) { return static_cast<Facing>((static_cast<int>(f) + 3) % 4); }

// Viewed from above, an agent facing South has East on its left.
constexpr Facing turn_left(Facing f) { return turn_counterclockwise(f); }
constexpr Facing turn_right(Facing f) { return turn_clockwise(f); }

static_assert(turn_left(Facing::South) == Facing::East);
static_assert(turn_right(Facing::South) == Facing::West);

constexpr Facing facing_of(Action a) {
  switch (a) {
    case Action::Up: return Facing::North;
    case Action::Down: return Facing::South;
    case Action::Left: return Facing::West;
    case Action::Right: return Facing::East;
    case Action::Inspect: break;
  }
  return Facing::South;
}

constexpr Action action_of(Facing f) {
  switch (f) {
    case Facing::North: return Action::Up;
    case Facing::South: return Action::Down;
    case Facing::West: return Action::Left;
    case Facing::East: return Action::Right;
  }
  return Action::Down;
}

}  // namespace

std::vector<EgoAction> to_egocentric(std::span<const Action> actions) {
  std::vector<EgoAction> out;
  out.reserve(actions.size() * 2);
  Facing facing = kInitialFacing;
  for (const Action a : actions) {
    if (a == Action::Inspect) throw std::invalid_argument("egocentric plans cannot contain inspect");
    const Facing target = facing_of(a);
    if (target == turn_left(facing)) {
      out.push_back(EgoAction::TurnLeft);
    } else if (target == turn_right(facing)) {
      out.push_back(EgoAction::TurnRight);
    } else if (target != facing) {
      out.push_back(EgoAction::TurnLeft);
      out.push_back(EgoAction::TurnLeft);
    }
    out.push_back(EgoAction::Forward);
    facing = target;
  }
  return out;
}

std::vector<Action> from_egocentric(std::span<const EgoAction> actions) {
  std::vector<Action> out;
  Facing facing = kInitialFacing;
  for (const EgoAction a : actions) {
    switch (a) {
      case EgoAction::TurnLeft: facing = turn_left(facing); break;
      case EgoAction::TurnRight: facing = turn_right(facing); break;
      case EgoAction::Forward: out.push_back(action_of(facing)); break;
    }
  }
  return out;
}

bool is_canonical_egocentric(std::span<const EgoAction> actions) {
  const auto absolute = from_egocentric(actions);
  const auto canonical = to_egocentric(absolute);
  return std::equal(canonical.begin(), canonical.end(), actions.begin(), actions.end());
}

}  // namespace ppnl
