#include "ppnl/verbalizer.hpp"

#include <cctype>
#include <stdexcept>

namespace ppnl {

std::string join_list(std::span<const std::string> items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += i + 1 == items.size() ? " and " : ", ";
    out += items[i];
  }
  return out;
}

namespace {

std::vector<std::string> goal_names(std::span<const std::size_t> goals) {
  std::vector<std::string> out;
  for (const std::size_t g : goals) out.push_back("p" + std::to_string(g));
  return out;
}

}  // namespace

std::string verbalize_world(const Environment& env) {
  const std::string n = std::to_string(env.grid_size());
  std::string out = "You are in a " + n + " by " + n + " world.";
  if (!env.obstacles().empty()) {
    std::vector<std::string> cells;
    for (const Coordinate o : env.obstacles()) cells.push_back(to_string(o));
    out += " There are obstacles that you have to avoid at: " + join_list(cells) + ".";
  }
  return out;
}

std::string verbalize_single(const Environment& env, Coordinate start, Coordinate goal) {
  return verbalize_world(env) + " Go from " + to_string(start) + " to " + to_string(goal);
}

std::string verbalize_task(const TaskInstance& instance) {
  if (!instance.multi_goal()) return verbalize_single(instance.env, instance.start, instance.goals.front());

  std::vector<std::string> names;
  std::vector<std::string> locations;
  for (std::size_t g = 0; g < instance.goals.size(); ++g) {
    names.push_back("p" + std::to_string(g));
    locations.push_back(names.back() + " is located at " + to_string(instance.goals[g]));
  }
  std::string out = verbalize_world(instance.env);
  out += " You are at " + to_string(instance.start) + ".";
  out += " You have to visit " + join_list(names) + ".";
  out += " " + join_list(locations) + ".";
  if (instance.constraint) {
    out += " Visit " + join_list(goal_names(instance.constraint->before)) + " before " +
           join_list(goal_names(instance.constraint->after));
  }
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  bool peek(std::string_view lit) const { return text_.substr(pos_, lit.size()) == lit; }

  bool accept(std::string_view lit) {
    if (!peek(lit)) return false;
    pos_ += lit.size();
    return true;
  }

  void expect(std::string_view lit) {
    if (!accept(lit)) fail("expected \"" + std::string(lit) + "\"");
  }

  int integer() {
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    if (begin == pos_ || pos_ - begin > 6) fail("expected an integer");
    return std::stoi(std::string(text_.substr(begin, pos_ - begin)));
  }

  Coordinate coordinate() {
    expect("(");
    const int r = integer();
    expect(",");
    const int c = integer();
    expect(")");
    return {r, c};
  }

  std::size_t goal_name() {
    expect("p");
    return static_cast<std::size_t>(integer());
  }

  // Items separated by ", " with " and " before the last one.
  template <typename F>
  auto list(F item) -> std::vector<decltype(item())> {
    std::vector<decltype(item())> out{item()};
    while (true) {
      if (accept(", ")) {
        out.push_back(item());
      } else if (accept(" and ")) {
        out.push_back(item());
        break;
      } else {
        break;
      }
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("task text: " + what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedTask parse_task_text(std::string_view text) {
  Cursor in(text);
  ParsedTask out;
  in.expect("You are in a ");
  out.grid_size = in.integer();
  in.expect(" by ");
  if (in.integer() != out.grid_size) in.fail("grid is not square");
  in.expect(" world.");
  if (in.accept(" There are obstacles that you have to avoid at: ")) {
    out.obstacles = in.list([&] { return in.coordinate(); });
    in.expect(".");
  }

  if (in.accept(" Go from ")) {
    out.start = in.coordinate();
    in.expect(" to ");
    out.goals.push_back(in.coordinate());
    if (!in.done()) in.fail("trailing text");
    return out;
  }

  out.multi_goal = true;
  in.expect(" You are at ");
  out.start = in.coordinate();
  in.expect(". You have to visit ");
  const auto names = in.list([&] { return in.goal_name(); });
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] != i) in.fail("goals must be named p0, p1, ... in order");
  in.expect(". ");
  std::size_t expected = 0;
  const auto located = in.list([&] {
    if (in.goal_name() != expected++) in.fail("goal locations out of order");
    in.expect(" is located at ");
    return in.coordinate();
  });
  if (located.size() != names.size()) in.fail("goal count mismatch");
  out.goals = located;
  in.expect(".");

  if (in.accept(" Visit ")) {
    OrderingConstraint c;
    c.before = in.list([&] { return in.goal_name(); });
    in.expect(" before ");
    c.after = in.list([&] { return in.goal_name(); });
    in.accept(".");
    out.constraint = std::move(c);
  }
  if (!in.done()) in.fail("trailing text");
  return out;
}

}  // namespace ppnl
