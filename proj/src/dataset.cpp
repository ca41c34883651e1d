#include "ppnl/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "ppnl/metrics.hpp"
#include "ppnl/planner.hpp"
#include "ppnl/verbalizer.hpp"

namespace ppnl {

DatasetError::DatasetError(std::size_t line, std::string field, const std::string& what)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + "field '" + field +
                         "': " + what),
      line_(line),
      field_(std::move(field)),
      detail_(what) {}

DatasetRecord make_record(const TaskInstance& instance) {
  DatasetRecord r{instance, verbalize_task(instance), std::string(kUnreachableText), std::nullopt};
  const auto gold = instance.reachable ? gold_plan(instance) : std::nullopt;
  if (gold) r.gold_plan = serialize_plan(gold->actions);
  if (!instance.multi_goal()) {
    r.gold_plan_egocentric = gold ? serialize_plan(to_egocentric(gold->actions)) : std::string(kUnreachableText);
  }
  return r;
}

std::vector<DatasetRecord> make_records(std::span<const TaskInstance> instances) {
  std::vector<DatasetRecord> out;
  out.reserve(instances.size());
  for (const TaskInstance& t : instances) out.push_back(make_record(t));
  return out;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson coord_json(Coordinate c) { return ojson::array({c.row, c.col}); }

[[noreturn]] void bad(const std::string& field, const std::string& what) { throw DatasetError(0, field, what); }

const nlohmann::json& member(const nlohmann::json& j, const char* field) {
  const auto it = j.find(field);
  if (it == j.end()) bad(field, "missing");
  return *it;
}

std::string string_field(const nlohmann::json& j, const char* field) {
  const auto& v = member(j, field);
  if (!v.is_string()) bad(field, "expected a string");
  return v.get<std::string>();
}

Coordinate coord_from(const nlohmann::json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
    bad(field, "expected [row, col]");
  return {v[0].get<int>(), v[1].get<int>()};
}

std::vector<std::size_t> index_list(const nlohmann::json& v, const std::string& field) {
  if (!v.is_array()) bad(field, "expected a list of goal indices");
  std::vector<std::size_t> out;
  for (const auto& e : v) {
    if (!e.is_number_unsigned()) bad(field, "expected non-negative integers");
    out.push_back(e.get<std::size_t>());
  }
  return out;
}

}  // namespace

nlohmann::ordered_json to_json(const DatasetRecord& record) {
  const TaskInstance& t = record.instance;
  ojson j;
  j["id"] = t.id;
  j["grid_size"] = t.env.grid_size();
  j["obstacles"] = ojson::array();
  for (const Coordinate o : t.env.obstacles()) j["obstacles"].push_back(coord_json(o));
  j["start"] = coord_json(t.start);
  j["goals"] = ojson::array();
  for (const Coordinate g : t.goals) j["goals"].push_back(coord_json(g));
  if (t.constraint) {
    j["constraint"] = {{"before", t.constraint->before}, {"after", t.constraint->after}};
  } else {
    j["constraint"] = nullptr;
  }
  j["setting"] = std::string(to_string(t.setting));
  j["split"] = std::string(to_string(t.split));
  j["task_text"] = record.task_text;
  j["gold_plan"] = record.gold_plan;
  j["gold_plan_egocentric"] = record.gold_plan_egocentric ? ojson(*record.gold_plan_egocentric) : ojson(nullptr);
  j["reachable"] = t.reachable;
  return j;
}

DatasetRecord record_from_json(const nlohmann::json& j, const ReadOptions& options) {
  if (!j.is_object()) bad("<record>", "expected a JSON object");

  const std::string id = string_field(j, "id");
  if (id.empty()) bad("id", "must be nonempty");

  const auto& n = member(j, "grid_size");
  if (!n.is_number_integer() || n.get<int>() < 2 || n.get<int>() > 1000) bad("grid_size", "expected an integer >= 2");
  const int grid = n.get<int>();

  const auto& obs = member(j, "obstacles");
  if (!obs.is_array()) bad("obstacles", "expected a list");
  std::vector<Coordinate> obstacles;
  for (const auto& o : obs) obstacles.push_back(coord_from(o, "obstacles"));
  std::optional<Environment> env;
  try {
    env.emplace(grid, obstacles);
  } catch (const std::invalid_argument& e) {
    bad("obstacles", e.what());
  }

  const Coordinate start = coord_from(member(j, "start"), "start");
  if (!env->in_bounds(start)) bad("start", to_string(start) + " is out of bounds");
  if (env->is_obstacle(start)) bad("start", to_string(start) + " is an obstacle");

  const auto& goals_json = member(j, "goals");
  if (!goals_json.is_array() || goals_json.empty()) bad("goals", "expected a nonempty list");
  std::vector<Coordinate> goals;
  for (const auto& g : goals_json) {
    const Coordinate c = coord_from(g, "goals");
    if (!env->in_bounds(c)) bad("goals", to_string(c) + " is out of bounds");
    if (env->is_obstacle(c)) bad("goals", to_string(c) + " is an obstacle");
    goals.push_back(c);
  }

  std::optional<OrderingConstraint> constraint;
  const auto& cj = member(j, "constraint");
  if (!cj.is_null()) {
    if (!cj.is_object()) bad("constraint", "expected null or {before, after}");
    constraint = OrderingConstraint{index_list(member(cj, "before"), "constraint"),
                                    index_list(member(cj, "after"), "constraint")};
  }

  Setting setting;
  Split split;
  try {
    setting = parse_setting(string_field(j, "setting"));
  } catch (const std::invalid_argument& e) {
    bad("setting", e.what());
  }
  try {
    split = parse_split(string_field(j, "split"));
  } catch (const std::invalid_argument& e) {
    bad("split", e.what());
  }

  const auto& reach = member(j, "reachable");
  if (!reach.is_boolean()) bad("reachable", "expected a boolean");

  DatasetRecord r{TaskInstance{id, *env, start, goals, constraint, setting, split, reach.get<bool>()},
                  string_field(j, "task_text"), string_field(j, "gold_plan"), std::nullopt};
  const auto& ego = member(j, "gold_plan_egocentric");
  if (!ego.is_null()) {
    if (!ego.is_string()) bad("gold_plan_egocentric", "expected a string or null");
    r.gold_plan_egocentric = ego.get<std::string>();
  }

  const TaskInstance& t = r.instance;
  try {
    t.validate();
  } catch (const std::invalid_argument& e) {
    bad(t.constraint && setting == Setting::MultiConstrained ? "constraint" : "goals", e.what());
  }
  const auto mask = reachable_mask(t.env, t.start);
  const bool reachable =
      std::all_of(t.goals.begin(), t.goals.end(), [&](Coordinate g) { return mask[t.env.index(g)] != 0; });
  if (reachable != t.reachable) bad("reachable", "disagrees with the obstacle layout");
  if (r.task_text != verbalize_task(t)) bad("task_text", "does not match the instance");
  if (t.multi_goal() && r.gold_plan_egocentric) bad("gold_plan_egocentric", "must be null for multi-goal instances");
  if (!t.multi_goal() && !r.gold_plan_egocentric) bad("gold_plan_egocentric", "missing for a single-goal instance");

  if (options.revalidate_gold) {
    if (!t.reachable) {
      if (r.gold_plan != kUnreachableText) bad("gold_plan", "unreachable instances must be labeled unreachable");
    } else {
      const auto gold = gold_plan(t);
      const Prediction p = parse_prediction(r.gold_plan, t.multi_goal(), false);
      const InstanceResult res = evaluate_prediction(t, gold, p);
      if (!res.success || !res.optimal) bad("gold_plan", "is not a successful optimal plan");
      if (r.gold_plan_egocentric) {
        const Prediction pe = parse_prediction(*r.gold_plan_egocentric, false, true);
        const auto* ego_actions = std::get_if<std::vector<EgoAction>>(&pe);
        if (ego_actions == nullptr || from_egocentric(*ego_actions) != std::get<std::vector<Action>>(p))
          bad("gold_plan_egocentric", "does not match gold_plan");
      }
    }
  }
  return r;
}

void write_jsonl(std::ostream& out, std::span<const DatasetRecord> records) {
  for (const DatasetRecord& r : records) out << to_json(r).dump() << '\n';
}

void write_jsonl(const std::filesystem::path& path, std::span<const DatasetRecord> records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_jsonl(out, records);
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

std::vector<DatasetRecord> read_jsonl(std::istream& in, const ReadOptions& options) {
  std::vector<DatasetRecord> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) throw DatasetError(number, "<record>", "malformed JSON");
    try {
      out.push_back(record_from_json(j, options));
    } catch (const DatasetError& e) {
      throw DatasetError(number, e.field(), e.detail());
    }
  }
  return out;
}

std::vector<DatasetRecord> read_jsonl(const std::filesystem::path& path, const ReadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_jsonl(in, options);
}

}  // namespace ppnl
