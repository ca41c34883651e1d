#include "ppnl/feedback.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>

#include "ppnl/llm_client.hpp"
#include "ppnl/planner.hpp"
#include "ppnl/verbalizer.hpp"

namespace ppnl {

namespace {

std::string progress_prefix(std::size_t executed, Coordinate at) {
  if (executed == 0) return "If I execute the first step";
  const std::string steps = executed == 1 ? "the first step" : "the first " + std::to_string(executed) + " steps";
  return "After executing " + steps + ", I am at " + to_string(at) + ". If I execute the next step";
}

std::string trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

std::string Observation::text() const {
  switch (kind) {
    case Kind::Solved:
      return "Performing the action sequence leads to " + to_string(position) + ". The task has been solved.";
    case Kind::NotReached:
      return "Performing the action sequence leads to " + to_string(position) + ". The goal has not been reached.";
    case Kind::Blocked:
      return progress_prefix(executed_steps, position) + " I will run into the obstacle at " + to_string(offending) + ".";
    case Kind::OutOfBounds: {
      std::string side;
      if (offending.row < position.row) side = "top";
      else if (offending.row > position.row) side = "bottom";
      else if (offending.col < position.col) side = "left";
      else side = "right";
      return progress_prefix(executed_steps, position) + " I will run into the " + side + " boundary of the grid.";
    }
    case Kind::UnreachableAck: return "No action is to be performed. The goal is not reachable.";
    case Kind::Unparseable: return "The proposed actions could not be understood.";
  }
  return {};
}

ObserveResult observe(const Environment& env, Coordinate current, std::span<const Action> proposed, Coordinate goal) {
  ObserveResult r;
  Coordinate pos = current;
  for (std::size_t i = 0; i < proposed.size(); ++i) {
    const StepOutcome out = apply_action(env, pos, proposed[i]);
    if (out.kind == StepOutcome::Kind::OutOfBounds || out.kind == StepOutcome::Kind::HitObstacle) {
      r.observation.kind =
          out.kind == StepOutcome::Kind::HitObstacle ? Observation::Kind::Blocked : Observation::Kind::OutOfBounds;
      r.observation.position = pos;
      r.observation.executed_steps = i;
      r.observation.offending = out.cell;
      r.position = pos;
      return r;
    }
    pos = out.cell;
    r.executed.push_back(proposed[i]);
  }
  r.observation.kind = pos == goal ? Observation::Kind::Solved : Observation::Kind::NotReached;
  r.observation.position = pos;
  r.observation.executed_steps = proposed.size();
  r.position = pos;
  return r;
}

namespace {

enum class LegOutcome { Solved, Exhausted, DeclaredUnreachable, Failed };

struct LegState {
  EpisodeResult& result;
  Agent& agent;
  const EpisodeOptions& options;
  const ExemplarStore& store;
};

LegOutcome run_leg(LegState& s, const TaskInstance& leg, int leg_index) {
  PromptSpec spec;
  spec.method = Method::React;
  std::string dialogue = build_prompt(spec, verbalize_task(leg), s.store);

  AgentRequest req(leg);
  req.kind = RequestKind::Plan;
  const Coordinate goal = leg.goals.front();

  for (int trial = 1; trial <= s.options.max_trials; ++trial) {
    s.result.trials_used = std::max(s.result.trials_used, trial);
    req.prompt = dialogue;
    req.trial = trial;

    std::string response;
    try {
      response = s.agent.respond(req).text;
    } catch (const LlmError& e) {
      s.result.error = std::string(to_string(e.kind())) + " error: " + e.what();
      return LegOutcome::Failed;
    } catch (const std::exception& e) {
      s.result.error = std::string("agent error: ") + e.what();
      return LegOutcome::Failed;
    }

    const Prediction pred = parse_prediction(extract_answer(response), false, false);
    Observation obs;
    LegOutcome outcome = LegOutcome::Exhausted;
    if (std::holds_alternative<UnreachableDeclared>(pred)) {
      obs.kind = Observation::Kind::UnreachableAck;
      outcome = LegOutcome::DeclaredUnreachable;
    } else if (const auto* actions = std::get_if<std::vector<Action>>(&pred)) {
      const ObserveResult step = observe(leg.env, req.position, *actions, goal);
      s.result.path.insert(s.result.path.end(), step.executed.begin(), step.executed.end());
      req.position = step.position;
      obs = step.observation;
      if (obs.kind == Observation::Kind::Solved) outcome = LegOutcome::Solved;
    } else {
      obs.kind = Observation::Kind::Unparseable;
      obs.position = req.position;
    }

    const std::string obs_text = obs.text();
    s.result.transcript.push_back({leg_index, trial, response, obs_text});
    req.history.emplace_back(response, obs_text);
    if (outcome != LegOutcome::Exhausted) return outcome;

    const std::string k = std::to_string(trial);
    dialogue += " " + trimmed(response) + "\nObs " + k + ": " + obs_text + "\nThought " + std::to_string(trial + 1) + ":";
  }
  return LegOutcome::Exhausted;
}

}  // namespace

EpisodeResult run_episode(const TaskInstance& instance, Agent& agent, const EpisodeOptions& options) {
  EpisodeResult result;
  const ExemplarStore& store = options.store != nullptr ? *options.store : ExemplarStore::stock();
  LegState state{result, agent, options, store};

  std::vector<std::size_t> order{0};
  bool usable = true;
  if (instance.multi_goal()) {
    AgentRequest req(instance);
    req.kind = RequestKind::Order;
    req.prompt = build_ordering_prompt(instance, options.optimal_ordering_prompt, store);
    std::string response;
    try {
      response = agent.respond(req).text;
    } catch (const std::exception& e) {
      result.error = std::string("agent error: ") + e.what();
      usable = false;
    }
    if (usable) {
      result.order = parse_order(response, instance.goals.size());
      result.transcript.push_back(
          {-1, 1, response, result.order ? std::string() : "The proposed order could not be understood."});
      if (result.order) {
        order = *result.order;
      } else {
        usable = false;
        result.prediction = Unparseable{response};
      }
    }
  }

  if (usable) {
    Coordinate cur = instance.start;
    for (std::size_t i = 0; i < order.size(); ++i) {
      TaskInstance leg = instance;
      if (instance.multi_goal()) {
        leg.id = instance.id + "-leg" + std::to_string(i);
        leg.start = cur;
        leg.goals = {instance.goals[order[i]]};
        leg.constraint.reset();
        leg.setting = Setting::Single;
        const auto mask = reachable_mask(leg.env, cur);
        leg.reachable = mask[leg.env.index(leg.goals.front())] != 0;
      }

      const LegOutcome outcome = run_leg(state, leg, static_cast<int>(i));
      if (outcome == LegOutcome::DeclaredUnreachable) {
        result.declared_unreachable = true;
        break;
      }
      if (outcome != LegOutcome::Solved) break;
      if (instance.multi_goal()) result.path.push_back(Action::Inspect);
      cur = leg.goals.front();
    }
    if (result.declared_unreachable) {
      result.prediction = UnreachableDeclared{};
    } else {
      result.prediction = result.path;
    }
  }

  const auto gold = instance.reachable ? gold_plan(instance) : std::nullopt;
  result.metrics = evaluate_prediction(instance, gold, result.prediction);
  result.success = !result.error && (instance.reachable ? result.metrics.success
                                                        : result.metrics.unreachable_correct.value_or(false));
  return result;
}

std::string transcript_json(const TaskInstance& instance, const EpisodeResult& result) {
  nlohmann::ordered_json j;
  j["id"] = instance.id;
  j["success"] = result.success;
  j["trials_used"] = result.trials_used;
  j["declared_unreachable"] = result.declared_unreachable;
  j["order"] = result.order ? nlohmann::ordered_json(*result.order) : nlohmann::ordered_json(nullptr);
  j["path"] = serialize_plan(result.path);
  j["prediction"] = serialize_prediction(result.prediction);
  j["error"] = result.error ? nlohmann::ordered_json(*result.error) : nlohmann::ordered_json(nullptr);
  j["diagnosis"] = std::string(to_string(result.metrics.diagnosis));
  auto& turns = j["transcript"] = nlohmann::ordered_json::array();
  for (const TranscriptEntry& t : result.transcript)
    turns.push_back({{"leg", t.leg}, {"trial", t.trial}, {"response", t.response}, {"observation", t.observation}});
  return j.dump();
}

}  // namespace ppnl
