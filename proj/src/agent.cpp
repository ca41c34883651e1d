#include "ppnl/agent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ppnl/llm_client.hpp"
#include "ppnl/planner.hpp"
#include "ppnl/prompts.hpp"
#include "ppnl/rng.hpp"

namespace ppnl {

namespace {

std::string render_plan(const std::vector<Action>& actions, const AgentRequest& request) {
  if (request.egocentric && !request.task.multi_goal()) return serialize_plan(to_egocentric(actions));
  return serialize_plan(actions);
}

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

}  // namespace

AgentResponse OracleAgent::respond(const AgentRequest& request) {
  TaskInstance task = request.task;
  task.start = request.position;

  if (request.kind == RequestKind::Order) {
    const DistanceMatrix dm = pairwise_distances(task.env, task.start, task.goals);
    const auto order = solve_visit_order(dm, task.constraint);
    return {format_order(order ? order->order : identity_order(task.goals.size()))};
  }

  const auto plan = gold_plan(task);
  if (!plan) return {std::string(kUnreachableText)};
  return {render_plan(plan->actions, request)};
}

std::vector<std::size_t> greedy_order(const TaskInstance& task, Coordinate from) {
  const std::size_t n = task.goals.size();
  const std::vector<std::uint32_t> preds =
      task.constraint ? task.constraint->predecessor_masks(n) : std::vector<std::uint32_t>(n, 0);
  std::vector<std::size_t> order;
  std::uint32_t done = 0;
  Coordinate cur = from;
  while (order.size() < n) {
    std::size_t best = n;
    for (std::size_t g = 0; g < n; ++g) {
      if ((done & (1u << g)) != 0 || (preds[g] & ~done) != 0) continue;
      if (best == n || manhattan(cur, task.goals[g]) < manhattan(cur, task.goals[best])) best = g;
    }
    order.push_back(best);
    done |= 1u << best;
    cur = task.goals[best];
  }
  return order;
}

AgentResponse GreedyAgent::respond(const AgentRequest& request) {
  const TaskInstance& task = request.task;
  if (request.kind == RequestKind::Order) return {format_order(greedy_order(task, request.position))};

  std::vector<Action> actions;
  Coordinate cur = request.position;
  const auto walk = [&](Coordinate to) {
    for (; cur.row < to.row; ++cur.row) actions.push_back(Action::Down);
    for (; cur.row > to.row; --cur.row) actions.push_back(Action::Up);
    for (; cur.col < to.col; ++cur.col) actions.push_back(Action::Right);
    for (; cur.col > to.col; --cur.col) actions.push_back(Action::Left);
  };
  if (!task.multi_goal()) {
    walk(task.goals.front());
  } else {
    for (const std::size_t g : greedy_order(task, request.position)) {
      walk(task.goals[g]);
      actions.push_back(Action::Inspect);
    }
  }
  return {render_plan(actions, request)};
}

AgentResponse RandomAgent::respond(const AgentRequest& request) {
  const TaskInstance& task = request.task;
  const char* kind = request.kind == RequestKind::Order ? "order" : "plan";
  Stream rng(seed_, task.id + "#" + kind + std::to_string(request.trial));

  if (request.kind == RequestKind::Order) {
    auto order = identity_order(task.goals.size());
    rng.shuffle(std::span(order));
    return {format_order(order)};
  }

  const int length = rng.between(1, 3 * task.env.grid_size());
  if (request.egocentric && !task.multi_goal()) {
    std::vector<EgoAction> ego;
    for (int i = 0; i < length; ++i) ego.push_back(static_cast<EgoAction>(rng.below(3)));
    return {serialize_plan(ego)};
  }
  const std::size_t choices = task.multi_goal() ? 5 : 4;
  std::vector<Action> actions;
  for (int i = 0; i < length; ++i) actions.push_back(static_cast<Action>(rng.below(choices)));
  return {serialize_plan(actions)};
}

ScriptedAgent::ScriptedAgent(std::vector<std::string> replies) : replies_(std::move(replies)) {
  if (replies_.empty()) throw std::invalid_argument("scripted agent needs at least one reply");
}

AgentResponse ScriptedAgent::respond(const AgentRequest&) {
  std::lock_guard lock(mu_);
  const std::size_t i = std::min(next_, replies_.size() - 1);
  ++next_;
  return {replies_[i]};
}

std::size_t ScriptedAgent::calls() const {
  std::lock_guard lock(mu_);
  return next_;
}

AgentResponse LlmAgent::respond(const AgentRequest& request) { return {client_->complete(request.prompt)}; }

std::string LlmAgent::name() const { return "llm:" + client_->config().model; }

std::unique_ptr<Agent> make_agent(std::string_view kind, std::uint64_t seed) {
  if (kind == "oracle") return std::make_unique<OracleAgent>();
  if (kind == "greedy") return std::make_unique<GreedyAgent>();
  if (kind == "random") return std::make_unique<RandomAgent>(seed);
  if (kind == "llm") return std::make_unique<LlmAgent>(std::make_shared<LlmClient>(LlmConfig::from_env()));
  throw std::invalid_argument("unknown agent '" + std::string(kind) + "'");
}

}  // namespace ppnl
