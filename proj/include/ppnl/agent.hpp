#pragma once

// The agent abstraction and the baseline agents used to exercise the
// evaluation harness.

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "ppnl/task.hpp"
#include "ppnl/world.hpp"

namespace ppnl {

class LlmClient;

enum class RequestKind : std::uint8_t { Plan, Order };

struct AgentRequest {
  explicit AgentRequest(TaskInstance t) : task(std::move(t)), position(task.start) {}

  std::string prompt;
  /// Earlier (response, observation) pairs of the current dialogue.
  std::vector<std::pair<std::string, std::string>> history;

  // Structured view of the same request, for agents that do not read text.
  RequestKind kind = RequestKind::Plan;
  TaskInstance task;     // the task being asked about (a leg, in episodes)
  Coordinate position;   // where the agent currently stands
  int trial = 1;
  bool egocentric = false;
};

struct AgentResponse {
  std::string text;
};

class Agent {
 public:
  virtual ~Agent() = default;
  virtual AgentResponse respond(const AgentRequest& request) = 0;
  virtual std::string name() const = 0;
};

/// Answers with the planner's gold plan from the current position, or the
/// optimal visit order.
class OracleAgent final : public Agent {
 public:
  AgentResponse respond(const AgentRequest& request) override;
  std::string name() const override { return "oracle"; }
};

/// Moves vertically then horizontally toward each goal, ignoring obstacles;
/// visits goals nearest-first among those the constraint allows.
class GreedyAgent final : public Agent {
 public:
  AgentResponse respond(const AgentRequest& request) override;
  std::string name() const override { return "greedy"; }
};

/// Uniform random tokens, length uniform in [1, 3N]. Output depends only on
/// (seed, task id, trial).
class RandomAgent final : public Agent {
 public:
  explicit RandomAgent(std::uint64_t seed) : seed_(seed) {}
  AgentResponse respond(const AgentRequest& request) override;
  std::string name() const override { return "random"; }

 private:
  std::uint64_t seed_;
};

/// Replies with the given texts in turn, repeating the last one.
class ScriptedAgent final : public Agent {
 public:
  explicit ScriptedAgent(std::vector<std::string> replies);
  AgentResponse respond(const AgentRequest& request) override;
  std::string name() const override { return "scripted"; }
  std::size_t calls() const;

 private:
  std::vector<std::string> replies_;
  mutable std::mutex mu_;
  std::size_t next_ = 0;
};

/// Sends the prompt to a remote chat-completion endpoint.
class LlmAgent final : public Agent {
 public:
  explicit LlmAgent(std::shared_ptr<LlmClient> client) : client_(std::move(client)) {}
  AgentResponse respond(const AgentRequest& request) override;
  std::string name() const override;

 private:
  std::shared_ptr<LlmClient> client_;
};

/// "oracle", "greedy", "random" or "llm" (configured from the environment).
std::unique_ptr<Agent> make_agent(std::string_view kind, std::uint64_t seed);

/// Order in which GreedyAgent visits the goals.
std::vector<std::size_t> greedy_order(const TaskInstance& task, Coordinate from);

}  // namespace ppnl
