#pragma once

// Interactive evaluation: executes proposed plans, reports local feedback
// and drives the agent for a bounded number of trials.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ppnl/agent.hpp"
#include "ppnl/metrics.hpp"
#include "ppnl/prompts.hpp"
#include "ppnl/task.hpp"
#include "ppnl/world.hpp"

namespace ppnl {

struct Observation {
  enum class Kind : std::uint8_t { Solved, NotReached, Blocked, OutOfBounds, UnreachableAck, Unparseable };

  Kind kind = Kind::Solved;
  Coordinate position;            // last safe cell
  std::size_t executed_steps = 0;  // actions executed before stopping
  Coordinate offending;           // obstacle, or the outside cell for OutOfBounds

  /// The sentence fed back to the agent.
  std::string text() const;
};

struct ObserveResult {
  Observation observation;
  Coordinate position;          // new current position
  std::vector<Action> executed;  // the safe prefix that was carried out
};

/// Executes the longest safe prefix of `proposed` from `current`. Inspect is
/// executed as a no-op. Solved only when every action ran and the agent
/// ends on `goal`.
ObserveResult observe(const Environment& env, Coordinate current, std::span<const Action> proposed, Coordinate goal);

struct TranscriptEntry {
  int leg = 0;    // -1 for the ordering request
  int trial = 0;
  std::string response;
  std::string observation;
};

struct EpisodeOptions {
  int max_trials = 3;
  bool optimal_ordering_prompt = false;
  const ExemplarStore* store = nullptr;  // stock exemplars when null
};

struct EpisodeResult {
  bool success = false;
  int trials_used = 0;  // max over legs
  std::vector<Action> path;  // executed safe prefixes plus Inspect per finished leg
  bool declared_unreachable = false;
  std::optional<std::vector<std::size_t>> order;
  std::vector<TranscriptEntry> transcript;
  std::optional<std::string> error;
  Prediction prediction;
  InstanceResult metrics;
};

/// One ReAct episode. Multi-goal instances first ask for a visit order, then
/// run one leg per goal with its own trial budget.
EpisodeResult run_episode(const TaskInstance& instance, Agent& agent, const EpisodeOptions& options = {});

/// One JSON object (no trailing newline) describing the episode.
std::string transcript_json(const TaskInstance& instance, const EpisodeResult& result);

}  // namespace ppnl
