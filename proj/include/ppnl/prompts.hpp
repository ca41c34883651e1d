#pragma once

// Few-shot prompt construction and answer extraction.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppnl/task.hpp"

namespace ppnl {

enum class Method : std::uint8_t { Naive, ActionEffect, Cot, React, Ordering };

std::string_view to_string(Method m);
/// Accepts "naive", "action_effect" (or "action-effect"), "cot", "react",
/// "ordering". Throws std::invalid_argument otherwise.
Method parse_method(std::string_view s);

struct Turn {
  std::string label;  // "Actions", "Thought 1", "Act 1", "Obs 1", "Order"
  std::string text;
};

struct Exemplar {
  std::string task;
  std::vector<Turn> turns;
};

struct PromptSpec {
  Method method = Method::Naive;
  /// Naive: 5, 10 or 15. Others: at most the stock count; nullopt = all.
  std::optional<int> shots;
  bool optimality_variant = false;  // ordering prompts only
  /// Indices into the stock exemplar list; overrides `shots` when set.
  std::optional<std::vector<std::size_t>> exemplar_ids;
};

/// Named exemplar lists plus their header lines.
class ExemplarStore {
 public:
  /// The stock fixtures: naive 5/10/15, action-effect, CoT, ReAct (7 each),
  /// ordering and optimal ordering (5 each).
  static const ExemplarStore& stock();

  /// ReAct exemplars with the second demonstration's obstacle observation
  /// made consistent with its obstacle list.
  static const ExemplarStore& corrected();

  void add(std::string key, std::string header, std::vector<Exemplar> exemplars);
  const std::vector<Exemplar>& exemplars(std::string_view key) const;
  const std::string& header(std::string_view key) const;
  bool contains(std::string_view key) const;

 private:
  struct Entry {
    std::string header;
    std::vector<Exemplar> exemplars;
  };
  std::map<std::string, Entry, std::less<>> entries_;
};

/// Store key for a spec: "naive-5", "action_effect", "cot", "react",
/// "ordering", "ordering-optimal". Throws on an unsupported naive shot count.
std::string exemplar_key(const PromptSpec& spec);

/// Label that the model is asked to continue after the target task.
std::string_view answer_cue(Method m);

/// Header, "###"-separated exemplars, then "###\nTask: {task}\n{cue}:".
std::string build_prompt(const PromptSpec& spec, std::string_view task_text,
                         const ExemplarStore& store = ExemplarStore::stock());
std::string build_prompt(const PromptSpec& spec, const TaskInstance& instance,
                         const ExemplarStore& store = ExemplarStore::stock());

/// Prompt asking for a visit order of a multi-goal instance.
std::string build_ordering_prompt(const TaskInstance& instance, bool optimality,
                                  const ExemplarStore& store = ExemplarStore::stock());

/// The exemplar part of a prompt (header plus exemplars, newline terminated).
std::string render_exemplars(const PromptSpec& spec, const ExemplarStore& store = ExemplarStore::stock());

/// Parses "p3, p1, p0" (optionally after "The optimal plan is:" or up to a
/// trailing period) into goal indices. nullopt unless the result is a
/// permutation of [0, goal_count).
std::optional<std::vector<std::size_t>> parse_order(std::string_view text, std::size_t goal_count);

/// "p3, p1, p0".
std::string format_order(const std::vector<std::size_t>& order);

/// Reduces a model answer to the text handed to parse_prediction: the plan
/// after "Act k:" or "action sequence is:", "Goal not reachable" for the
/// unreachable phrasings, or the first line otherwise.
std::string extract_answer(std::string_view response);

}  // namespace ppnl
