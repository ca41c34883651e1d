#include "ppnl/prompts.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <regex>
#include <stdexcept>

#include "exemplars.hpp"
#include "ppnl/verbalizer.hpp"

namespace ppnl {

namespace {

constexpr std::array<std::string_view, 5> kMethodNames = {"naive", "action_effect", "cot", "react", "ordering"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string_view first_line(std::string_view s) {
  s = trim(s);
  return s.substr(0, s.find('\n'));
}

}  // namespace

std::string_view to_string(Method m) { return kMethodNames.at(static_cast<std::size_t>(m)); }

Method parse_method(std::string_view s) {
  const std::string name = s == "action-effect" ? "action_effect" : std::string(s);
  for (std::size_t i = 0; i < kMethodNames.size(); ++i)
    if (kMethodNames[i] == name) return static_cast<Method>(i);
  throw std::invalid_argument("unknown prompt method '" + std::string(s) + "'");
}

const ExemplarStore& ExemplarStore::stock() {
  static const ExemplarStore store = [] {
    ExemplarStore s;
    detail::add_stock_exemplars(s);
    return s;
  }();
  return store;
}

const ExemplarStore& ExemplarStore::corrected() {
  static const ExemplarStore store = [] {
    ExemplarStore s;
    detail::add_stock_exemplars(s);
    // The second ReAct demonstration lists an obstacle at (3,4) but its
    // observations and thoughts name (4,3); the third thought means (3,0).
    Exemplar& ex = s.entries_.at("react").exemplars.at(1);
    for (Turn& t : ex.turns) {
      const std::string_view replacement = t.label == "Thought 3" ? "(3,0)" : "(3,4)";
      for (std::size_t pos; (pos = t.text.find("(4,3)")) != std::string::npos;)
        t.text.replace(pos, 5, replacement);
    }
    return s;
  }();
  return store;
}

void ExemplarStore::add(std::string key, std::string header, std::vector<Exemplar> exemplars) {
  entries_[std::move(key)] = Entry{std::move(header), std::move(exemplars)};
}

bool ExemplarStore::contains(std::string_view key) const { return entries_.find(key) != entries_.end(); }

const std::vector<Exemplar>& ExemplarStore::exemplars(std::string_view key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) throw std::invalid_argument("no exemplars named '" + std::string(key) + "'");
  return it->second.exemplars;
}

const std::string& ExemplarStore::header(std::string_view key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) throw std::invalid_argument("no exemplars named '" + std::string(key) + "'");
  return it->second.header;
}

std::string exemplar_key(const PromptSpec& spec) {
  switch (spec.method) {
    case Method::Naive: {
      const int shots = spec.shots.value_or(5);
      if (shots != 5 && shots != 10 && shots != 15 && !spec.exemplar_ids)
        throw std::invalid_argument("naive prompts come with 5, 10 or 15 shots");
      return "naive-" + std::to_string(spec.exemplar_ids ? 15 : shots);
    }
    case Method::ActionEffect: return "action_effect";
    case Method::Cot: return "cot";
    case Method::React: return "react";
    case Method::Ordering: return spec.optimality_variant ? "ordering-optimal" : "ordering";
  }
  throw std::invalid_argument("unknown prompt method");
}

std::string_view answer_cue(Method m) {
  switch (m) {
    case Method::React: return "Thought 1";
    case Method::Ordering: return "Order";
    default: return "Actions";
  }
}

std::string render_exemplars(const PromptSpec& spec, const ExemplarStore& store) {
  const std::string key = exemplar_key(spec);
  const auto& pool = store.exemplars(key);

  std::vector<const Exemplar*> chosen;
  if (spec.exemplar_ids) {
    for (const std::size_t id : *spec.exemplar_ids) {
      if (id >= pool.size()) throw std::invalid_argument("exemplar id " + std::to_string(id) + " out of range");
      chosen.push_back(&pool[id]);
    }
  } else {
    std::size_t n = pool.size();
    if (spec.method != Method::Naive && spec.shots) {
      if (*spec.shots < 0 || static_cast<std::size_t>(*spec.shots) > pool.size())
        throw std::invalid_argument(std::string(to_string(spec.method)) + " prompts have at most " +
                                    std::to_string(pool.size()) + " exemplars");
      n = static_cast<std::size_t>(*spec.shots);
    }
    for (std::size_t i = 0; i < n; ++i) chosen.push_back(&pool[i]);
  }

  std::string out = store.header(key) + "\n";
  for (const Exemplar* ex : chosen) {
    out += "###\nTask: " + ex->task + "\n";
    for (const Turn& t : ex->turns) out += t.label + ": " + t.text + "\n";
  }
  return out;
}

std::string build_prompt(const PromptSpec& spec, std::string_view task_text, const ExemplarStore& store) {
  return render_exemplars(spec, store) + "###\nTask: " + std::string(task_text) + "\n" +
         std::string(answer_cue(spec.method)) + ":";
}

std::string build_prompt(const PromptSpec& spec, const TaskInstance& instance, const ExemplarStore& store) {
  return build_prompt(spec, verbalize_task(instance), store);
}

std::string build_ordering_prompt(const TaskInstance& instance, bool optimality, const ExemplarStore& store) {
  if (!instance.multi_goal()) throw std::invalid_argument("ordering prompts need a multi-goal instance");
  PromptSpec spec;
  spec.method = Method::Ordering;
  spec.optimality_variant = optimality;
  return build_prompt(spec, instance, store);
}

std::optional<std::vector<std::size_t>> parse_order(std::string_view text, std::size_t goal_count) {
  std::string s = lower(first_line(text));
  for (const std::string_view prefix : {"order:", "the optimal plan is:"}) {
    std::string_view v = trim(s);
    if (v.substr(0, prefix.size()) == prefix) s = std::string(trim(v.substr(prefix.size())));
  }
  while (!s.empty() && (s.back() == '.' || std::isspace(static_cast<unsigned char>(s.back())) != 0)) s.pop_back();

  std::vector<std::size_t> order;
  std::vector<bool> seen(goal_count, false);
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ',' || std::isspace(static_cast<unsigned char>(s[i])) != 0) {
      ++i;
      continue;
    }
    if (s[i] != 'p') return std::nullopt;
    std::size_t j = i + 1;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])) != 0) ++j;
    if (j == i + 1 || j - i > 4) return std::nullopt;
    const auto g = static_cast<std::size_t>(std::stoi(s.substr(i + 1, j - i - 1)));
    if (g >= goal_count || seen[g]) return std::nullopt;
    seen[g] = true;
    order.push_back(g);
    i = j;
  }
  if (order.size() != goal_count) return std::nullopt;
  return order;
}

std::string format_order(const std::vector<std::size_t>& order) {
  std::string out;
  for (const std::size_t g : order) {
    if (!out.empty()) out += ", ";
    out += "p" + std::to_string(g);
  }
  return out;
}

std::string extract_answer(std::string_view response) {
  std::string_view s = response;
  // Drop anything the model wrote past its own turn.
  for (const std::string_view stop : {"\nObs", "\n###", "\nTask:"}) {
    const auto cut = s.find(stop);
    if (cut != std::string_view::npos) s = s.substr(0, cut);
  }

  static const std::regex act_marker(R"(Act \d+:)");
  std::string text(s);
  std::smatch m;
  std::string answer;
  bool from_act = false;
  for (auto it = text.cbegin(); std::regex_search(it, text.cend(), m, act_marker); it = m.suffix().first) {
    answer = m.suffix().str();
    from_act = true;
  }
  if (from_act) {
    answer = std::string(first_line(answer));
    const std::string low = lower(answer);
    if (low.rfind("no action", 0) == 0 || low.find("not reachable") != std::string::npos)
      return std::string(kUnreachableText);
    return answer;
  }

  const std::string low = lower(text);
  if (low.find("not reachable") != std::string::npos) return std::string(kUnreachableText);
  const std::string_view marker = "action sequence is:";
  const auto at = low.rfind(marker);
  if (at != std::string::npos) return std::string(first_line(std::string_view(text).substr(at + marker.size())));
  std::string_view line = first_line(text);
  if (line.substr(0, 8) == "Actions:") line = trim(line.substr(8));
  return std::string(line);
}

}  // namespace ppnl
