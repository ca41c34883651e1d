#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "ppnl/prompts.hpp"

using namespace ppnl;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(PPNL_GOLDEN_DIR) + "/" + name + ".txt", std::ios::binary);
  EXPECT_TRUE(in) << name;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PromptSpec spec(Method m, std::optional<int> shots = std::nullopt, bool optimal = false) {
  PromptSpec s;
  s.method = m;
  s.shots = shots;
  s.optimality_variant = optimal;
  return s;
}

std::size_t count(const std::string& s, std::string_view needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

const std::string kTask = "You are in a 6 by 6 world. Go from (0,1) to (3,4)";

}  // namespace

struct GoldenCase {
  const char* file;
  PromptSpec spec;
};

class Golden : public testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, ByteMatch) {
  const auto& c = GetParam();
  const std::string g = golden(c.file);
  EXPECT_EQ(render_exemplars(c.spec), g);
  const std::string full = build_prompt(c.spec, kTask);
  EXPECT_EQ(full, g + "###\nTask: " + kTask + "\n" + std::string(answer_cue(c.spec.method)) + ":");
}

INSTANTIATE_TEST_SUITE_P(Stock, Golden,
                         testing::Values(GoldenCase{"naive-5", spec(Method::Naive, 5)},
                                         GoldenCase{"naive-10", spec(Method::Naive, 10)},
                                         GoldenCase{"naive-15", spec(Method::Naive, 15)},
                                         GoldenCase{"action_effect", spec(Method::ActionEffect)},
                                         GoldenCase{"cot", spec(Method::Cot)},
                                         GoldenCase{"react", spec(Method::React)},
                                         GoldenCase{"ordering", spec(Method::Ordering)},
                                         GoldenCase{"ordering-optimal", spec(Method::Ordering, {}, true)}),
                         [](const auto& info) {
                           std::string n = info.param.file;
                           for (char& ch : n)
                             if (ch == '-') ch = '_';
                           return n;
                         });

TEST(Prompt, Structure) {
  EXPECT_EQ(ExemplarStore::stock().exemplars("react").size(), 7u);
  EXPECT_EQ(ExemplarStore::stock().exemplars("naive-15").size(), 15u);
  const std::string react = build_prompt(spec(Method::React), kTask);
  EXPECT_EQ(count(react, "Task: "), 8u);
  EXPECT_GT(count(react, "Obs "), 7u);
  EXPECT_TRUE(react.ends_with("\nThought 1:"));
  EXPECT_TRUE(build_prompt(spec(Method::Naive, 5), kTask).ends_with("\nActions:"));
}

TEST(Prompt, ZeroShots) {
  const std::string p = build_prompt(spec(Method::Cot, 0), kTask);
  EXPECT_EQ(p, ExemplarStore::stock().header("cot") + "\n###\nTask: " + kTask + "\nActions:");
  EXPECT_THROW(build_prompt(spec(Method::Naive, 7), kTask), std::invalid_argument);
  EXPECT_THROW(build_prompt(spec(Method::Cot, 8), kTask), std::invalid_argument);
}

TEST(Prompt, ExemplarIds) {
  PromptSpec s = spec(Method::Cot);
  s.exemplar_ids = std::vector<std::size_t>{2, 0};
  const auto& ex = ExemplarStore::stock().exemplars("cot");
  const std::string p = build_prompt(s, kTask);
  EXPECT_LT(p.find(ex[2].task), p.find(ex[0].task));
  EXPECT_EQ(count(p, "Task: "), 3u);
}

TEST(Prompt, OrderingHeaders) {
  EXPECT_TRUE(ExemplarStore::stock().header("ordering").starts_with(
      "Provide a plan to navigate a world to reach all the goals"));
  EXPECT_TRUE(ExemplarStore::stock().header("ordering-optimal").ends_with(
      "A path is optimal if it satisfies the constraints using the minimum number of actions"));
}

TEST(Prompt, CorrectedReactStore) {
  const auto& stock = ExemplarStore::stock().exemplars("react");
  const auto& fixed = ExemplarStore::corrected().exemplars("react");
  ASSERT_EQ(stock.size(), fixed.size());
  EXPECT_EQ(stock[0].turns[0].text, fixed[0].turns[0].text);
  bool changed = false;
  for (std::size_t i = 0; i < stock[1].turns.size(); ++i) {
    EXPECT_EQ(fixed[1].turns[i].text.find("(4,3)"), std::string::npos);
    changed |= stock[1].turns[i].text != fixed[1].turns[i].text;
  }
  EXPECT_TRUE(changed);
  EXPECT_EQ(ExemplarStore::corrected().header("naive-5"), ExemplarStore::stock().header("naive-5"));
}

TEST(Method, Names) {
  EXPECT_EQ(parse_method("action-effect"), Method::ActionEffect);
  EXPECT_EQ(parse_method("react"), Method::React);
  EXPECT_THROW(parse_method("tot"), std::invalid_argument);
  EXPECT_EQ(to_string(Method::Cot), "cot");
}

TEST(ParseOrder, Forms) {
  EXPECT_EQ(parse_order("p1, p0", 2), (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(parse_order("The optimal plan is: p3, p1, p4, p2, p0", 5), (std::vector<std::size_t>{3, 1, 4, 2, 0}));
  EXPECT_EQ(parse_order(" Order: p0 p1.", 2), (std::vector<std::size_t>{0, 1}));
  EXPECT_FALSE(parse_order("p1, p1", 2));
  EXPECT_FALSE(parse_order("p0", 2));
  EXPECT_FALSE(parse_order("p0, p2", 2));
  EXPECT_FALSE(parse_order("first p0", 2));
  EXPECT_EQ(format_order({3, 1, 0}), "p3, p1, p0");
}

TEST(ExtractAnswer, Forms) {
  EXPECT_EQ(extract_answer(" right down\n###\nTask: more"), "right down");
  EXPECT_EQ(extract_answer(" Goal not reachable"), "Goal not reachable");
  EXPECT_EQ(extract_answer("(0,5) is surrounded by obstacles. Therefore, the goal is not reachable from my location."),
            "Goal not reachable");
  EXPECT_EQ(extract_answer("I must go around. Therefore, the action sequence is: right right down."),
            "right right down.");
  EXPECT_EQ(extract_answer(" I should go left.\nAct 1: left left\nObs 1: something"), "left left");
  EXPECT_EQ(extract_answer(" x\nAct 1: up\nThought 2: hmm\nAct 2: No action should be taken."),
            "Goal not reachable");
  EXPECT_EQ(extract_answer("Actions: up up"), "up up");
}
