#include <gtest/gtest.h>

#include <httplib.h>

#include <atomic>
#include <json.hpp>
#include <thread>

#include "ppnl/agent.hpp"
#include "ppnl/feedback.hpp"
#include "ppnl/llm_client.hpp"
#include "ppnl/planner.hpp"

using namespace ppnl;
using namespace std::chrono_literals;

namespace {

// A local chat-completion stand-in; `handler` decides each reply.
class MockServer {
 public:
  explicit MockServer(httplib::Server::Handler handler) {
    server_.Post("/v1/chat/completions", std::move(handler));
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~MockServer() {
    server_.stop();
    thread_.join();
  }
  LlmConfig config() const {
    LlmConfig c;
    c.base_url = "http://127.0.0.1:" + std::to_string(port_);
    c.model = "mock-model";
    c.api_key = "secret";
    c.initial_backoff = 5ms;
    c.max_backoff = 20ms;
    c.timeout = 2000ms;
    return c;
  }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

std::string completion(const std::string& text) {
  nlohmann::json j;
  j["choices"] = nlohmann::json::array({{{"message", {{"role", "assistant"}, {"content", text}}}}});
  return j.dump();
}

}  // namespace

TEST(LlmClient, EchoesCompletionAndSendsRequest) {
  nlohmann::json seen;
  std::string auth;
  MockServer server([&](const httplib::Request& req, httplib::Response& res) {
    seen = nlohmann::json::parse(req.body);
    auth = req.get_header_value("Authorization");
    res.set_content(completion(" right down"), "application/json");
  });
  LlmClient client(server.config());
  EXPECT_EQ(client.complete("hello"), " right down");
  EXPECT_EQ(client.attempts(), 1u);
  EXPECT_EQ(seen["model"], "mock-model");
  EXPECT_EQ(seen["temperature"], 0.0);
  ASSERT_EQ(seen["messages"].size(), 1u);
  EXPECT_EQ(seen["messages"][0]["role"], "user");
  EXPECT_EQ(seen["messages"][0]["content"], "hello");
  EXPECT_EQ(auth, "Bearer secret");
}

TEST(LlmClient, OptionalSystemMessage) {
  nlohmann::json seen;
  MockServer server([&](const httplib::Request& req, httplib::Response& res) {
    seen = nlohmann::json::parse(req.body);
    res.set_content(completion("ok"), "application/json");
  });
  LlmConfig c = server.config();
  c.system_message = "be brief";
  LlmClient(c).complete("x");
  ASSERT_EQ(seen["messages"].size(), 2u);
  EXPECT_EQ(seen["messages"][0]["role"], "system");
}

TEST(LlmClient, RetriesRateLimit) {
  std::atomic<int> calls{0};
  MockServer server([&](const httplib::Request&, httplib::Response& res) {
    if (++calls <= 2) {
      res.status = 429;
      return;
    }
    res.set_content(completion("done"), "application/json");
  });
  LlmClient client(server.config());
  EXPECT_EQ(client.complete("x"), "done");
  EXPECT_EQ(calls.load(), 3);
  EXPECT_EQ(client.attempts(), 3u);
}

TEST(LlmClient, GivesUpWithTransportError) {
  std::atomic<int> calls{0};
  MockServer server([&](const httplib::Request&, httplib::Response& res) {
    ++calls;
    res.status = 503;
  });
  LlmConfig c = server.config();
  c.max_retries = 2;
  try {
    LlmClient(c).complete("x");
    FAIL();
  } catch (const LlmError& e) {
    EXPECT_EQ(e.kind(), LlmError::Kind::Transport);
    EXPECT_EQ(e.status(), 503);
  }
  EXPECT_EQ(calls.load(), 3);
}

TEST(LlmClient, TimeoutIsTransport) {
  MockServer server([&](const httplib::Request&, httplib::Response& res) {
    std::this_thread::sleep_for(400ms);
    res.set_content(completion("late"), "application/json");
  });
  LlmConfig c = server.config();
  c.timeout = 100ms;
  c.max_retries = 1;
  try {
    LlmClient(c).complete("x");
    FAIL();
  } catch (const LlmError& e) {
    EXPECT_EQ(e.kind(), LlmError::Kind::Transport);
    EXPECT_EQ(e.status(), 0);
  }
}

TEST(LlmClient, AuthFailureNotRetried) {
  std::atomic<int> calls{0};
  MockServer server([&](const httplib::Request&, httplib::Response& res) {
    ++calls;
    res.status = 401;
  });
  try {
    LlmClient(server.config()).complete("x");
    FAIL();
  } catch (const LlmError& e) {
    EXPECT_EQ(e.kind(), LlmError::Kind::Auth);
  }
  EXPECT_EQ(calls.load(), 1);
}

TEST(LlmClient, MalformedBody) {
  MockServer server([&](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"choices": []})", "application/json");
  });
  try {
    LlmClient(server.config()).complete("x");
    FAIL();
  } catch (const LlmError& e) {
    EXPECT_EQ(e.kind(), LlmError::Kind::Malformed);
  }
}

TEST(LlmClient, ConnectionRefused) {
  LlmConfig c;
  c.base_url = "http://127.0.0.1:1";
  c.model = "m";
  c.max_retries = 1;
  c.initial_backoff = 1ms;
  try {
    LlmClient(c).complete("x");
    FAIL();
  } catch (const LlmError& e) {
    EXPECT_EQ(e.kind(), LlmError::Kind::Transport);
  }
}

TEST(LlmClient, CapsRequestsInFlight) {
  std::atomic<int> now{0}, peak{0};
  MockServer server([&](const httplib::Request&, httplib::Response& res) {
    const int n = ++now;
    int p = peak.load();
    while (n > p && !peak.compare_exchange_weak(p, n)) {
    }
    std::this_thread::sleep_for(50ms);
    --now;
    res.set_content(completion("ok"), "application/json");
  });
  LlmConfig c = server.config();
  c.max_in_flight = 2;
  LlmClient client(c);
  std::vector<std::thread> threads;
  for (int i = 0; i < 6; ++i) threads.emplace_back([&] { client.complete("x"); });
  for (auto& t : threads) t.join();
  EXPECT_LE(peak.load(), 2);
  EXPECT_EQ(client.attempts(), 6u);
}

TEST(LlmClient, RateLimitSpacesRequests) {
  MockServer server([&](const httplib::Request&, httplib::Response& res) {
    res.set_content(completion("ok"), "application/json");
  });
  LlmConfig c = server.config();
  c.requests_per_second = 20;
  c.burst = 1;
  LlmClient client(c);
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < 5; ++i) client.complete("x");
  EXPECT_GE(std::chrono::steady_clock::now() - t0, 180ms);
}

TEST(LlmAgent, EpisodeFailsOnTransportError) {
  MockServer server([&](const httplib::Request&, httplib::Response& res) {
    std::this_thread::sleep_for(300ms);
    res.set_content(completion("late"), "application/json");
  });
  LlmConfig c = server.config();
  c.timeout = 50ms;
  c.max_retries = 0;
  LlmAgent agent(std::make_shared<LlmClient>(c));
  const Environment env(6, {});
  const TaskInstance t{"s", env, {0, 0}, {{2, 2}}, std::nullopt, Setting::Single, Split::Train, true};
  const auto r = run_episode(t, agent);
  EXPECT_FALSE(r.success);
  ASSERT_TRUE(r.error);
  EXPECT_NE(r.error->find("transport"), std::string::npos) << *r.error;
}

TEST(LlmAgent, EpisodeWithMockModel) {
  MockServer server([&](const httplib::Request& req, httplib::Response& res) {
    const auto body = nlohmann::json::parse(req.body);
    const std::string prompt = body["messages"][0]["content"];
    EXPECT_TRUE(prompt.ends_with("Thought 1:"));
    res.set_content(completion(" (2,2) is close.\nAct 1: down down right right\nObs 1: made up"), "application/json");
  });
  LlmAgent agent(std::make_shared<LlmClient>(server.config()));
  const TaskInstance t{"s", Environment(6, {}), {0, 0}, {{2, 2}}, std::nullopt, Setting::Single, Split::Train, true};
  const auto r = run_episode(t, agent);
  EXPECT_TRUE(r.success);
  EXPECT_EQ(r.trials_used, 1);
}

TEST(LlmConfig, FromEnv) {
  ::setenv("PPNL_LLM_BASE_URL", "http://localhost:9", 1);
  ::setenv("PPNL_LLM_MODEL", "m1", 1);
  ::setenv("PPNL_LLM_MAX_RETRIES", "7", 1);
  ::setenv("PPNL_LLM_TIMEOUT_MS", "1234", 1);
  const LlmConfig c = LlmConfig::from_env();
  EXPECT_EQ(c.base_url, "http://localhost:9");
  EXPECT_EQ(c.model, "m1");
  EXPECT_EQ(c.max_retries, 7);
  EXPECT_EQ(c.timeout, 1234ms);
  ::unsetenv("PPNL_LLM_MODEL");
  EXPECT_THROW(LlmConfig::from_env(), std::invalid_argument);
}
