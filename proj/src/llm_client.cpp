#include "ppnl/llm_client.hpp"

#include <httplib.h>

#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <thread>

namespace ppnl {

namespace {

std::optional<std::string> env_var(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

bool retryable(int status) { return status == 429 || status >= 500; }

}  // namespace

std::string_view to_string(LlmError::Kind k) {
  switch (k) {
    case LlmError::Kind::Transport: return "transport";
    case LlmError::Kind::Malformed: return "malformed";
    case LlmError::Kind::Auth: return "auth";
    case LlmError::Kind::Rejected: return "rejected";
  }
  return "unknown";
}

LlmConfig LlmConfig::from_env() {
  LlmConfig c;
  const auto base = env_var("PPNL_LLM_BASE_URL");
  const auto model = env_var("PPNL_LLM_MODEL");
  if (!base) throw std::invalid_argument("PPNL_LLM_BASE_URL is not set");
  if (!model) throw std::invalid_argument("PPNL_LLM_MODEL is not set");
  c.base_url = *base;
  c.model = *model;
  if (auto v = env_var("PPNL_LLM_PATH")) c.path = *v;
  if (auto v = env_var("PPNL_LLM_API_KEY")) c.api_key = *v;
  if (auto v = env_var("PPNL_LLM_API_KEY_HEADER")) c.api_key_header = *v;
  if (auto v = env_var("PPNL_LLM_MAX_RETRIES")) c.max_retries = std::stoi(*v);
  if (auto v = env_var("PPNL_LLM_RATE_LIMIT")) c.requests_per_second = std::stod(*v);
  if (auto v = env_var("PPNL_LLM_MAX_IN_FLIGHT")) c.max_in_flight = std::stoi(*v);
  if (auto v = env_var("PPNL_LLM_TIMEOUT_MS")) c.timeout = std::chrono::milliseconds(std::stoll(*v));
  return c;
}

LlmClient::LlmClient(LlmConfig config) : config_(std::move(config)), refilled_(std::chrono::steady_clock::now()) {
  if (config_.base_url.empty()) throw std::invalid_argument("LLM base URL is empty");
  if (config_.max_in_flight < 1) throw std::invalid_argument("max_in_flight must be at least 1");
  if (config_.max_retries < 0) throw std::invalid_argument("max_retries must be non-negative");
  tokens_ = std::max(1.0, config_.burst);
}

void LlmClient::acquire_slot() {
  std::unique_lock lock(slots_mu_);
  slots_cv_.wait(lock, [&] { return in_flight_ < config_.max_in_flight; });
  ++in_flight_;
}

void LlmClient::release_slot() {
  {
    std::lock_guard lock(slots_mu_);
    --in_flight_;
  }
  slots_cv_.notify_one();
}

void LlmClient::take_token() {
  if (config_.requests_per_second <= 0) return;
  const double capacity = std::max(1.0, config_.burst);
  std::unique_lock lock(bucket_mu_);
  while (true) {
    const auto now = std::chrono::steady_clock::now();
    const double elapsed = std::chrono::duration<double>(now - refilled_).count();
    tokens_ = std::min(capacity, tokens_ + elapsed * config_.requests_per_second);
    refilled_ = now;
    if (tokens_ >= 1.0) {
      tokens_ -= 1.0;
      return;
    }
    const double wait = (1.0 - tokens_) / config_.requests_per_second;
    lock.unlock();
    std::this_thread::sleep_for(std::chrono::duration<double>(wait));
    lock.lock();
  }
}

std::string LlmClient::complete(const std::string& prompt) {
  nlohmann::json body;
  body["model"] = config_.model;
  body["temperature"] = config_.temperature;
  body["messages"] = nlohmann::json::array();
  if (config_.system_message) body["messages"].push_back({{"role", "system"}, {"content", *config_.system_message}});
  body["messages"].push_back({{"role", "user"}, {"content", prompt}});
  const std::string payload = body.dump();

  httplib::Headers headers;
  if (!config_.api_key.empty()) {
    const bool bearer = config_.api_key_header == "Authorization";
    headers.emplace(config_.api_key_header, bearer ? "Bearer " + config_.api_key : config_.api_key);
  }

  std::chrono::milliseconds backoff = config_.initial_backoff;
  std::string last_error;
  int last_status = 0;
  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(backoff);
      backoff = std::min(config_.max_backoff, backoff * 2);
    }
    take_token();
    acquire_slot();
    httplib::Result res;
    try {
      httplib::Client client(config_.base_url);
      client.set_connection_timeout(config_.timeout);
      client.set_read_timeout(config_.timeout);
      client.set_write_timeout(config_.timeout);
      ++attempts_;
      res = client.Post(config_.path, headers, payload, "application/json");
    } catch (...) {
      release_slot();
      throw;
    }
    release_slot();

    if (!res) {
      last_status = 0;
      last_error = httplib::to_string(res.error());
      continue;
    }
    const int status = res->status;
    if (status == 401 || status == 403)
      throw LlmError(LlmError::Kind::Auth, status, "authentication failed (HTTP " + std::to_string(status) + ")");
    if (retryable(status)) {
      last_status = status;
      last_error = "HTTP " + std::to_string(status);
      continue;
    }
    if (status < 200 || status >= 300)
      throw LlmError(LlmError::Kind::Rejected, status, "request rejected (HTTP " + std::to_string(status) + ")");

    const auto parsed = nlohmann::json::parse(res->body, nullptr, false);
    if (parsed.is_discarded()) throw LlmError(LlmError::Kind::Malformed, status, "response body is not JSON");
    try {
      return parsed.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception&) {
      throw LlmError(LlmError::Kind::Malformed, status, "response lacks choices[0].message.content");
    }
  }
  throw LlmError(LlmError::Kind::Transport, last_status,
                 "gave up after " + std::to_string(config_.max_retries + 1) + " attempts: " + last_error);
}

}  // namespace ppnl
