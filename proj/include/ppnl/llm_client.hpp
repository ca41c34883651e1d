#pragma once

// Minimal chat-completion client: one user message per request, bounded
// retries with exponential backoff, a cap on in-flight requests and a
// token-bucket rate limit shared by every caller of the same client.

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

namespace ppnl {

struct LlmConfig {
  std::string base_url;                        // e.g. "https://api.example.com"
  std::string path = "/v1/chat/completions";
  std::string api_key;
  std::string api_key_header = "Authorization";  // value sent as "Bearer <key>"
  std::string model;
  double temperature = 0.0;
  std::optional<std::string> system_message;   // omitted by default
  int max_retries = 5;
  std::chrono::milliseconds initial_backoff{500};
  std::chrono::milliseconds max_backoff{20000};
  std::chrono::milliseconds timeout{60000};
  int max_in_flight = 4;
  double requests_per_second = 0.0;            // 0 disables the rate limit
  double burst = 1.0;

  /// Reads PPNL_LLM_BASE_URL, PPNL_LLM_PATH, PPNL_LLM_API_KEY,
  /// PPNL_LLM_API_KEY_HEADER, PPNL_LLM_MODEL, PPNL_LLM_MAX_RETRIES,
  /// PPNL_LLM_RATE_LIMIT, PPNL_LLM_MAX_IN_FLIGHT and PPNL_LLM_TIMEOUT_MS.
  /// Throws std::invalid_argument when the base URL or model is missing.
  static LlmConfig from_env();
};

class LlmError : public std::runtime_error {
 public:
  enum class Kind : std::uint8_t {
    Transport,  // connection failure, timeout, or retries exhausted
    Malformed,  // response body is not a completion
    Auth,       // 401 or 403
    Rejected,   // other non-retryable HTTP status
  };

  LlmError(Kind kind, int status, const std::string& what) : std::runtime_error(what), kind_(kind), status_(status) {}
  Kind kind() const { return kind_; }
  int status() const { return status_; }  // 0 when no response arrived

 private:
  Kind kind_;
  int status_;
};

std::string_view to_string(LlmError::Kind k);

class LlmClient {
 public:
  explicit LlmClient(LlmConfig config);

  /// Returns choices[0].message.content. Throws LlmError.
  std::string complete(const std::string& prompt);

  const LlmConfig& config() const { return config_; }
  /// HTTP attempts made so far, retries included.
  std::uint64_t attempts() const { return attempts_.load(); }

 private:
  void acquire_slot();
  void release_slot();
  void take_token();

  LlmConfig config_;
  std::atomic<std::uint64_t> attempts_{0};

  std::mutex slots_mu_;
  std::condition_variable slots_cv_;
  int in_flight_ = 0;

  std::mutex bucket_mu_;
  double tokens_ = 0;
  std::chrono::steady_clock::time_point refilled_;
};

}  // namespace ppnl
