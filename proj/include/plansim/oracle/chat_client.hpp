#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plansim/util/error.hpp"

namespace plansim::oracle {

/// Connection settings for an OpenAI-compatible chat-completions endpoint.
/// The API key is only ever read from the named environment variable.
struct ChatConfig {
  std::string base_url = "https://api.openai.com";
  std::string path = "/v1/chat/completions";
  std::string model = "gpt-4o";
  std::string api_key_env = "OPENAI_API_KEY";
  double temperature = 0.2;
  int timeout_seconds = 120;
  int max_retries = 2;  // extra attempts on transport errors / malformed replies
};

struct ChatMessage {
  std::string role;  // "system" | "user" | "assistant"
  std::string content;
};

/// Minimal chat-completions client. Retries transport failures; callers that
/// parse replies retry malformed content through `max_retries` themselves.
class ChatClient {
 public:
  explicit ChatClient(ChatConfig config);

  /// Sends the conversation, returns choices[0].message.content.
  std::string complete(const std::vector<ChatMessage>& messages) const;

  const ChatConfig& config() const { return config_; }

 private:
  ChatConfig config_;
  std::string scheme_host_;  // e.g. "http://127.0.0.1:8811"
};

}  // namespace plansim::oracle
