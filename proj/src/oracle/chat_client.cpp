#include "plansim/oracle/chat_client.hpp"

#include <cstdlib>
#include <httplib.h>
#include <json.hpp>

namespace plansim::oracle {

ChatClient::ChatClient(ChatConfig config) : config_(std::move(config)) {
  scheme_host_ = config_.base_url;
  while (!scheme_host_.empty() && scheme_host_.back() == '/') scheme_host_.pop_back();
}

std::string ChatClient::complete(const std::vector<ChatMessage>& messages) const {
  nlohmann::json payload;
  payload["model"] = config_.model;
  payload["temperature"] = config_.temperature;
  nlohmann::json msgs = nlohmann::json::array();
  for (const auto& m : messages) msgs.push_back({{"role", m.role}, {"content", m.content}});
  payload["messages"] = msgs;
  const std::string body = payload.dump();

  httplib::Headers headers = {{"Content-Type", "application/json"}};
  if (const char* key = std::getenv(config_.api_key_env.c_str()); key && *key)
    headers.emplace("Authorization", std::string("Bearer ") + key);

  std::string last_error;
  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    httplib::Client client(scheme_host_);
    client.set_read_timeout(config_.timeout_seconds, 0);
    client.set_write_timeout(config_.timeout_seconds, 0);
    auto res = client.Post(config_.path, headers, body, "application/json");
    if (!res) {
      last_error = "transport error: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status != 200) {
      last_error = "HTTP " + std::to_string(res->status) + ": " + res->body;
      continue;
    }
    try {
      auto j = nlohmann::json::parse(res->body);
      return j.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      last_error = std::string("malformed completion body: ") + e.what();
    }
  }
  throw TransportError("chat completion failed after " +
                       std::to_string(config_.max_retries + 1) + " attempts; last error: " +
                       last_error);
}

}  // namespace plansim::oracle
