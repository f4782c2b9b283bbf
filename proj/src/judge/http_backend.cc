// Copyright 2026 The SemJudge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semjudge/judge/http_backend.h"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <cstdlib>
#include <regex>
#include <thread>

#include "semjudge/error.h"
#include "semjudge/judge/digest.h"

namespace semjudge::judge {
namespace {

std::atomic<std::size_t> g_request_count{0};

struct Endpoint {
  std::string origin;     // scheme://host[:port]
  std::string base_path;  // no trailing slash
};

Endpoint SplitEndpoint(const std::string& url) {
  static const std::regex kUrl(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(url, m, kUrl)) {
    throw Error(ErrorCode::kConfig, "malformed backend endpoint: " + url);
  }
  std::string path = m[2].str();
  while (!path.empty() && path.back() == '/') path.pop_back();
  return {m[1].str(), path};
}

bool Retryable(const httplib::Result& result) {
  if (!result) {
    return result.error() == httplib::Error::Read ||
           result.error() == httplib::Error::Write ||
           result.error() == httplib::Error::Connection ||
           result.error() == httplib::Error::ConnectionTimeout;
  }
  return result->status >= 500;
}

}  // namespace

nlohmann::json BuildChatBody(const ChatRequest& request) {
  nlohmann::json messages = nlohmann::json::array();
  for (const ChatTurn& turn : request.turns) {
    nlohmann::json content = nlohmann::json::array();
    if (turn.text) content.push_back({{"type", "text"}, {"text", *turn.text}});
    for (const ImagePayload& image : turn.images) {
      content.push_back({{"type", "image"},
                         {"media_type", image.media_type},
                         {"data", Base64Encode(image.bytes)}});
    }
    messages.push_back(
        {{"role", std::string(RoleName(turn.role))}, {"content", content}});
  }
  nlohmann::json body = {{"model", request.model},
                         {"messages", messages},
                         {"temperature", request.temperature}};
  if (request.seed) body["seed"] = *request.seed;
  return body;
}

std::string ExtractResponseText(const nlohmann::json& body) {
  auto text_of = [](const nlohmann::json& content) -> std::optional<std::string> {
    if (content.is_string()) return content.get<std::string>();
    if (content.is_array()) {
      std::string joined;
      for (const auto& part : content) {
        if (part.is_object() && part.contains("text") &&
            part["text"].is_string()) {
          joined += part["text"].get<std::string>();
        }
      }
      return joined;
    }
    return std::nullopt;
  };
  if (body.is_object()) {
    if (body.contains("content")) {
      if (auto t = text_of(body["content"])) return *t;
    }
    if (body.contains("message") && body["message"].is_object() &&
        body["message"].contains("content")) {
      if (auto t = text_of(body["message"]["content"])) return *t;
    }
    if (body.contains("choices") && body["choices"].is_array() &&
        !body["choices"].empty()) {
      const auto& first = body["choices"][0];
      if (first.is_object() && first.contains("message") &&
          first["message"].is_object() && first["message"].contains("content")) {
        if (auto t = text_of(first["message"]["content"])) return *t;
      }
    }
  }
  throw Error(ErrorCode::kTransport,
              "backend response carries no assistant content");
}

nlohmann::json PostJson(const BackendSpec& spec, const std::string& path,
                        const nlohmann::json& body) {
  const Endpoint endpoint = SplitEndpoint(spec.endpoint);
  httplib::Client client(endpoint.origin);
  const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(spec.timeout);
  const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
      spec.timeout - seconds);
  client.set_connection_timeout(seconds.count(), micros.count());
  client.set_read_timeout(seconds.count(), micros.count());
  client.set_write_timeout(seconds.count(), micros.count());

  httplib::Headers headers;
  if (const char* token = std::getenv(spec.auth_env.c_str());
      token != nullptr && *token != '\0') {
    headers.emplace("Authorization", std::string("Bearer ") + token);
  }
  const std::string payload = body.dump();
  const std::string target = endpoint.base_path + path;

  std::string last_problem;
  for (std::size_t attempt = 0; attempt <= spec.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(250 << (attempt - 1)));
    }
    ++g_request_count;
    httplib::Result result =
        client.Post(target, headers, payload, "application/json");
    if (result && result->status >= 200 && result->status < 300) {
      nlohmann::json parsed = nlohmann::json::parse(result->body, nullptr, false);
      if (parsed.is_discarded()) {
        throw Error(ErrorCode::kTransport,
                    "backend returned a non-JSON body from " + target);
      }
      return parsed;
    }
    last_problem = result ? "HTTP " + std::to_string(result->status)
                          : httplib::to_string(result.error());
    if (!Retryable(result)) break;
  }
  throw Error(ErrorCode::kTransport, "request to " + endpoint.origin + target +
                                         " failed: " + last_problem);
}

HttpBackend::HttpBackend(BackendSpec spec) : spec_(std::move(spec)) {
  ValidateBackendSpec(spec_);
}

std::string HttpBackend::Complete(const ChatRequest& request) {
  return ExtractResponseText(PostJson(spec_, "/chat", BuildChatBody(request)));
}

std::size_t HttpBackend::RequestCount() { return g_request_count.load(); }

}  // namespace semjudge::judge
