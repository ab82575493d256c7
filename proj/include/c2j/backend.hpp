#pragma once

#include <string>
#include <vector>

#include "c2j/error.hpp"
#include "c2j/prompts.hpp"

namespace c2j {

struct GenParams {
  double temperature = 0.0;
  long long seed = 42;
  long long max_tokens = 2048;
  double timeout_s = 120.0;
};

enum class BackendKind { RuleEngine, RemoteModel, Mock };

const char* backend_kind_name(BackendKind k);

// A scripted reply: the first entry whose `match` occurs inside the prompt
// text wins. Keys on the C payload text, which is unique per entity.
struct MockRule {
  std::string match;
  std::string reply;
};

struct BackendSpec {
  std::string name;
  BackendKind kind = BackendKind::RuleEngine;
  std::string model_id;  // remote only
  std::string endpoint;  // remote only, e.g. http://127.0.0.1:11434
  GenParams gen_params;
  std::vector<MockRule> script;  // mock only
  std::string mock_default_reply;

  void validate() const;
};

struct RawCompletion {
  std::string text;  // untrusted; never interpreted before sanitization
  double latency_s = 0.0;
  std::string backend;
};

// Distinct failure modes so infrastructure trouble never masquerades as a
// translation failure.
class BackendError : public Error {
 public:
  enum class Kind { Connection, HttpStatus, Timeout, UnknownModel, BadResponse };

  BackendError(Kind kind, std::string message, int http_status = 0)
      : Error(ErrorKind::Backend, std::move(message)),
        kind_(kind),
        http_status_(http_status) {}

  Kind backend_error() const { return kind_; }
  int http_status() const { return http_status_; }

 private:
  Kind kind_;
  int http_status_;
};

// Fetches one completion. Mock backends reply from their script; remote
// backends POST to an ollama-compatible /api/generate endpoint with
// temperature, seed and token limit from gen_params. Requests to one remote
// backend are serialized.
RawCompletion complete(const BackendSpec& backend, const RenderedPrompt& prompt);

}  // namespace c2j
