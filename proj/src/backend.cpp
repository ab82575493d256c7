#include "c2j/backend.hpp"

#include <chrono>
#include <map>
#include <mutex>

#include "httplib.h"
#include "json.hpp"

namespace c2j {

namespace {

using nlohmann::json;

double now_seconds() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

std::mutex& backend_serial_mutex(const std::string& name) {
  static std::mutex registry_mu;
  static std::map<std::string, std::mutex> registry;
  std::lock_guard<std::mutex> lock(registry_mu);
  return registry[name];
}

RawCompletion complete_mock(const BackendSpec& backend,
                            const RenderedPrompt& prompt) {
  RawCompletion out;
  out.backend = backend.name;
  out.latency_s = 0.0;
  for (const auto& rule : backend.script) {
    if (!rule.match.empty() &&
        prompt.text.find(rule.match) != std::string::npos) {
      out.text = rule.reply;
      return out;
    }
  }
  out.text = backend.mock_default_reply;
  return out;
}

RawCompletion complete_remote(const BackendSpec& backend,
                              const RenderedPrompt& prompt) {
  std::lock_guard<std::mutex> serialize(backend_serial_mutex(backend.name));

  httplib::Client client(backend.endpoint);
  double t = backend.gen_params.timeout_s;
  auto secs = static_cast<time_t>(t);
  auto usecs = static_cast<long>((t - static_cast<double>(secs)) * 1e6);
  client.set_connection_timeout(secs, usecs);
  client.set_read_timeout(secs, usecs);
  client.set_write_timeout(secs, usecs);

  json body = {
      {"model", backend.model_id},
      {"prompt", prompt.text},
      {"stream", false},
      {"options",
       {{"temperature", backend.gen_params.temperature},
        {"seed", backend.gen_params.seed},
        {"num_predict", backend.gen_params.max_tokens}}},
  };

  double start = now_seconds();
  httplib::Result res = client.Post("/api/generate", body.dump(),
                                    "application/json");
  double latency = now_seconds() - start;

  if (!res) {
    switch (res.error()) {
      case httplib::Error::ConnectionTimeout:
      case httplib::Error::Read:
      case httplib::Error::Write:
        throw BackendError(BackendError::Kind::Timeout,
                           "request to " + backend.endpoint + " timed out ("
                               + httplib::to_string(res.error()) + ")");
      default:
        throw BackendError(BackendError::Kind::Connection,
                           "cannot reach " + backend.endpoint + ": " +
                               httplib::to_string(res.error()));
    }
  }
  if (res->status == 404) {
    std::string msg = res->body;
    if (msg.find("not found") != std::string::npos ||
        msg.find("model") != std::string::npos)
      throw BackendError(BackendError::Kind::UnknownModel,
                         "model '" + backend.model_id + "' unknown at " +
                             backend.endpoint + ": " + msg,
                         404);
    throw BackendError(BackendError::Kind::HttpStatus,
                       "HTTP 404 from " + backend.endpoint + ": " + msg, 404);
  }
  if (res->status != 200)
    throw BackendError(BackendError::Kind::HttpStatus,
                       "HTTP " + std::to_string(res->status) + " from " +
                           backend.endpoint + ": " + res->body,
                       res->status);

  json reply;
  try {
    reply = json::parse(res->body);
  } catch (const json::exception& e) {
    throw BackendError(BackendError::Kind::BadResponse,
                       std::string("malformed completion response: ") +
                           e.what());
  }
  if (!reply.contains("response") || !reply["response"].is_string())
    throw BackendError(BackendError::Kind::BadResponse,
                       "completion response lacks a 'response' string");

  RawCompletion out;
  out.text = reply["response"].get<std::string>();
  out.latency_s = latency;
  out.backend = backend.name;
  return out;
}

}  // namespace

const char* backend_kind_name(BackendKind k) {
  switch (k) {
    case BackendKind::RuleEngine: return "rule_engine";
    case BackendKind::RemoteModel: return "remote_model";
    case BackendKind::Mock: return "mock";
  }
  return "?";
}

void BackendSpec::validate() const {
  if (name.empty()) fail(ErrorKind::Config, "backend with empty name");
  if (kind == BackendKind::RemoteModel) {
    if (endpoint.empty())
      fail(ErrorKind::Config,
           "remote backend '" + name + "' needs an endpoint");
    if (model_id.empty())
      fail(ErrorKind::Config,
           "remote backend '" + name + "' needs a model id");
  }
}

RawCompletion complete(const BackendSpec& backend,
                       const RenderedPrompt& prompt) {
  switch (backend.kind) {
    case BackendKind::Mock:
      return complete_mock(backend, prompt);
    case BackendKind::RemoteModel:
      return complete_remote(backend, prompt);
    case BackendKind::RuleEngine:
      fail(ErrorKind::Internal,
           "the rule engine translates locally; it has no completions");
  }
  fail(ErrorKind::Internal, "unknown backend kind");
}

}  // namespace c2j
