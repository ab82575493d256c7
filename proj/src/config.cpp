#include "c2j/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace c2j {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!known.count(key))
      fail(ErrorKind::Config, "unknown key '" + key + "' in " + where);
  }
}

ToolchainConfig toolchain_from_json(const json& j) {
  reject_unknown_keys(j,
                      {"c_compiler", "c_flags", "java_compiler", "java_runtime",
                       "compile_timeout_s", "run_timeout_s"},
                      "toolchain");
  ToolchainConfig t;
  if (j.contains("c_compiler")) t.c_compiler = j["c_compiler"].get<std::string>();
  if (j.contains("c_flags"))
    t.c_flags = j["c_flags"].get<std::vector<std::string>>();
  if (j.contains("java_compiler"))
    t.java_compiler = j["java_compiler"].get<std::string>();
  if (j.contains("java_runtime"))
    t.java_runtime = j["java_runtime"].get<std::string>();
  if (j.contains("compile_timeout_s"))
    t.compile_timeout_s = j["compile_timeout_s"].get<double>();
  if (j.contains("run_timeout_s"))
    t.run_timeout_s = j["run_timeout_s"].get<double>();
  if (t.compile_timeout_s <= 0 || t.run_timeout_s <= 0)
    fail(ErrorKind::Config, "timeouts must be positive");
  return t;
}

BackendSpec backend_from_json(const json& j) {
  reject_unknown_keys(j,
                      {"name", "kind", "model_id", "endpoint", "temperature",
                       "seed", "max_tokens", "timeout_s", "script",
                       "default_reply"},
                      "backend");
  BackendSpec b;
  if (!j.contains("name") || !j.contains("kind"))
    fail(ErrorKind::Config, "backend entries need name and kind");
  b.name = j["name"].get<std::string>();
  std::string kind = j["kind"].get<std::string>();
  if (kind == "rule_engine")
    b.kind = BackendKind::RuleEngine;
  else if (kind == "remote_model")
    b.kind = BackendKind::RemoteModel;
  else if (kind == "mock")
    b.kind = BackendKind::Mock;
  else
    fail(ErrorKind::Config, "unknown backend kind '" + kind + "'");
  if (j.contains("model_id")) b.model_id = j["model_id"].get<std::string>();
  if (j.contains("endpoint")) b.endpoint = j["endpoint"].get<std::string>();
  if (j.contains("temperature"))
    b.gen_params.temperature = j["temperature"].get<double>();
  if (j.contains("seed")) b.gen_params.seed = j["seed"].get<long long>();
  if (j.contains("max_tokens"))
    b.gen_params.max_tokens = j["max_tokens"].get<long long>();
  if (j.contains("timeout_s"))
    b.gen_params.timeout_s = j["timeout_s"].get<double>();
  if (j.contains("script")) {
    for (const auto& entry : j["script"]) {
      reject_unknown_keys(entry, {"match", "reply"}, "mock script entry");
      MockRule rule;
      rule.match = entry.value("match", "");
      rule.reply = entry.value("reply", "");
      b.script.push_back(std::move(rule));
    }
  }
  if (j.contains("default_reply"))
    b.mock_default_reply = j["default_reply"].get<std::string>();
  b.validate();
  return b;
}

json backend_to_json(const BackendSpec& b) {
  json j;
  j["name"] = b.name;
  j["kind"] = backend_kind_name(b.kind);
  if (!b.model_id.empty()) j["model_id"] = b.model_id;
  if (!b.endpoint.empty()) j["endpoint"] = b.endpoint;
  j["temperature"] = b.gen_params.temperature;
  j["seed"] = b.gen_params.seed;
  j["max_tokens"] = b.gen_params.max_tokens;
  j["timeout_s"] = b.gen_params.timeout_s;
  if (!b.script.empty()) {
    json script = json::array();
    for (const auto& rule : b.script)
      script.push_back({{"match", rule.match}, {"reply", rule.reply}});
    j["script"] = std::move(script);
  }
  if (!b.mock_default_reply.empty()) j["default_reply"] = b.mock_default_reply;
  return j;
}

}  // namespace

RunConfig RunConfig::defaults() {
  RunConfig cfg;
  cfg.toolchain = ToolchainConfig::with_env_overrides(ToolchainConfig{});
  BackendSpec rule_engine;
  rule_engine.name = "rule_engine";
  rule_engine.kind = BackendKind::RuleEngine;
  cfg.backends.push_back(std::move(rule_engine));
  return cfg;
}

RunConfig RunConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::Config, std::string("config is not valid json: ") + e.what());
  }
  reject_unknown_keys(j,
                      {"toolchain", "backends", "corpus", "parallelism",
                       "output_dir", "report_formats"},
                      "config");
  RunConfig cfg;
  if (j.contains("toolchain")) cfg.toolchain = toolchain_from_json(j["toolchain"]);
  cfg.toolchain = ToolchainConfig::with_env_overrides(cfg.toolchain);
  if (j.contains("backends")) {
    cfg.backends.clear();
    std::set<std::string> names;
    for (const auto& entry : j["backends"]) {
      BackendSpec b = backend_from_json(entry);
      if (!names.insert(b.name).second)
        fail(ErrorKind::Config, "duplicate backend name '" + b.name + "'");
      cfg.backends.push_back(std::move(b));
    }
  } else {
    cfg.backends = defaults().backends;
  }
  if (j.contains("corpus")) cfg.corpus = j["corpus"].get<std::string>();
  if (j.contains("parallelism")) {
    cfg.parallelism = j["parallelism"].get<int>();
    if (cfg.parallelism < 1)
      fail(ErrorKind::Config, "parallelism must be at least 1");
  }
  if (j.contains("output_dir"))
    cfg.output_dir = j["output_dir"].get<std::string>();
  if (j.contains("report_formats")) {
    cfg.report_formats =
        j["report_formats"].get<std::vector<std::string>>();
    for (const auto& f : cfg.report_formats)
      if (f != "csv" && f != "json" && f != "markdown")
        fail(ErrorKind::Config, "unknown report format '" + f + "'");
  }
  return cfg;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Config, "cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

std::string RunConfig::to_json() const {
  json j;
  j["toolchain"] = {
      {"c_compiler", toolchain.c_compiler},
      {"c_flags", toolchain.c_flags},
      {"java_compiler", toolchain.java_compiler},
      {"java_runtime", toolchain.java_runtime},
      {"compile_timeout_s", toolchain.compile_timeout_s},
      {"run_timeout_s", toolchain.run_timeout_s},
  };
  json backends = json::array();
  for (const auto& b : this->backends) backends.push_back(backend_to_json(b));
  j["backends"] = std::move(backends);
  j["corpus"] = corpus;
  j["parallelism"] = parallelism;
  j["output_dir"] = output_dir;
  j["report_formats"] = report_formats;
  return j.dump(2) + "\n";
}

const BackendSpec* RunConfig::find_backend(const std::string& name) const {
  for (const auto& b : backends)
    if (b.name == name) return &b;
  return nullptr;
}

}  // namespace c2j
