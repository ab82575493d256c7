#include "doctest.h"

#include <cstdlib>

#include "c2j/config.hpp"

using namespace c2j;

TEST_SUITE("config") {

TEST_CASE("defaults carry a rule_engine backend and sane limits") {
  RunConfig cfg = RunConfig::defaults();
  REQUIRE(cfg.backends.size() == 1);
  CHECK(cfg.backends[0].name == "rule_engine");
  CHECK(cfg.backends[0].kind == BackendKind::RuleEngine);
  CHECK(cfg.corpus == "builtin");
  CHECK(cfg.toolchain.compile_timeout_s == 30.0);
  CHECK(cfg.toolchain.run_timeout_s == 10.0);
  CHECK(cfg.parallelism >= 1);
}

TEST_CASE("a full config round-trips through json") {
  std::string text = R"({
    "toolchain": {
      "c_compiler": "gcc",
      "c_flags": ["-O1"],
      "java_compiler": "javac",
      "java_runtime": "java",
      "compile_timeout_s": 20,
      "run_timeout_s": 5
    },
    "backends": [
      {"name": "rule_engine", "kind": "rule_engine"},
      {"name": "local", "kind": "remote_model",
       "model_id": "m", "endpoint": "http://127.0.0.1:11434",
       "temperature": 0.0, "seed": 7, "max_tokens": 1024, "timeout_s": 60},
      {"name": "scripted", "kind": "mock",
       "script": [{"match": "int main", "reply": "x"}],
       "default_reply": "none"}
    ],
    "corpus": "builtin",
    "parallelism": 2,
    "output_dir": "out",
    "report_formats": ["markdown", "csv"]
  })";
  RunConfig cfg = RunConfig::from_json_text(text);
  CHECK(cfg.backends.size() == 3);
  CHECK(cfg.find_backend("local")->gen_params.seed == 7);
  CHECK(cfg.find_backend("scripted")->script.size() == 1);
  CHECK(cfg.toolchain.c_flags == std::vector<std::string>{"-O1"});

  RunConfig again = RunConfig::from_json_text(cfg.to_json());
  CHECK(again.to_json() == cfg.to_json());
  CHECK(again.parallelism == 2);
  CHECK(again.report_formats == std::vector<std::string>{"markdown", "csv"});
}

TEST_CASE("unknown keys are rejected at every level") {
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"colour": "red"})"), Error);
  CHECK_THROWS_AS(
      RunConfig::from_json_text(R"({"toolchain": {"gcc_path": "x"}})"), Error);
  CHECK_THROWS_AS(
      RunConfig::from_json_text(
          R"({"backends": [{"name": "a", "kind": "mock", "mood": "?"}]})"),
      Error);
}

TEST_CASE("invalid values are rejected with config errors") {
  CHECK_THROWS_AS(RunConfig::from_json_text("not json at all"), Error);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"parallelism": 0})"), Error);
  CHECK_THROWS_AS(
      RunConfig::from_json_text(R"({"report_formats": ["pdf"]})"), Error);
  CHECK_THROWS_AS(
      RunConfig::from_json_text(
          R"({"backends": [{"name": "r", "kind": "remote_model"}]})"),
      Error);
  CHECK_THROWS_AS(
      RunConfig::from_json_text(
          R"({"backends": [{"name": "a", "kind": "mock"},
                           {"name": "a", "kind": "mock"}]})"),
      Error);
  CHECK_THROWS_AS(
      RunConfig::from_json_text(R"({"toolchain": {"run_timeout_s": -1}})"),
      Error);
}

TEST_CASE("environment variables override toolchain commands") {
  setenv("C2J_CC", "my-cc", 1);
  setenv("C2J_JAVAC", "my-javac", 1);
  setenv("C2J_JAVA", "my-java", 1);
  RunConfig cfg = RunConfig::from_json_text("{}");
  CHECK(cfg.toolchain.c_compiler == "my-cc");
  CHECK(cfg.toolchain.java_compiler == "my-javac");
  CHECK(cfg.toolchain.java_runtime == "my-java");
  unsetenv("C2J_CC");
  unsetenv("C2J_JAVAC");
  unsetenv("C2J_JAVA");
}

}  // TEST_SUITE
