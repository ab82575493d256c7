#pragma once

#include <string>
#include <vector>

#include "c2j/backend.hpp"
#include "c2j/verify.hpp"

namespace c2j {

// Declarative run configuration. Loaded from a single json file; unknown
// keys anywhere are rejected. Environment variables C2J_CC / C2J_JAVAC /
// C2J_JAVA override the toolchain commands after loading.
struct RunConfig {
  ToolchainConfig toolchain;
  std::vector<BackendSpec> backends;
  std::string corpus = "builtin";  // or a directory of test_N.c files
  int parallelism = 4;
  std::string output_dir = "c2j-runs";
  std::vector<std::string> report_formats = {"markdown", "json", "csv"};

  static RunConfig defaults();
  static RunConfig load(const std::string& path);
  static RunConfig from_json_text(const std::string& text);
  std::string to_json() const;

  const BackendSpec* find_backend(const std::string& name) const;
};

}  // namespace c2j
