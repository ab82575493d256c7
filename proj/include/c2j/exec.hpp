#pragma once

#include <string>
#include <vector>

namespace c2j {

// One spawned process, captured and reaped. stdout is kept as raw bytes with
// no newline normalization; stderr is captured separately.
struct ExecResult {
  bool spawn_failed = false;
  std::string spawn_error;
  bool timed_out = false;
  bool signaled = false;
  int term_signal = 0;
  int exit_code = -1;
  std::string stdout_bytes;
  std::string stderr_text;
  double duration_s = 0.0;
};

// Runs argv[0] with the given arguments in `workdir` (empty: inherit cwd),
// killing the whole process group after timeout_s. Always reaps the child.
ExecResult run_process(const std::vector<std::string>& argv,
                       const std::string& workdir, double timeout_s);

// True when `cmd` resolves to an executable (absolute/relative path or PATH
// lookup).
bool command_exists(const std::string& cmd);

}  // namespace c2j
