// Test-only toolchain shim around the subset evaluator, so the verification
// pipeline can be driven end to end on hosts without a JDK. One binary plays
// both roles, dispatching on its arguments:
//
//   jrun Foo.java          compiler shape: parse-check, enforce the
//                          public-class-matches-file-name rule
//   jrun -cp . Foo         runtime shape: evaluate Foo.java from the
//                          working directory and print its stdout
//
// It models the diagnostics the pipeline's classifier keys on, not the full
// toolchain. The acceptance criteria do not use it; they require the real
// javac/java.

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "jmini.hpp"

namespace {

int compile_mode(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::fprintf(stderr, "error: file not found: %s\n", path.c_str());
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  // file stem for the declared-class check
  std::string base = path;
  size_t slash = base.find_last_of('/');
  if (slash != std::string::npos) base = base.substr(slash + 1);
  std::string stem = base.substr(0, base.find_last_of('.'));

  // a parse failure is this shim's "does not compile"
  jmini::RunOutcome probe = jmini::run_unit(text);
  if (!probe.ok && probe.error.rfind("jmini parse:", 0) == 0) {
    std::fprintf(stderr, "%s:1: error: class, interface, or enum expected\n%s\n",
                 base.c_str(), probe.error.c_str());
    return 1;
  }

  // javac refuses a public class whose name does not match the file
  size_t cls = text.find("class ");
  if (cls != std::string::npos) {
    size_t name_begin = cls + 6;
    size_t name_end = name_begin;
    while (name_end < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[name_end])) ||
            text[name_end] == '_' || text[name_end] == '$'))
      ++name_end;
    std::string declared = text.substr(name_begin, name_end - name_begin);
    if (!declared.empty() && declared != stem) {
      std::fprintf(stderr,
                   "%s:1: error: class %s is public, should be declared in a "
                   "file named %s.java\n",
                   base.c_str(), declared.c_str(), declared.c_str());
      return 1;
    }
  }
  return 0;
}

int run_mode(const std::string& class_name) {
  std::string path = class_name + ".java";
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::fprintf(stderr, "Error: Could not find or load main class %s\n",
                 class_name.c_str());
    return 1;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  jmini::RunOutcome outcome = jmini::run_unit(buf.str());
  std::fwrite(outcome.stdout_text.data(), 1, outcome.stdout_text.size(),
              stdout);
  std::fflush(stdout);
  if (!outcome.ok) {
    std::fprintf(stderr, "%s\n", outcome.error.c_str());
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc >= 2 && (std::strcmp(argv[1], "--version") == 0 ||
                    std::strcmp(argv[1], "-version") == 0)) {
    std::printf("jrun (subset evaluator toolchain shim)\n");
    return 0;
  }
  if (argc >= 2 && std::strcmp(argv[1], "-cp") == 0 && argc >= 4)
    return run_mode(argv[3]);
  if (argc >= 2) {
    std::string arg = argv[1];
    if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".java")
      return compile_mode(arg);
    return run_mode(arg);
  }
  std::fprintf(stderr, "usage: jrun <file.java> | jrun -cp <dir> <Class>\n");
  return 2;
}
