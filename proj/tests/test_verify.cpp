#include "doctest.h"

#include <filesystem>

#include "c2j/verify.hpp"

using namespace c2j;

namespace {

std::string scratch_dir(const char* leaf) {
  auto dir = std::filesystem::temp_directory_path() / "c2j-verify" / leaf;
  std::filesystem::create_directories(dir);
  return dir.string();
}

ToolchainConfig toolchain() { return ToolchainConfig::with_env_overrides({}); }

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("identical outputs pass") {
  Verdict v = compare_outputs("42\n", "42\n");
  CHECK(v.outcome == Outcome::Pass);
  CHECK_FALSE(v.category.has_value());
}

TEST_CASE("strictness: a trailing newline is a mismatch") {
  Verdict v = compare_outputs("42", "42\n");
  CHECK(v.outcome == Outcome::OutputMismatch);
  CHECK(v.divergence_offset == 2);
}

TEST_CASE("first divergence offset is exact") {
  Verdict v = compare_outputs("42\n", "42 \n");
  CHECK(v.outcome == Outcome::OutputMismatch);
  CHECK(v.divergence_offset == 2);
  Verdict v2 = compare_outputs("abc", "abd");
  CHECK(v2.divergence_offset == 2);
  Verdict v3 = compare_outputs("", "x");
  CHECK(v3.divergence_offset == 0);
}

TEST_CASE("run_c compiles and runs a hello program") {
  ToolchainConfig cfg = toolchain();
  REQUIRE(probe_toolchain(cfg).c_side());
  CSourceFile src("hello.c",
                  "#include <stdio.h>\nint main() { printf(\"Hello\\n\"); return 0; }\n");
  RunPair pair = run_c(src, cfg, scratch_dir("hello"));
  CHECK(pair.compile.ok());
  REQUIRE(pair.run.has_value());
  CHECK(pair.run->exit_code == 0);
  CHECK(pair.run->stdout_bytes == "Hello\n");
}

TEST_CASE("C syntax errors surface as a failed compile phase") {
  ToolchainConfig cfg = toolchain();
  REQUIRE(probe_toolchain(cfg).c_side());
  CSourceFile src("bad.c", "int main() { int x = ; }\n");
  RunPair pair = run_c(src, cfg, scratch_dir("bad"));
  CHECK_FALSE(pair.compile.ok());
  CHECK(pair.compile.exit_code != 0);
  CHECK_FALSE(pair.run.has_value());
}

TEST_CASE("an infinite loop is killed within the configured bound") {
  ToolchainConfig cfg = toolchain();
  REQUIRE(probe_toolchain(cfg).c_side());
  cfg.run_timeout_s = 2.0;
  CSourceFile src("spin.c", "int main() { for (;;) { } return 0; }\n");
  auto start = std::chrono::steady_clock::now();
  RunPair pair = run_c(src, cfg, scratch_dir("spin"));
  double elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  REQUIRE(pair.run.has_value());
  CHECK(pair.run->timed_out);
  CHECK(elapsed < cfg.run_timeout_s + 2.0 + cfg.compile_timeout_s);
}

TEST_CASE("classification: boilerplate failures") {
  Verdict v;
  v.outcome = Outcome::JavaRuntimeFail;
  CHECK(classify(v,
                 "Error: Main method must return a value of type void in class "
                 "test_4, please\ndefine the main method as:\n"
                 "   public static void main(String[] args)",
                 "public class test_4 { }", "T4") ==
        FailureCategory::BoilerplateSyntax);
  CHECK(classify(v,
                 "Error: Could not find or load main class test_9\n"
                 "Caused by: java.lang.ClassNotFoundException: test_9",
                 "", "T9") == FailureCategory::BoilerplateSyntax);
  Verdict c;
  c.outcome = Outcome::JavaCompileFail;
  CHECK(classify(c,
                 "test_2.java:1: error: class, interface, or enum expected\n"
                 "Here is the translation you asked for\n^",
                 "Here is the translation you asked for", "T2") ==
        FailureCategory::BoilerplateSyntax);
}

TEST_CASE("classification: literal C translation") {
  Verdict v;
  v.outcome = Outcome::JavaCompileFail;
  CHECK(classify(v,
                 "test_15.java:9: error: cannot find symbol\n"
                 "        Node n = malloc(8);\n"
                 "                 ^\n  symbol:   method malloc(int)",
                 "", "T15") == FailureCategory::LiteralCTranslation);
  Verdict r;
  r.outcome = Outcome::JavaRuntimeFail;
  CHECK(classify(r,
                 "Exception in thread \"main\" "
                 "java.util.UnknownFormatConversionException: Conversion = 'u'",
                 "", "T5") == FailureCategory::LiteralCTranslation);
  // C-isms visible in the unit text even without a diagnostic
  Verdict q;
  q.outcome = Outcome::JavaCompileFail;
  CHECK(classify(q, "some unrelated diagnostic",
                 "public class t { void f() { strcpy(a, b); } }", "T14") ==
        FailureCategory::LiteralCTranslation);
}

TEST_CASE("classification: semantic and advanced buckets") {
  Verdict mismatch;
  mismatch.outcome = Outcome::OutputMismatch;
  CHECK(classify(mismatch, "", "public class t { }", "T13") ==
        FailureCategory::SemanticLogic);
  Verdict unknown;
  unknown.outcome = Outcome::JavaCompileFail;
  CHECK(classify(unknown, "error: incompatible types: possible lossy conversion",
                 "public class t { }", "T18") ==
        FailureCategory::AdvancedConcept);
  CHECK(classify(unknown, "error: incompatible types: possible lossy conversion",
                 "public class t { }", "T2") ==
        FailureCategory::BoilerplateSyntax);
  // total: always labels, even with nothing to go on
  Verdict bare;
  bare.outcome = Outcome::JavaCompileFail;
  CHECK(classify(bare, "", "", "") == FailureCategory::BoilerplateSyntax);
}

TEST_CASE("baseline cache computes once and reuses bytes") {
  ToolchainConfig cfg = toolchain();
  REQUIRE(probe_toolchain(cfg).c_side());
  std::string dir = scratch_dir("cache");
  BaselineCache cache(dir);
  CSourceFile src("cached.c",
                  "#include <stdio.h>\nint main() { printf(\"cached\\n\"); return 0; }\n");
  const auto& first = cache.get(src, cfg, dir);
  REQUIRE(first.ok);
  CHECK(first.stdout_bytes == "cached\n");
  const auto& again = cache.get(src, cfg, dir);
  CHECK(&first == &again);

  // a fresh cache instance over the same directory reads the persisted bytes
  BaselineCache second(dir);
  const auto& reloaded = second.get(src, cfg, dir);
  CHECK(reloaded.ok);
  CHECK(reloaded.stdout_bytes == "cached\n");
}

TEST_CASE("cache reports C failures as verdicts") {
  ToolchainConfig cfg = toolchain();
  REQUIRE(probe_toolchain(cfg).c_side());
  std::string dir = scratch_dir("cache-bad");
  BaselineCache cache(dir);
  CSourceFile src("broken.c", "int main() { syntax error }\n");
  const auto& entry = cache.get(src, cfg, dir);
  CHECK_FALSE(entry.ok);
  CHECK(entry.failure.outcome == Outcome::CCompileFail);
}

TEST_CASE("verify_translation needs a Java toolchain") {
  ToolchainConfig cfg = toolchain();
  ToolchainStatus status = probe_toolchain(cfg);
  if (!status.java_side()) {
    // the probe is the contract surface on JDK-less hosts
    CHECK_FALSE(status.java_side());
    return;
  }
  CSourceFile src("ok.c",
                  "#include <stdio.h>\nint main() { printf(\"x\\n\"); return 0; }\n");
  JavaCompilationUnit unit;
  unit.class_name = "ok";
  unit.text =
      "public class ok {\n"
      "    public static void main(String[] args) {\n"
      "        System.out.printf(\"x\\n\");\n"
      "    }\n"
      "}\n";
  Verdict v = verify_translation(src, unit, cfg, scratch_dir("pair"));
  CHECK(v.outcome == Outcome::Pass);
}

}  // TEST_SUITE
