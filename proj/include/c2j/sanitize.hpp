#pragma once

#include <optional>
#include <string>
#include <vector>

namespace c2j {

enum class SanitizeAction {
  FenceStripped,
  ProseStripped,
  ImportsStripped,
  ExtraDefinitionsDiscarded,
  ExtractionFailed,
};

const char* sanitize_action_name(SanitizeAction a);

// Audit trail of one cleaning pass over an untrusted completion.
struct SanitizeReport {
  size_t input_bytes = 0;
  size_t output_bytes = 0;
  std::vector<SanitizeAction> actions;
  std::optional<std::string> result;  // absent iff extraction failed

  bool failed() const { return !result.has_value(); }
};

enum class DefinitionKind { Method, Class, Field };

// Removes markdown fences (content kept) and drops lines outside any code
// region that do not begin a Java declaration. Never synthesizes text.
std::string strip_fences_and_prose(const std::string& raw);

// Removes only the fence marker lines; exposed so tests can check the
// containment property against exactly this intermediate form.
std::string strip_fences_only(const std::string& raw);

// Removes every top-level line beginning with the import keyword. Lines
// inside braces or string literals are preserved.
std::string strip_imports(const std::string& text);

// Brace-count search for the first definition named `expected_name`,
// spanning its signature to the balance-closing brace (fields: to the
// terminating semicolon). String-, char- and comment-aware. Everything else
// is discarded. Returns nothing when no such definition exists.
std::optional<std::string> extract_single_definition(const std::string& text,
                                                     const std::string& expected_name,
                                                     DefinitionKind kind);

// Full chain: fences/prose, imports, single-definition extraction.
SanitizeReport sanitize_completion(const std::string& raw,
                                   const std::string& expected_name,
                                   DefinitionKind kind);

}  // namespace c2j
