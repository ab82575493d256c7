#pragma once

#include <optional>
#include <string>
#include <vector>

#include "c2j/source.hpp"

namespace c2j {

// One #define directive, harvested before parsing so macro invocations can be
// inlined at translation time with their side effects intact.
struct MacroDef {
  std::string name;
  // Present only for function-like macros; object-like macros have no
  // parameter list at all.
  std::optional<std::vector<std::string>> params;
  // Replacement text with line continuations already spliced.
  std::string body;
  bool multiline = false;
  // Full directive text and location in the original file.
  std::string verbatim;
  Span span;

  bool function_like() const { return params.has_value(); }
};

// Returns every #define in order of appearance.
std::vector<MacroDef> extract_macros(const CSourceFile& source);

}  // namespace c2j
