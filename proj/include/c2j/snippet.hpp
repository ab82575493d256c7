#pragma once

#include <string>

namespace c2j {

enum class SnippetKind { StaticField, NestedClass, Method };

// One translated Java fragment. Empty text is legal only for translated
// unions, which produce nothing by rule.
struct JavaSnippet {
  SnippetKind kind = SnippetKind::Method;
  std::string name;
  std::string text;

  bool empty() const { return text.empty(); }
};

const char* snippet_kind_name(SnippetKind k);

}  // namespace c2j
