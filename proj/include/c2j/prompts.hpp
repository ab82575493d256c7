#pragma once

#include <string>

#include "c2j/context.hpp"

namespace c2j {

enum class PromptKind { Function, Global, Record };

const char* prompt_kind_name(PromptKind k);

// A fully substituted template plus the C entity it asks about. Outside the
// placeholders the text is byte-identical to the embedded templates.
struct RenderedPrompt {
  PromptKind kind = PromptKind::Function;
  std::string text;
  std::string payload_name;
};

// The three guardrail templates, as embedded.
const std::string& prompt_template(PromptKind kind);

// Fills the template for `kind` with the verbatim C payload. Context slots
// render as the literal token (none) when the file has no globals/records.
RenderedPrompt render_prompt(PromptKind kind, const std::string& payload,
                             const std::string& payload_name,
                             const TranslationContext& ctx);

}  // namespace c2j
