#include "c2j/prompts.hpp"

#include "c2j/error.hpp"

namespace c2j {

namespace prompt_templates {
extern const char* const kFunctionTemplate;
extern const char* const kGlobalTemplate;
extern const char* const kStructTemplate;
}  // namespace prompt_templates

namespace {

std::string replace_all(std::string text, const std::string& placeholder,
                        const std::string& value) {
  size_t pos = 0;
  while ((pos = text.find(placeholder, pos)) != std::string::npos) {
    text.replace(pos, placeholder.size(), value);
    pos += value.size();
  }
  return text;
}

std::string or_none(const std::string& s) { return s.empty() ? "(none)" : s; }

}  // namespace

const char* prompt_kind_name(PromptKind k) {
  switch (k) {
    case PromptKind::Function: return "function";
    case PromptKind::Global: return "global";
    case PromptKind::Record: return "record";
  }
  return "?";
}

const std::string& prompt_template(PromptKind kind) {
  static const std::string function_tpl = prompt_templates::kFunctionTemplate;
  static const std::string global_tpl = prompt_templates::kGlobalTemplate;
  static const std::string struct_tpl = prompt_templates::kStructTemplate;
  switch (kind) {
    case PromptKind::Function: return function_tpl;
    case PromptKind::Global: return global_tpl;
    case PromptKind::Record: return struct_tpl;
  }
  fail(ErrorKind::Internal, "unknown prompt kind");
}

RenderedPrompt render_prompt(PromptKind kind, const std::string& payload,
                             const std::string& payload_name,
                             const TranslationContext& ctx) {
  if (payload.empty())
    fail(ErrorKind::Backend, "empty payload for prompt rendering");

  RenderedPrompt out;
  out.kind = kind;
  out.payload_name = payload_name;
  switch (kind) {
    case PromptKind::Function: {
      std::string text = prompt_template(kind);
      text = replace_all(text, "{function_code}", payload);
      text = replace_all(text, "{globals_context}",
                         or_none(ctx.globals_context_text));
      text = replace_all(text, "{structs_context}",
                         or_none(ctx.records_context_text));
      out.text = std::move(text);
      return out;
    }
    case PromptKind::Global:
    case PromptKind::Record:
      out.text = replace_all(prompt_template(kind), "{c_code}", payload);
      return out;
  }
  fail(ErrorKind::Backend, "unknown prompt kind");
}

}  // namespace c2j
