#pragma once

#include <string>
#include <vector>

#include "c2j/context.hpp"

namespace c2j {

// Registry of translation rules, in the deterministic order they are
// reported. The first seventeen drive rewrites inside translate_function;
// R-bitfield rewrites member access against bitfield records; R-global and
// R-nested are diagnostic markers for idioms whose translation lives in
// translate_global / translate_record.
enum class RuleId {
  GotoFwd,
  GotoBack,
  Union,
  Unsigned,
  Addr,
  Ptr,
  Copy,
  Macro,
  Bool,
  Mem,
  Str,
  VoidPtr,
  OutParam,
  FnPtr,
  Enum,
  Sizeof,
  Switch,
  Bitfield,
  Global,
  Nested,
};

struct RuleInfo {
  RuleId id;
  const char* name;         // stable id, e.g. "R-goto-fwd"
  const char* description;  // one line, for reports
};

const std::vector<RuleInfo>& rule_registry();
const char* rule_name(RuleId id);

// Deterministic, stable list of rules that apply to one function in context.
// Purely structural: never fails on translatable or untranslatable input.
std::vector<RuleId> applicable_rules(const FunctionDecl& fn,
                                     const TranslationContext& ctx);

// Union over all functions of a decomposition, in registry order.
std::vector<RuleId> applicable_rules(const CDecomposition& parts,
                                     const TranslationContext& ctx);

}  // namespace c2j
