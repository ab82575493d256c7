#pragma once

#include <map>
#include <string>

#include "c2j/decompose.hpp"

namespace c2j {

// Symbol views a function translation resolves against. Every identifier a
// function references that is not a local or parameter must resolve in
// exactly one of these, or translation fails with an unresolved-symbol error.
struct TranslationContext {
  struct RecordView {
    const RecordDecl* decl = nullptr;
    RecordKind kind = RecordKind::Struct;
    std::string java_name;
    bool has_bitfields = false;
  };
  struct EnumConstView {
    std::string enum_tag;
    long long value = 0;
  };

  std::string class_name;  // Java class the unit assembles into
  // verbatim C text of globals/records, newline-joined, for prompt context
  std::string globals_context_text;
  std::string records_context_text;
  std::map<std::string, const VarDecl*> globals;
  std::map<std::string, RecordView> records;  // structs and unions
  std::map<std::string, const MacroDef*> macros;
  std::map<std::string, const RecordDecl*> enums;
  std::map<std::string, EnumConstView> enum_consts;
  std::map<std::string, const FunctionDecl*> functions;

  static TranslationContext build(const CDecomposition& parts);

  const RecordView* find_record(const std::string& tag) const {
    auto it = records.find(tag);
    return it == records.end() ? nullptr : &it->second;
  }
  const FieldDecl* find_field(const std::string& tag,
                              const std::string& field) const;
};

}  // namespace c2j
