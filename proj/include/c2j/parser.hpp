#pragma once

#include "c2j/ast.hpp"
#include "c2j/source.hpp"

namespace c2j {

// Parses the supported C subset: scalar and unsigned types, floats, arrays,
// pointers (incl. pointer-to-pointer and function pointers), structs with
// bitfields and nesting, unions, enums, typedef, goto/labels, switch with
// fall-through, loops, sizeof, string literals, and calls into the libc
// allowlist. Anything else raises ErrorKind::Unsupported with a span;
// malformed input raises ErrorKind::Syntax with line/column.
TranslationUnit parse(const CSourceFile& source);

// Names the parser accepts as known library calls.
bool is_libc_allowlisted(const std::string& name);

// Entry points for re-parsing macro replacement text at translation time.
ExprPtr parse_expression_snippet(const CSourceFile& snippet);
std::vector<StmtPtr> parse_statement_snippet(const CSourceFile& snippet);

}  // namespace c2j
