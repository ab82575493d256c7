#pragma once

#include <vector>

#include "c2j/context.hpp"
#include "c2j/rules.hpp"
#include "c2j/snippet.hpp"

namespace c2j {

// Deterministic guardrail translator: every rule of the prompt templates,
// implemented as AST-to-Java-text transformations. Serves both as a
// model-free backend and as the executable reference for what a correct
// translation looks like.

// Global variable -> public static field. const adds final. Type map:
// int->int, float->float, char*->String, unsigned int->long,
// unsigned char->int.
JavaSnippet translate_global(const VarDecl& decl, const TranslationContext& ctx);

// struct -> public static nested class with public fields, a no-argument
// constructor, a copy constructor, and an all-fields constructor. Bitfield
// structs get a private backing int with masked getters/setters that
// sign-extend and truncate exactly like the reference C compiler. Unions
// produce an empty snippet. Enums become a constant table class.
JavaSnippet translate_record(const RecordDecl& rec, const TranslationContext& ctx);

// Function -> exactly one public static method; main gets the canonical Java
// signature. Applies the full rule registry.
JavaSnippet translate_function(const FunctionDecl& fn,
                               const TranslationContext& ctx);

// All parts of a decomposition, grouped as fields, nested classes, methods,
// each in source order. Skips nothing; unions arrive as empty snippets.
struct TranslatedUnit {
  std::vector<JavaSnippet> fields;
  std::vector<JavaSnippet> classes;
  std::vector<JavaSnippet> methods;
};
TranslatedUnit translate_parts(const CDecomposition& parts,
                               const TranslationContext& ctx);

// Byte size of a type under the frozen platform model (the layout the
// verifier's C compiler produces on x86-64; pinned by a probe test).
long long platform_sizeof(const CType& type, const TranslationContext& ctx);

}  // namespace c2j
