#pragma once

#include <string>
#include <vector>

#include "c2j/ast.hpp"
#include "c2j/macro.hpp"
#include "c2j/parser.hpp"
#include "c2j/source.hpp"

namespace c2j {

// The semantic parts of one C file, each with its verbatim source text.
// Every top-level declaration of the input lands in exactly one list, in
// source order; verbatim texts are exact substrings of the original file.
struct CDecomposition {
  struct GlobalPart {
    const VarDecl* decl;  // owned by unit
    std::string verbatim;
  };
  struct RecordPart {
    const RecordDecl* decl;  // owned by unit
    std::string verbatim;
    RecordKind kind;
  };
  struct FunctionPart {
    const FunctionDecl* decl;  // owned by unit
    std::string name;
    std::string verbatim;
  };
  struct TypedefPart {
    TypedefDecl decl;
    std::string verbatim;
  };

  std::string file_stem;
  std::vector<MacroDef> macros;
  std::vector<GlobalPart> globals;
  std::vector<RecordPart> records;
  std::vector<std::string> prototypes;  // verbatim texts
  std::vector<FunctionPart> functions;
  std::vector<TypedefPart> typedefs;
};

// Splits a parsed unit into its parts. The unit must outlive the result.
CDecomposition decompose(const TranslationUnit& unit,
                         const CSourceFile& source,
                         std::vector<MacroDef> macros);

// Convenience: parse + extract_macros + decompose. The returned unit owns the
// AST nodes the decomposition points into.
struct AnalyzedFile {
  CSourceFile source;
  TranslationUnit unit;
  CDecomposition parts;
};
AnalyzedFile analyze(CSourceFile source);

}  // namespace c2j
