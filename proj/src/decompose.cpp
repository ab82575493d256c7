#include "c2j/decompose.hpp"

#include <set>

namespace c2j {

CDecomposition decompose(const TranslationUnit& unit,
                         const CSourceFile& source,
                         std::vector<MacroDef> macros) {
  CDecomposition parts;
  parts.file_stem = source.stem();
  parts.macros = std::move(macros);

  std::set<std::string> function_names;
  for (const TopLevel& top : unit.decls) {
    std::string verbatim(source.slice(top.span));
    switch (top.kind) {
      case TopLevelKind::Global:
        parts.globals.push_back({&*top.global, std::move(verbatim)});
        break;
      case TopLevelKind::Record:
        parts.records.push_back(
            {top.record.get(), std::move(verbatim), top.record->rkind});
        break;
      case TopLevelKind::Function: {
        if (!function_names.insert(top.function->name).second)
          fail_at(ErrorKind::Syntax,
                  "duplicate function name '" + top.function->name + "'",
                  top.span);
        parts.functions.push_back(
            {top.function.get(), top.function->name, std::move(verbatim)});
        break;
      }
      case TopLevelKind::Prototype:
        parts.prototypes.push_back(std::move(verbatim));
        break;
      case TopLevelKind::Typedef:
        parts.typedefs.push_back({*top.typedef_decl, std::move(verbatim)});
        break;
    }
  }
  return parts;
}

AnalyzedFile analyze(CSourceFile source) {
  AnalyzedFile out;
  out.source = std::move(source);
  auto macros = extract_macros(out.source);
  out.unit = parse(out.source);
  out.parts = decompose(out.unit, out.source, std::move(macros));
  return out;
}

}  // namespace c2j
