#include "c2j/context.hpp"

namespace c2j {

TranslationContext TranslationContext::build(const CDecomposition& parts) {
  TranslationContext ctx;
  ctx.class_name = parts.file_stem;

  for (const auto& g : parts.globals) {
    ctx.globals[g.decl->name] = g.decl;
    if (!ctx.globals_context_text.empty()) ctx.globals_context_text += "\n";
    ctx.globals_context_text += g.verbatim;
  }
  for (const auto& r : parts.records) {
    if (!ctx.records_context_text.empty()) ctx.records_context_text += "\n";
    ctx.records_context_text += r.verbatim;
  }

  for (const auto& r : parts.records) {
    if (r.kind == RecordKind::Enum) {
      ctx.enums[r.decl->name] = r.decl;
      for (const auto& c : r.decl->consts)
        ctx.enum_consts[c.name] = {r.decl->name, c.value};
      continue;
    }
    RecordView view;
    view.decl = r.decl;
    view.kind = r.kind;
    view.java_name = r.decl->name;
    for (const auto& f : r.decl->fields)
      if (f.bit_width >= 0) view.has_bitfields = true;
    ctx.records[r.decl->name] = view;
  }

  for (const auto& m : parts.macros) ctx.macros[m.name] = &m;
  for (const auto& f : parts.functions) ctx.functions[f.name] = f.decl;
  return ctx;
}

const FieldDecl* TranslationContext::find_field(const std::string& tag,
                                                const std::string& field) const {
  const RecordView* view = find_record(tag);
  if (!view || !view->decl) return nullptr;
  for (const auto& f : view->decl->fields)
    if (f.name == field) return &f;
  return nullptr;
}

}  // namespace c2j
