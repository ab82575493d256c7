#pragma once

#include <string>
#include <vector>

#include "c2j/snippet.hpp"

namespace c2j {

// A single self-contained Java compilation unit: one public class named after
// the C file stem, members ordered fields, nested classes, methods, each in
// original source order. Contains no import statements.
struct JavaCompilationUnit {
  std::string class_name;
  std::vector<JavaSnippet> fields;
  std::vector<JavaSnippet> nested_classes;
  std::vector<JavaSnippet> methods;
  std::string text;

  std::string file_name() const { return class_name + ".java"; }
};

// True when `stem` is usable directly as a Java class name. Stems that are
// not valid identifiers are rejected rather than mangled.
bool is_valid_java_class_name(const std::string& stem);

// Composes cleaned snippets into one unit. Empty-text snippets (unions) are
// skipped. Fails on duplicate method names, import leakage, an invalid class
// name, or a method that clones through a copy constructor its class never
// declares.
JavaCompilationUnit assemble(const std::string& class_name,
                             const std::vector<JavaSnippet>& snippets);

// Writes `<class_name>.java` under dir, returns the full path.
std::string write_unit(const JavaCompilationUnit& unit, const std::string& dir);

}  // namespace c2j
