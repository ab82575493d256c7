#pragma once

#include <string>
#include <utility>
#include <vector>

#include "c2j/error.hpp"

namespace c2j {

// One C input file: raw text plus a line offset index so spans can be
// reported as line/column positions.
class CSourceFile {
 public:
  CSourceFile() = default;
  CSourceFile(std::string path, std::string text);

  static CSourceFile from_file(const std::string& path);

  const std::string& path() const { return path_; }
  const std::string& text() const { return text_; }

  // Stem of the file name: "dir/test_1.c" -> "test_1".
  std::string stem() const;

  // 1-based line and column for a byte offset.
  std::pair<int, int> line_col(size_t offset) const;

  std::string_view slice(const Span& span) const;

 private:
  std::string path_;
  std::string text_;
  std::vector<size_t> line_starts_;
};

}  // namespace c2j
