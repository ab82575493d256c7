#include "c2j/source.hpp"

#include <fstream>
#include <sstream>

namespace c2j {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Unresolved: return "unresolved";
    case ErrorKind::Sanitize: return "sanitize";
    case ErrorKind::Assemble: return "assemble";
    case ErrorKind::Config: return "config";
    case ErrorKind::Backend: return "backend";
    case ErrorKind::Infra: return "infra";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

CSourceFile::CSourceFile(std::string path, std::string text)
    : path_(std::move(path)), text_(std::move(text)) {
  line_starts_.push_back(0);
  for (size_t i = 0; i < text_.size(); ++i) {
    if (text_[i] == '\n') line_starts_.push_back(i + 1);
  }
}

CSourceFile CSourceFile::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Config, "cannot open source file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return CSourceFile(path, buf.str());
}

std::string CSourceFile::stem() const {
  size_t slash = path_.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path_ : path_.substr(slash + 1);
  size_t dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

std::pair<int, int> CSourceFile::line_col(size_t offset) const {
  if (offset > text_.size()) offset = text_.size();
  size_t lo = 0, hi = line_starts_.size();
  while (lo + 1 < hi) {
    size_t mid = (lo + hi) / 2;
    if (line_starts_[mid] <= offset)
      lo = mid;
    else
      hi = mid;
  }
  return {static_cast<int>(lo + 1),
          static_cast<int>(offset - line_starts_[lo] + 1)};
}

std::string_view CSourceFile::slice(const Span& span) const {
  if (span.end > text_.size() || span.begin > span.end) {
    fail(ErrorKind::Internal, "span out of bounds for " + path_);
  }
  return std::string_view(text_).substr(span.begin, span.length());
}

}  // namespace c2j
