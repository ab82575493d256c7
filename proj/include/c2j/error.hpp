#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace c2j {

// Byte range into the original source text, with 1-based line/column of the
// range start for diagnostics.
struct Span {
  size_t begin = 0;
  size_t end = 0;
  int line = 0;
  int col = 0;

  size_t length() const { return end - begin; }
  bool operator==(const Span&) const = default;
};

enum class ErrorKind {
  Syntax,       // malformed input within the supported subset
  Unsupported,  // construct outside the supported C subset
  Unresolved,   // identifier resolves in no context view
  Sanitize,
  Assemble,
  Config,
  Backend,
  Infra,
  Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  Error(ErrorKind kind, std::string message, Span span)
      : std::runtime_error(std::move(message)), kind_(kind), span_(span) {}

  ErrorKind kind() const { return kind_; }
  const std::optional<Span>& span() const { return span_; }

 private:
  ErrorKind kind_;
  std::optional<Span> span_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

[[noreturn]] inline void fail_at(ErrorKind kind, const std::string& message,
                                 Span span) {
  throw Error(kind, message, span);
}

}  // namespace c2j
