#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace permlens {

// Byte offsets into one source buffer, half-open.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  bool contains(const Span& other) const { return start <= other.start && other.end <= end; }
  std::size_t length() const { return end - start; }
  friend bool operator==(const Span&, const Span&) = default;
};

enum class Severity { Error, Warning, Note };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  std::string file;
  Span span;
};

struct LineCol {
  std::size_t line = 1;
  std::size_t column = 1;
};

LineCol line_col(std::string_view source, std::size_t offset);

std::string_view to_string(Severity severity);

// "file:line:col: error[code]: message"
std::string format_diagnostic(const Diagnostic& diag, std::string_view source);

}  // namespace permlens
