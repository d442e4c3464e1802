#include "permlens/diagnostics.hpp"

#include <algorithm>

namespace permlens {

LineCol line_col(std::string_view source, std::size_t offset) {
  offset = std::min(offset, source.size());
  LineCol pos;
  for (std::size_t i = 0; i < offset; ++i) {
    if (source[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Note: return "note";
  }
  return "error";
}

std::string format_diagnostic(const Diagnostic& diag, std::string_view source) {
  std::string out = diag.file.empty() ? std::string("<input>") : diag.file;
  if (!source.empty() || diag.span.start > 0) {
    const LineCol pos = line_col(source, diag.span.start);
    out += ':' + std::to_string(pos.line) + ':' + std::to_string(pos.column);
  }
  out += ": ";
  out += to_string(diag.severity);
  if (!diag.code.empty()) out += '[' + diag.code + ']';
  out += ": " + diag.message;
  return out;
}

}  // namespace permlens
