#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "permlens/frontend/ast.hpp"
#include "permlens/frontend/lexer.hpp"

namespace permlens::frontend {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string expected, std::string found, Span span)
      : std::runtime_error(message),
        expected_(std::move(expected)),
        found_(std::move(found)),
        span_(span) {}

  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }
  const Span& span() const { return span_; }

 private:
  std::string expected_;
  std::string found_;
  Span span_;
};

struct ParseResult {
  CompilationUnit unit;
  std::vector<ParseError> errors;

  bool ok() const { return errors.empty(); }
};

// Recovers at statement and member boundaries, so one bad statement does not
// hide later errors.
ParseResult parse(const std::vector<Token>& tokens, std::string source, std::string path = {});

// Convenience wrapper; lexer failures become a single ParseResult error.
ParseResult parse_source(std::string source, std::string path = {});

}  // namespace permlens::frontend
