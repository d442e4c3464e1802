#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permlens/diagnostics.hpp"

namespace permlens::frontend {

enum class TokenKind {
  Identifier,
  Keyword,
  IntLiteral,
  FloatLiteral,
  StringLiteral,  // also char literals; the quote character tells them apart
  NullLiteral,
  Punct,
  Operator,
  EndOfInput,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::EndOfInput;
  std::string text;
  Span span;

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_punct(std::string_view t) const { return is(TokenKind::Punct, t); }
  bool is_op(std::string_view t) const { return is(TokenKind::Operator, t); }
  bool is_keyword(std::string_view t) const { return is(TokenKind::Keyword, t); }
};

class LexError : public std::runtime_error {
 public:
  LexError(const std::string& message, Span span) : std::runtime_error(message), span_(span) {}
  const Span& span() const { return span_; }

 private:
  Span span_;
};

bool is_keyword(std::string_view word);

// Tokens tile the input: the gaps between consecutive spans hold only
// whitespace and comments. The stream always ends with an EndOfInput token.
std::vector<Token> tokenize(std::string_view source);

}  // namespace permlens::frontend
