#include "permlens/frontend/lexer.hpp"

#include <array>
#include <cctype>

namespace permlens::frontend {

namespace {

constexpr std::array<std::string_view, 45> kKeywords = {
    "abstract", "boolean", "break",     "byte",       "case",      "char",     "class",
    "continue", "default", "do",        "double",     "else",      "extends",  "false",
    "final",    "float",   "for",       "if",         "implements", "import",  "instanceof",
    "int",      "long",    "native",    "new",        "package",   "private",  "protected",
    "public",   "return",  "short",     "static",     "super",     "switch",   "synchronized",
    "this",     "throw",   "throws",    "transient",  "true",      "void",     "volatile",
    "while",    "try",     "catch",
};

// Longest first so that maximal munch falls out of a linear scan.
constexpr std::array<std::string_view, 37> kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=",
    "-=",   "*=",  "/=",  "%=",  "&=", "|=", "^=", "<<", ">>", "=",  "<",  ">",  "+",
    "-",    "*",   "/",   "%",   "!",  "~",  "?",  ":",  "&",  "|",  "^",
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
bool ident_part(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      if (pos_ >= src_.size()) break;
      out.push_back(next());
    }
    out.push_back(Token{TokenKind::EndOfInput, "", Span{src_.size(), src_.size()}});
    return out;
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (c == '/' && peek(1) == '*') {
        const std::size_t start = pos_;
        const auto close = src_.find("*/", pos_ + 2);
        if (close == std::string_view::npos) {
          throw LexError("unterminated block comment", Span{start, src_.size()});
        }
        pos_ = close + 2;
      } else {
        return;
      }
    }
  }

  Token make(TokenKind kind, std::size_t start) {
    return Token{kind, std::string(src_.substr(start, pos_ - start)), Span{start, pos_}};
  }

  Token next() {
    const std::size_t start = pos_;
    const char c = src_[pos_];
    if (ident_start(c)) {
      while (pos_ < src_.size() && ident_part(src_[pos_])) ++pos_;
      const std::string_view word = src_.substr(start, pos_ - start);
      if (word == "null") return make(TokenKind::NullLiteral, start);
      return make(is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier, start);
    }
    if (digit(c) || (c == '.' && digit(peek(1)))) return number(start);
    if (c == '"') return quoted(start, '"', "string literal");
    if (c == '\'') return quoted(start, '\'', "character literal");
    if (c == '(' || c == ')' || c == '{' || c == '}' || c == '[' || c == ']' || c == ';' ||
        c == ',' || c == '.') {
      ++pos_;
      return make(TokenKind::Punct, start);
    }
    for (std::string_view op : kOperators) {
      if (src_.substr(pos_, op.size()) == op) {
        pos_ += op.size();
        return make(TokenKind::Operator, start);
      }
    }
    throw LexError(std::string("illegal character '") + c + "'", Span{start, start + 1});
  }

  Token number(std::size_t start) {
    bool is_float = false;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      pos_ += 2;
      while (std::isxdigit(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    } else {
      while (digit(peek()) || peek() == '_') ++pos_;
      if (peek() == '.' && digit(peek(1))) {
        is_float = true;
        ++pos_;
        while (digit(peek())) ++pos_;
      } else if (peek() == '.' && !ident_start(peek(1))) {
        // "1." is a valid double literal
        is_float = true;
        ++pos_;
      }
      if (peek() == 'e' || peek() == 'E') {
        std::size_t look = 1;
        if (peek(1) == '+' || peek(1) == '-') look = 2;
        if (!digit(peek(look))) throw LexError("malformed exponent", Span{start, pos_ + look});
        is_float = true;
        pos_ += look;
        while (digit(peek())) ++pos_;
      }
    }
    const char suffix = peek();
    if (suffix == 'f' || suffix == 'F' || suffix == 'd' || suffix == 'D') {
      is_float = true;
      ++pos_;
    } else if (suffix == 'l' || suffix == 'L') {
      ++pos_;
    }
    if (ident_part(peek())) throw LexError("malformed number literal", Span{start, pos_ + 1});
    return make(is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral, start);
  }

  Token quoted(std::size_t start, char quote, const char* what) {
    ++pos_;
    while (pos_ < src_.size() && src_[pos_] != quote) {
      if (src_[pos_] == '\n') break;
      if (src_[pos_] == '\\') ++pos_;
      ++pos_;
    }
    if (pos_ >= src_.size() || src_[pos_] != quote) {
      throw LexError(std::string("unterminated ") + what, Span{start, std::min(pos_, src_.size())});
    }
    ++pos_;
    return make(TokenKind::StringLiteral, start);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::IntLiteral: return "integer-literal";
    case TokenKind::FloatLiteral: return "float-literal";
    case TokenKind::StringLiteral: return "string-literal";
    case TokenKind::NullLiteral: return "null-literal";
    case TokenKind::Punct: return "punctuation";
    case TokenKind::Operator: return "operator";
    case TokenKind::EndOfInput: return "end-of-input";
  }
  return "?";
}

bool is_keyword(std::string_view word) {
  for (std::string_view k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace permlens::frontend
