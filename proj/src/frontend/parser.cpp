#include "permlens/frontend/parser.hpp"

#include <array>

namespace permlens::frontend {

namespace {

constexpr std::array<std::string_view, 10> kModifiers = {
    "public", "private", "protected", "static", "final",
    "abstract", "synchronized", "native", "transient", "volatile"};

constexpr std::array<std::string_view, 12> kAssignOps = {
    "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="};

bool is_modifier(const Token& t) {
  if (t.kind != TokenKind::Keyword) return false;
  for (auto m : kModifiers) {
    if (t.text == m) return true;
  }
  return false;
}

bool is_assign_op(const Token& t) {
  if (t.kind != TokenKind::Operator) return false;
  for (auto op : kAssignOps) {
    if (t.text == op) return true;
  }
  return false;
}

int binary_precedence(const Token& t) {
  if (t.is_keyword("instanceof")) return 7;
  if (t.kind != TokenKind::Operator) return -1;
  const std::string& op = t.text;
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "|") return 3;
  if (op == "^") return 4;
  if (op == "&") return 5;
  if (op == "==" || op == "!=") return 6;
  if (op == "<" || op == ">" || op == "<=" || op == ">=") return 7;
  if (op == "<<" || op == ">>" || op == ">>>") return 8;
  if (op == "+" || op == "-") return 9;
  if (op == "*" || op == "/" || op == "%") return 10;
  return -1;
}

bool is_primitive_keyword(const Token& t) {
  return t.kind == TokenKind::Keyword && (is_primitive_name(t.text) || t.text == "void");
}

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, std::string source, std::string path)
      : toks_(tokens) {
    result_.unit.source = std::move(source);
    result_.unit.path = std::move(path);
  }

  ParseResult run() {
    while (!at_end()) {
      const std::size_t before = pos_;
      try {
        if (peek().is_keyword("package") || peek().is_keyword("import")) {
          skip_directive();
        } else {
          result_.unit.classes.push_back(parse_class());
        }
      } catch (const ParseError& e) {
        result_.errors.push_back(e);
        if (pos_ == before) advance();
        while (!at_end() && !peek().is_keyword("class") && !is_modifier(peek())) advance();
      }
    }
    return std::move(result_);
  }

 private:
  // ---- token plumbing ----
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at_end() const { return peek().kind == TokenKind::EndOfInput; }
  const Token& advance() {
    const Token& t = peek();
    if (!at_end()) ++pos_;
    return t;
  }
  std::size_t prev_end() const { return pos_ == 0 ? 0 : toks_[pos_ - 1].span.end; }
  std::size_t here() const { return peek().span.start; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    const std::string found = t.kind == TokenKind::EndOfInput ? "end of input" : "'" + t.text + "'";
    throw ParseError("expected " + expected + ", found " + found, expected, found, t.span);
  }

  bool accept_punct(std::string_view p) {
    if (peek().is_punct(p)) {
      advance();
      return true;
    }
    return false;
  }
  bool accept_op(std::string_view op) {
    if (peek().is_op(op)) {
      advance();
      return true;
    }
    return false;
  }
  bool accept_keyword(std::string_view k) {
    if (peek().is_keyword(k)) {
      advance();
      return true;
    }
    return false;
  }
  void expect_punct(std::string_view p) {
    if (!accept_punct(p)) fail("'" + std::string(p) + "'");
  }
  void expect_keyword(std::string_view k) {
    if (!accept_keyword(k)) fail("'" + std::string(k) + "'");
  }
  std::string expect_ident() {
    if (peek().kind != TokenKind::Identifier) fail("identifier");
    return advance().text;
  }

  void skip_directive() {
    advance();
    while (!at_end() && !peek().is_punct(";")) advance();
    expect_punct(";");
  }

  // ---- declarations ----
  std::vector<std::string> parse_modifiers() {
    std::vector<std::string> mods;
    while (is_modifier(peek())) mods.push_back(advance().text);
    return mods;
  }

  std::string parse_qualified_name() {
    std::string name = expect_ident();
    while (peek().is_punct(".") && peek(1).kind == TokenKind::Identifier) {
      advance();
      name += "." + advance().text;
    }
    return name;
  }

  TypeRef parse_type() {
    TypeRef type;
    type.span.start = here();
    if (is_primitive_keyword(peek())) {
      type.name = advance().text;
    } else if (peek().kind == TokenKind::Identifier) {
      type.name = parse_qualified_name();
    } else {
      fail("type");
    }
    while (peek().is_punct("[") && peek(1).is_punct("]")) {
      advance();
      advance();
      ++type.dims;
    }
    type.span.end = prev_end();
    return type;
  }

  // Speculative: does a local declaration start here?
  bool local_decl_ahead() const {
    std::size_t i = pos_;
    auto tok = [&](std::size_t k) -> const Token& { return k < toks_.size() ? toks_[k] : toks_.back(); };
    while (tok(i).is_keyword("final")) ++i;
    if (is_primitive_keyword(tok(i))) return true;
    if (tok(i).kind != TokenKind::Identifier) return false;
    ++i;
    while (tok(i).is_punct(".") && tok(i + 1).kind == TokenKind::Identifier) i += 2;
    while (tok(i).is_punct("[") && tok(i + 1).is_punct("]")) i += 2;
    if (tok(i).kind != TokenKind::Identifier) return false;
    const Token& after = tok(i + 1);
    return after.is_op("=") || after.is_punct(";") || after.is_punct(",") || after.is_punct("[") ||
           after.is_op(":");
  }

  ClassDecl parse_class() {
    ClassDecl cls;
    cls.span.start = here();
    cls.modifiers = parse_modifiers();
    expect_keyword("class");
    cls.name = expect_ident();
    if (accept_keyword("extends")) cls.superclass = parse_qualified_name();
    if (accept_keyword("implements")) {
      parse_qualified_name();
      while (accept_punct(",")) parse_qualified_name();
    }
    expect_punct("{");
    cls.body_open = prev_end();
    while (!peek().is_punct("}") && !at_end()) {
      const std::size_t before = pos_;
      try {
        parse_member(cls);
      } catch (const ParseError& e) {
        result_.errors.push_back(e);
        recover_member(before);
      }
    }
    expect_punct("}");
    cls.span.end = prev_end();
    for (const auto& m : cls.methods) cls.is_main_holder = cls.is_main_holder || m.is_main;
    return cls;
  }

  void recover_member(std::size_t before) {
    if (pos_ == before && !peek().is_punct("}")) advance();
    int depth = 0;
    while (!at_end()) {
      if (peek().is_punct("{")) {
        ++depth;
      } else if (peek().is_punct("}")) {
        if (depth == 0) return;
        if (--depth == 0) {
          advance();
          return;
        }
      } else if (peek().is_punct(";") && depth == 0) {
        advance();
        return;
      }
      advance();
    }
  }

  void parse_member(ClassDecl& cls) {
    const std::size_t start = here();
    auto mods = parse_modifiers();
    if (peek().kind == TokenKind::Identifier && peek().text == cls.name && peek(1).is_punct("(")) {
      MethodDecl m;
      m.name = advance().text;
      m.is_constructor = true;
      m.modifiers = std::move(mods);
      parse_method_rest(m, start);
      cls.methods.push_back(std::move(m));
      return;
    }
    TypeRef type = parse_type();
    const std::string name = expect_ident();
    if (peek().is_punct("(")) {
      MethodDecl m;
      m.name = name;
      m.return_type = type;
      m.modifiers = std::move(mods);
      parse_method_rest(m, start);
      cls.methods.push_back(std::move(m));
      return;
    }
    // one or more field declarators
    bool is_static = false;
    for (const auto& mod : mods) is_static = is_static || mod == "static";
    std::string current = name;
    std::size_t decl_start = start;
    for (;;) {
      FieldDecl f;
      f.type = type;
      f.name = current;
      f.is_static = is_static;
      f.modifiers = mods;
      while (peek().is_punct("[") && peek(1).is_punct("]")) {
        advance();
        advance();
        ++f.type.dims;
      }
      if (accept_op("=")) f.init = parse_var_init();
      f.span = Span{decl_start, prev_end()};
      cls.fields.push_back(std::move(f));
      if (!accept_punct(",")) break;
      decl_start = here();
      current = expect_ident();
    }
    expect_punct(";");
    if (!cls.fields.empty()) cls.fields.back().span.end = prev_end();
  }

  void parse_method_rest(MethodDecl& m, std::size_t start) {
    for (const auto& mod : m.modifiers) m.is_static = m.is_static || mod == "static";
    expect_punct("(");
    if (!peek().is_punct(")")) {
      do {
        Param p;
        p.span.start = here();
        while (accept_keyword("final")) {
        }
        p.type = parse_type();
        p.name = expect_ident();
        while (peek().is_punct("[") && peek(1).is_punct("]")) {
          advance();
          advance();
          ++p.type.dims;
        }
        p.span.end = prev_end();
        m.params.push_back(std::move(p));
      } while (accept_punct(","));
    }
    expect_punct(")");
    if (accept_keyword("throws")) {
      parse_qualified_name();
      while (accept_punct(",")) parse_qualified_name();
    }
    m.header_span = Span{start, prev_end()};
    m.is_main = !m.is_constructor && m.is_static && m.name == "main" && m.return_type &&
                m.return_type->is_void();
    if (accept_punct(";")) {
      m.has_body = false;
    } else {
      m.body = parse_block_body();
    }
    m.span = Span{start, prev_end()};
  }

  // ---- statements ----
  std::vector<StmtPtr> parse_block_body() {
    expect_punct("{");
    std::vector<StmtPtr> stmts;
    while (!peek().is_punct("}") && !at_end()) {
      const std::size_t before = pos_;
      try {
        stmts.push_back(parse_statement());
      } catch (const ParseError& e) {
        result_.errors.push_back(e);
        recover_statement(before);
      }
    }
    expect_punct("}");
    return stmts;
  }

  void recover_statement(std::size_t before) {
    if (pos_ == before && !peek().is_punct("}")) advance();
    int depth = 0;
    while (!at_end()) {
      if (peek().is_punct("{")) {
        ++depth;
      } else if (peek().is_punct("}")) {
        if (depth == 0) return;
        --depth;
      } else if (peek().is_punct(";") && depth == 0) {
        advance();
        return;
      }
      advance();
    }
  }

  StmtPtr parse_statement() {
    const std::size_t start = here();
    const Token& t = peek();
    if (t.is_punct("{")) {
      auto body = parse_block_body();
      return make_stmt(Span{start, prev_end()}, BlockStmt{std::move(body)});
    }
    if (accept_punct(";")) return make_stmt(Span{start, prev_end()}, EmptyStmt{});
    if (accept_keyword("if")) {
      expect_punct("(");
      auto cond = parse_expression();
      expect_punct(")");
      auto then_stmt = parse_statement();
      StmtPtr else_stmt;
      if (accept_keyword("else")) else_stmt = parse_statement();
      return make_stmt(Span{start, prev_end()},
                       IfStmt{std::move(cond), std::move(then_stmt), std::move(else_stmt)});
    }
    if (accept_keyword("while")) {
      expect_punct("(");
      auto cond = parse_expression();
      expect_punct(")");
      auto body = parse_statement();
      return make_stmt(Span{start, prev_end()}, WhileStmt{std::move(cond), std::move(body), false});
    }
    if (accept_keyword("do")) {
      auto body = parse_statement();
      expect_keyword("while");
      expect_punct("(");
      auto cond = parse_expression();
      expect_punct(")");
      expect_punct(";");
      return make_stmt(Span{start, prev_end()}, WhileStmt{std::move(cond), std::move(body), true});
    }
    if (accept_keyword("for")) return parse_for(start);
    if (accept_keyword("switch")) return parse_switch(start);
    if (accept_keyword("return")) {
      ExprPtr value;
      if (!peek().is_punct(";")) value = parse_expression();
      expect_punct(";");
      return make_stmt(Span{start, prev_end()}, ReturnStmt{std::move(value)});
    }
    if (accept_keyword("break")) {
      if (peek().kind == TokenKind::Identifier) advance();
      expect_punct(";");
      return make_stmt(Span{start, prev_end()}, BreakStmt{});
    }
    if (accept_keyword("continue")) {
      if (peek().kind == TokenKind::Identifier) advance();
      expect_punct(";");
      return make_stmt(Span{start, prev_end()}, ContinueStmt{});
    }
    if (local_decl_ahead()) {
      auto decl = parse_local_decl(start);
      expect_punct(";");
      decl->span.end = prev_end();
      return decl;
    }
    auto expr = parse_expression();
    expect_punct(";");
    return make_stmt(Span{start, prev_end()}, ExprStmt{std::move(expr)});
  }

  StmtPtr parse_local_decl(std::size_t start) {
    while (accept_keyword("final")) {
    }
    LocalDeclStmt decl;
    decl.type = parse_type();
    do {
      Declarator d;
      d.span.start = here();
      d.name = expect_ident();
      while (peek().is_punct("[") && peek(1).is_punct("]")) {
        advance();
        advance();
        ++d.extra_dims;
      }
      if (accept_op("=")) d.init = parse_var_init();
      d.span.end = prev_end();
      decl.vars.push_back(std::move(d));
    } while (accept_punct(","));
    return make_stmt(Span{start, prev_end()}, std::move(decl));
  }

  StmtPtr parse_for(std::size_t start) {
    expect_punct("(");
    // enhanced for: for (T x : expr)
    if (local_decl_ahead()) {
      const std::size_t save = pos_;
      while (accept_keyword("final")) {
      }
      TypeRef type = parse_type();
      if (peek().kind == TokenKind::Identifier && peek(1).is_op(":")) {
        std::string var = advance().text;
        advance();
        auto iterable = parse_expression();
        expect_punct(")");
        auto body = parse_statement();
        return make_stmt(Span{start, prev_end()},
                         ForEachStmt{std::move(type), std::move(var), std::move(iterable), std::move(body)});
      }
      pos_ = save;
    }
    ForStmt loop;
    if (!peek().is_punct(";")) {
      const std::size_t init_start = here();
      if (local_decl_ahead()) {
        auto decl = parse_local_decl(init_start);
        loop.init.push_back(std::move(decl));
      } else {
        do {
          const std::size_t s = here();
          auto e = parse_expression();
          loop.init.push_back(make_stmt(Span{s, prev_end()}, ExprStmt{std::move(e)}));
        } while (accept_punct(","));
      }
    }
    expect_punct(";");
    if (!peek().is_punct(";")) loop.cond = parse_expression();
    expect_punct(";");
    if (!peek().is_punct(")")) {
      do {
        loop.update.push_back(parse_expression());
      } while (accept_punct(","));
    }
    expect_punct(")");
    loop.body = parse_statement();
    return make_stmt(Span{start, prev_end()}, std::move(loop));
  }

  StmtPtr parse_switch(std::size_t start) {
    expect_punct("(");
    SwitchStmt sw;
    sw.selector = parse_expression();
    expect_punct(")");
    expect_punct("{");
    while (!peek().is_punct("}") && !at_end()) {
      SwitchCase c;
      c.span.start = here();
      if (accept_keyword("default")) {
        c.is_default = true;
        expect_op(":");
      } else if (accept_keyword("case")) {
        c.labels.push_back(parse_conditional());
        expect_op(":");
      } else {
        fail("'case' or 'default'");
      }
      while (!peek().is_keyword("case") && !peek().is_keyword("default") && !peek().is_punct("}") &&
             !at_end()) {
        const std::size_t before = pos_;
        try {
          c.body.push_back(parse_statement());
        } catch (const ParseError& e) {
          result_.errors.push_back(e);
          recover_statement(before);
        }
      }
      c.span.end = prev_end();
      sw.cases.push_back(std::move(c));
    }
    expect_punct("}");
    return make_stmt(Span{start, prev_end()}, std::move(sw));
  }

  void expect_op(std::string_view op) {
    if (!accept_op(op)) fail("'" + std::string(op) + "'");
  }

  // ---- expressions ----
  ExprPtr parse_var_init() {
    if (peek().is_punct("{")) return parse_array_init();
    return parse_expression();
  }

  ExprPtr parse_array_init() {
    const std::size_t start = here();
    expect_punct("{");
    ArrayInitExpr init;
    while (!peek().is_punct("}")) {
      init.elements.push_back(parse_var_init());
      if (!accept_punct(",")) break;
    }
    expect_punct("}");
    return make_expr(Span{start, prev_end()}, std::move(init));
  }

  ExprPtr parse_expression() { return parse_assignment(); }

  ExprPtr parse_assignment() {
    const std::size_t start = here();
    auto lhs = parse_conditional();
    if (is_assign_op(peek())) {
      std::string op = advance().text;
      auto rhs = peek().is_punct("{") ? parse_array_init() : parse_assignment();
      return make_expr(Span{start, prev_end()}, AssignExpr{std::move(op), std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprPtr parse_conditional() {
    const std::size_t start = here();
    auto cond = parse_binary(1);
    if (accept_op("?")) {
      auto then_expr = parse_expression();
      expect_op(":");
      auto else_expr = parse_conditional();
      return make_expr(Span{start, prev_end()},
                       ConditionalExpr{std::move(cond), std::move(then_expr), std::move(else_expr)});
    }
    return cond;
  }

  ExprPtr parse_binary(int min_prec) {
    const std::size_t start = here();
    auto lhs = parse_unary();
    for (;;) {
      const int prec = binary_precedence(peek());
      if (prec < min_prec) return lhs;
      std::string op = advance().text;
      ExprPtr rhs;
      if (op == "instanceof") {
        const std::size_t ts = here();
        TypeRef type = parse_type();
        rhs = make_expr(Span{ts, prev_end()}, NameExpr{type.to_string()});
      } else {
        rhs = parse_binary(prec + 1);
      }
      lhs = make_expr(Span{start, prev_end()}, InfixExpr{std::move(op), std::move(lhs), std::move(rhs)});
    }
  }

  bool cast_ahead() const {
    // called with peek() == '('
    std::size_t i = pos_ + 1;
    auto tok = [&](std::size_t k) -> const Token& { return k < toks_.size() ? toks_[k] : toks_.back(); };
    const bool primitive = is_primitive_keyword(tok(i));
    if (!primitive && tok(i).kind != TokenKind::Identifier) return false;
    ++i;
    while (tok(i).is_punct(".") && tok(i + 1).kind == TokenKind::Identifier) i += 2;
    bool array = false;
    while (tok(i).is_punct("[") && tok(i + 1).is_punct("]")) {
      i += 2;
      array = true;
    }
    if (!tok(i).is_punct(")")) return false;
    if (primitive || array) return true;
    const Token& next = tok(i + 1);
    switch (next.kind) {
      case TokenKind::Identifier:
      case TokenKind::IntLiteral:
      case TokenKind::FloatLiteral:
      case TokenKind::StringLiteral:
      case TokenKind::NullLiteral:
        return true;
      case TokenKind::Keyword:
        return next.text == "this" || next.text == "new" || next.text == "super" ||
               next.text == "true" || next.text == "false";
      case TokenKind::Punct:
        return next.text == "(";
      case TokenKind::Operator:
        return next.text == "!" || next.text == "~";
      default:
        return false;
    }
  }

  ExprPtr parse_unary() {
    const std::size_t start = here();
    const Token& t = peek();
    if (t.kind == TokenKind::Operator &&
        (t.text == "+" || t.text == "-" || t.text == "!" || t.text == "~" || t.text == "++" ||
         t.text == "--")) {
      std::string op = advance().text;
      auto operand = parse_unary();
      return make_expr(Span{start, prev_end()}, PrefixExpr{std::move(op), std::move(operand)});
    }
    if (t.is_punct("(") && cast_ahead()) {
      advance();
      TypeRef type = parse_type();
      expect_punct(")");
      auto operand = parse_unary();
      return make_expr(Span{start, prev_end()}, CastExpr{std::move(type), std::move(operand)});
    }
    return parse_postfix(parse_primary(), start);
  }

  std::vector<ExprPtr> parse_args() {
    expect_punct("(");
    std::vector<ExprPtr> args;
    if (!peek().is_punct(")")) {
      do {
        args.push_back(parse_expression());
      } while (accept_punct(","));
    }
    expect_punct(")");
    return args;
  }

  ExprPtr parse_postfix(ExprPtr expr, std::size_t start) {
    for (;;) {
      if (peek().is_punct(".")) {
        advance();
        std::string name = expect_ident();
        if (peek().is_punct("(")) {
          auto args = parse_args();
          expr = make_expr(Span{start, prev_end()}, CallExpr{std::move(expr), std::move(name), std::move(args)});
        } else {
          expr = make_expr(Span{start, prev_end()}, FieldAccessExpr{std::move(expr), std::move(name)});
        }
      } else if (peek().is_punct("[")) {
        advance();
        auto index = parse_expression();
        expect_punct("]");
        expr = make_expr(Span{start, prev_end()}, ArrayAccessExpr{std::move(expr), std::move(index)});
      } else if (peek().is_op("++") || peek().is_op("--")) {
        std::string op = advance().text;
        expr = make_expr(Span{start, prev_end()}, PostfixExpr{std::move(op), std::move(expr)});
      } else {
        return expr;
      }
    }
  }

  ExprPtr parse_primary() {
    const std::size_t start = here();
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::IntLiteral:
        advance();
        return make_expr(t.span, LiteralExpr{LiteralKind::Int, t.text});
      case TokenKind::FloatLiteral:
        advance();
        return make_expr(t.span, LiteralExpr{LiteralKind::Float, t.text});
      case TokenKind::StringLiteral:
        advance();
        return make_expr(t.span, LiteralExpr{t.text.front() == '\'' ? LiteralKind::Char : LiteralKind::String, t.text});
      case TokenKind::NullLiteral:
        advance();
        return make_expr(t.span, NullExpr{});
      case TokenKind::Identifier: {
        std::string name = advance().text;
        if (peek().is_punct("(")) {
          auto args = parse_args();
          return make_expr(Span{start, prev_end()}, CallExpr{nullptr, std::move(name), std::move(args)});
        }
        return make_expr(Span{start, prev_end()}, NameExpr{std::move(name)});
      }
      case TokenKind::Keyword:
        if (t.text == "true" || t.text == "false") {
          advance();
          return make_expr(t.span, LiteralExpr{LiteralKind::Bool, t.text});
        }
        if (t.text == "this" || t.text == "super") {
          const bool is_this = t.text == "this";
          advance();
          if (peek().is_punct("(")) {
            auto args = parse_args();
            return make_expr(Span{start, prev_end()},
                             CallExpr{nullptr, is_this ? "this" : "super", std::move(args)});
          }
          if (is_this) return make_expr(Span{start, prev_end()}, ThisExpr{});
          if (!peek().is_punct(".")) fail("'.' after super");
          return make_expr(Span{start, prev_end()}, SuperExpr{});
        }
        if (t.text == "new") return parse_new();
        break;
      case TokenKind::Punct:
        if (t.text == "(") {
          advance();
          auto inner = parse_expression();
          expect_punct(")");
          return make_expr(Span{start, prev_end()}, ParenExpr{std::move(inner)});
        }
        if (t.text == "{") return parse_array_init();
        break;
      default:
        break;
    }
    fail("expression");
  }

  ExprPtr parse_new() {
    const std::size_t start = here();
    expect_keyword("new");
    TypeRef type;
    type.span.start = here();
    if (is_primitive_keyword(peek())) {
      type.name = advance().text;
    } else {
      type.name = parse_qualified_name();
    }
    type.span.end = prev_end();
    if (peek().is_punct("(")) {
      auto args = parse_args();
      return make_expr(Span{start, prev_end()}, NewExpr{std::move(type), std::move(args)});
    }
    if (!peek().is_punct("[")) fail("'(' or '['");
    ArrayCreationExpr arr;
    arr.element = type;
    while (peek().is_punct("[") && !peek(1).is_punct("]")) {
      advance();
      arr.dims.push_back(parse_expression());
      expect_punct("]");
    }
    while (peek().is_punct("[") && peek(1).is_punct("]")) {
      advance();
      advance();
      ++arr.extra_dims;
    }
    if (arr.dims.empty()) {
      if (!peek().is_punct("{")) fail("array initializer");
      arr.init = parse_array_init();
    }
    return make_expr(Span{start, prev_end()}, std::move(arr));
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  ParseResult result_;
};

}  // namespace

ParseResult parse(const std::vector<Token>& tokens, std::string source, std::string path) {
  if (tokens.empty()) {
    ParseResult empty;
    empty.unit.source = std::move(source);
    empty.unit.path = std::move(path);
    return empty;
  }
  return Parser(tokens, std::move(source), std::move(path)).run();
}

ParseResult parse_source(std::string source, std::string path) {
  std::vector<Token> tokens;
  try {
    tokens = tokenize(source);
  } catch (const LexError& e) {
    ParseResult failed;
    failed.unit.source = std::move(source);
    failed.unit.path = std::move(path);
    failed.errors.emplace_back(std::string("lexical error: ") + e.what(), "token", "", e.span());
    return failed;
  }
  return parse(tokens, std::move(source), std::move(path));
}

}  // namespace permlens::frontend
