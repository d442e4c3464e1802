#include "permlens/resolve/symbols.hpp"

#include <cctype>
#include <functional>

#include "permlens/util/overloaded.hpp"

namespace permlens::resolve {

using namespace frontend;

namespace {

struct LocalVar {
  TypeRef type;
  bool is_param = false;
  std::size_t index = 0;
};

TypeRef named(std::string name) { return TypeRef{std::move(name), 0, {}}; }

}  // namespace

std::string method_id(const ClassDecl& cls, const MethodDecl& m) {
  return cls.name + "." + m.name + "/" + std::to_string(m.arity());
}

class Builder {
 public:
  explicit Builder(SymbolTable& table) : t_(table) {}

  void declare(const Program& program) {
    std::size_t order = 0;
    for (const auto& unit : program.units) {
      for (const auto& cls : unit.classes) {
        if (t_.classes_.count(cls.name)) {
          t_.diagnostics_.push_back(Diagnostic{Severity::Error, "DuplicateClass",
                                               "class '" + cls.name + "' is declared more than once",
                                               unit.path, cls.span});
          continue;
        }
        ClassInfo info;
        info.decl = &cls;
        info.unit_path = unit.path;
        info.order = order++;
        for (std::size_t i = 0; i < cls.fields.size(); ++i) {
          const auto& f = cls.fields[i];
          info.fields.push_back(FieldInfo{cls.name, f.name, f.type, f.is_static, i});
        }
        t_.classes_.emplace(cls.name, std::move(info));
        t_.class_order_.push_back(cls.name);
        for (const auto& m : cls.methods) {
          MethodInfo mi;
          mi.id = method_id(cls, m);
          if (t_.method_index_.count(mi.id)) {
            mi.id += "~" + std::to_string(t_.methods_.size());
          }
          mi.class_name = cls.name;
          mi.cls = &cls;
          mi.decl = &m;
          mi.order = t_.methods_.size();
          mi.unit_path = unit.path;
          t_.method_index_[mi.id] = t_.methods_.size();
          t_.decl_index_[&m] = t_.methods_.size();
          t_.methods_.push_back(std::move(mi));
        }
      }
    }
  }

  void resolve_bodies() {
    for (std::size_t i = 0; i < t_.methods_.size(); ++i) {
      const MethodInfo& mi = t_.methods_[i];
      cur_ = &mi;
      scopes_.clear();
      scopes_.emplace_back();
      for (std::size_t p = 0; p < mi.decl->params.size(); ++p) {
        scopes_.back()[mi.decl->params[p].name] = LocalVar{mi.decl->params[p].type, true, p};
      }
      for (const auto& s : mi.decl->body) stmt(*s);
      if (mi.decl->is_main) compute_promoted(mi);
    }
    cur_ = nullptr;
  }

 private:
  void diag(const std::string& code, const std::string& msg, Span span) {
    t_.diagnostics_.push_back(Diagnostic{Severity::Warning, code, msg, cur_ ? cur_->unit_path : "", span});
  }

  const LocalVar* lookup_local(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (auto f = it->find(name); f != it->end()) return &f->second;
    }
    return nullptr;
  }

  void declare_local(const std::string& name, TypeRef type) {
    scopes_.back()[name] = LocalVar{std::move(type), false, 0};
  }

  void block(const std::vector<StmtPtr>& stmts) {
    scopes_.emplace_back();
    for (const auto& s : stmts) stmt(*s);
    scopes_.pop_back();
  }

  void nested(const Stmt& s) {
    scopes_.emplace_back();
    stmt(s);
    scopes_.pop_back();
  }

  void stmt(const Stmt& s) {
    std::visit(Overloaded{
                   [&](const ExprStmt& n) { expr(*n.expr); },
                   [&](const LocalDeclStmt& n) {
                     for (const auto& v : n.vars) {
                       TypeRef type = n.type;
                       type.dims += v.extra_dims;
                       if (v.init) expr(*v.init);
                       declare_local(v.name, type);
                     }
                   },
                   [&](const IfStmt& n) {
                     expr(*n.cond);
                     nested(*n.then_stmt);
                     if (n.else_stmt) nested(*n.else_stmt);
                   },
                   [&](const WhileStmt& n) {
                     expr(*n.cond);
                     nested(*n.body);
                   },
                   [&](const ForStmt& n) {
                     scopes_.emplace_back();
                     for (const auto& i : n.init) stmt(*i);
                     if (n.cond) expr(*n.cond);
                     for (const auto& u : n.update) expr(*u);
                     nested(*n.body);
                     scopes_.pop_back();
                   },
                   [&](const ForEachStmt& n) {
                     expr(*n.iterable);
                     scopes_.emplace_back();
                     declare_local(n.var, n.type);
                     nested(*n.body);
                     scopes_.pop_back();
                   },
                   [&](const SwitchStmt& n) {
                     expr(*n.selector);
                     scopes_.emplace_back();
                     for (const auto& c : n.cases) {
                       for (const auto& l : c.labels) expr(*l);
                       for (const auto& b : c.body) stmt(*b);
                     }
                     scopes_.pop_back();
                   },
                   [&](const ReturnStmt& n) {
                     if (n.value) expr(*n.value);
                   },
                   [&](const BlockStmt& n) { block(n.stmts); },
                   [](const BreakStmt&) {},
                   [](const ContinueStmt&) {},
                   [](const EmptyStmt&) {},
               },
               s.node);
  }

  void record(const Expr& e, Resolution r) {
    if (r.type) t_.types_[&e] = *r.type;
    t_.resolutions_[&e] = std::move(r);
  }

  std::optional<TypeRef> set_type(const Expr& e, std::optional<TypeRef> type) {
    if (type) t_.types_[&e] = *type;
    return type;
  }

  std::optional<TypeRef> name_expr(const Expr& e, const std::string& name) {
    if (const LocalVar* lv = lookup_local(name)) {
      Resolution r;
      r.kind = lv->is_param ? ResolutionKind::Param : ResolutionKind::Local;
      r.name = name;
      r.param_index = lv->index;
      r.type = lv->type;
      record(e, r);
      return lv->type;
    }
    if (const FieldInfo* f = t_.find_field(cur_->class_name, name)) {
      Resolution r;
      r.kind = ResolutionKind::Field;
      r.field = f;
      r.type = f->type;
      record(e, r);
      return f->type;
    }
    Resolution r;
    r.name = name;
    if (t_.find_class(name)) {
      r.kind = ResolutionKind::ClassRef;
    } else if (!name.empty() && std::isupper(static_cast<unsigned char>(name.front()))) {
      r.kind = ResolutionKind::External;
    } else {
      r.kind = ResolutionKind::Unresolved;
      diag("Unresolved", "cannot resolve name '" + name + "'", e.span);
    }
    record(e, r);
    return std::nullopt;
  }

  std::optional<TypeRef> field_access(const Expr& e, const FieldAccessExpr& fa) {
    const Expr& recv = *fa.receiver;
    std::optional<TypeRef> recv_type;
    Resolution r;
    r.name = fa.field;
    if (recv.is<ThisExpr>() || recv.is<SuperExpr>()) {
      std::string cls = cur_->class_name;
      if (recv.is<SuperExpr>()) {
        const auto* ci = t_.find_class(cls);
        cls = ci && ci->decl->superclass ? *ci->decl->superclass : std::string();
      }
      set_type(recv, named(cur_->class_name));
      if (const FieldInfo* f = t_.find_field(cls, fa.field)) {
        r.kind = ResolutionKind::Field;
        r.field = f;
        r.type = f->type;
      } else {
        r.kind = ResolutionKind::Unresolved;
        diag("Unresolved", "no field '" + fa.field + "' in '" + cls + "'", e.span);
      }
      record(e, r);
      return r.type;
    }
    recv_type = expr(recv);
    const Resolution* rr = t_.resolution(recv);
    if (rr && rr->kind == ResolutionKind::ClassRef) {
      if (const FieldInfo* f = t_.find_field(rr->name, fa.field)) {
        r.kind = ResolutionKind::Field;
        r.field = f;
        r.type = f->type;
      } else {
        r.kind = ResolutionKind::External;
      }
    } else if (recv_type && recv_type->is_array() && fa.field == "length") {
      r.kind = ResolutionKind::ArrayLength;
      r.type = named("int");
    } else if (recv_type && recv_type->dims == 0 && t_.find_class(recv_type->name)) {
      if (const FieldInfo* f = t_.find_field(recv_type->name, fa.field)) {
        r.kind = ResolutionKind::Field;
        r.field = f;
        r.type = f->type;
      } else {
        r.kind = ResolutionKind::Unresolved;
        diag("Unresolved", "no field '" + fa.field + "' in '" + recv_type->name + "'", e.span);
      }
    } else {
      r.kind = ResolutionKind::External;
    }
    record(e, r);
    return r.type;
  }

  std::optional<TypeRef> call(const Expr& e, const CallExpr& c) {
    std::optional<std::string> target_class;
    if (!c.receiver) {
      if (c.name == "super") {
        const auto* ci = t_.find_class(cur_->class_name);
        if (ci && ci->decl->superclass) {
          if (const MethodInfo* m = t_.find_constructor(*ci->decl->superclass, c.args.size())) {
            t_.callees_[&e] = m->order;
          }
        }
      } else if (c.name == "this") {
        if (const MethodInfo* m = t_.find_constructor(cur_->class_name, c.args.size())) {
          if (m->decl != cur_->decl) t_.callees_[&e] = m->order;
        }
      } else {
        target_class = cur_->class_name;
      }
    } else if (c.receiver->is<ThisExpr>()) {
      set_type(*c.receiver, named(cur_->class_name));
      target_class = cur_->class_name;
    } else if (c.receiver->is<SuperExpr>()) {
      const auto* ci = t_.find_class(cur_->class_name);
      if (ci && ci->decl->superclass) target_class = *ci->decl->superclass;
    } else {
      auto rt = expr(*c.receiver);
      const Resolution* rr = t_.resolution(*c.receiver);
      if (rr && rr->kind == ResolutionKind::ClassRef) {
        target_class = rr->name;
      } else if (rt && rt->dims == 0 && t_.find_class(rt->name)) {
        target_class = rt->name;
      }
    }
    for (const auto& a : c.args) expr(*a);
    if (target_class) {
      if (const MethodInfo* m = t_.find_method(*target_class, c.name, c.args.size())) {
        t_.callees_[&e] = m->order;
        if (m->decl->return_type && !m->decl->return_type->is_void()) {
          return set_type(e, *m->decl->return_type);
        }
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  std::optional<TypeRef> expr(const Expr& e) {
    return std::visit(
        Overloaded{
            [&](const NameExpr& n) { return name_expr(e, n.name); },
            [&](const ThisExpr&) { return set_type(e, named(cur_->class_name)); },
            [&](const SuperExpr&) -> std::optional<TypeRef> { return std::nullopt; },
            [&](const FieldAccessExpr& n) { return field_access(e, n); },
            [&](const ArrayAccessExpr& n) -> std::optional<TypeRef> {
              auto at = expr(*n.array);
              expr(*n.index);
              if (at && at->is_array()) return set_type(e, at->element());
              return std::nullopt;
            },
            [&](const AssignExpr& n) {
              auto lt = expr(*n.lhs);
              expr(*n.rhs);
              return set_type(e, lt);
            },
            [&](const CallExpr& n) { return call(e, n); },
            [&](const NewExpr& n) {
              for (const auto& a : n.args) expr(*a);
              if (const MethodInfo* m = t_.find_constructor(n.type.name, n.args.size())) {
                t_.callees_[&e] = m->order;
              }
              return set_type(e, n.type);
            },
            [&](const ArrayCreationExpr& n) {
              for (const auto& d : n.dims) expr(*d);
              if (n.init) expr(*n.init);
              TypeRef t = n.element;
              t.dims = static_cast<int>(n.dims.size()) + n.extra_dims;
              return set_type(e, t);
            },
            [&](const ArrayInitExpr& n) -> std::optional<TypeRef> {
              for (const auto& x : n.elements) expr(*x);
              return std::nullopt;
            },
            [&](const LiteralExpr&) { return expression_type(e, t_); },
            [&](const NullExpr&) -> std::optional<TypeRef> { return std::nullopt; },
            [&](const InfixExpr& n) {
              expr(*n.lhs);
              if (n.op != "instanceof") expr(*n.rhs);
              return set_type(e, expression_type(e, t_));
            },
            [&](const PrefixExpr& n) {
              expr(*n.operand);
              return set_type(e, expression_type(e, t_));
            },
            [&](const PostfixExpr& n) {
              expr(*n.operand);
              return set_type(e, expression_type(e, t_));
            },
            [&](const CastExpr& n) {
              expr(*n.operand);
              return set_type(e, n.type);
            },
            [&](const ConditionalExpr& n) {
              expr(*n.cond);
              auto a = expr(*n.then_expr);
              auto b = expr(*n.else_expr);
              return set_type(e, a ? a : b);
            },
            [&](const ParenExpr& n) { return set_type(e, expr(*n.inner)); },
        },
        e.node);
  }

  // Locals of the entry point that receive a fresh object somewhere.
  void compute_promoted(const MethodInfo& mi) {
    std::set<std::string> out;
    std::function<void(const Stmt&)> walk_stmt;
    std::function<void(const Expr&)> walk_expr = [&](const Expr& e) {
      if (const auto* a = e.as<AssignExpr>()) {
        const Expr& rhs = unwrap(*a->rhs);
        if (a->op == "=" && (rhs.is<NewExpr>() || rhs.is<ArrayCreationExpr>())) {
          if (const Resolution* r = t_.resolution(*a->lhs); r && r->kind == ResolutionKind::Local &&
                                                             r->type && !r->type->is_primitive()) {
            out.insert(r->name);
          }
        }
      }
    };
    walk_stmt = [&](const Stmt& s) {
      std::visit(Overloaded{
                     [&](const ExprStmt& n) { walk_expr(*n.expr); },
                     [&](const LocalDeclStmt& n) {
                       for (const auto& v : n.vars) {
                         if (!v.init) continue;
                         const Expr& init = unwrap(*v.init);
                         TypeRef type = n.type;
                         type.dims += v.extra_dims;
                         if ((init.is<NewExpr>() || init.is<ArrayCreationExpr>()) && !type.is_primitive()) {
                           out.insert(v.name);
                         }
                       }
                     },
                     [&](const IfStmt& n) {
                       walk_stmt(*n.then_stmt);
                       if (n.else_stmt) walk_stmt(*n.else_stmt);
                     },
                     [&](const WhileStmt& n) { walk_stmt(*n.body); },
                     [&](const ForStmt& n) {
                       for (const auto& i : n.init) walk_stmt(*i);
                       walk_stmt(*n.body);
                     },
                     [&](const ForEachStmt& n) { walk_stmt(*n.body); },
                     [&](const SwitchStmt& n) {
                       for (const auto& c : n.cases) {
                         for (const auto& b : c.body) walk_stmt(*b);
                       }
                     },
                     [&](const BlockStmt& n) {
                       for (const auto& b : n.stmts) walk_stmt(*b);
                     },
                     [](const auto&) {},
                 },
                 s.node);
    };
    for (const auto& s : mi.decl->body) walk_stmt(*s);
    t_.promoted_[mi.id] = std::move(out);
  }

  SymbolTable& t_;
  const MethodInfo* cur_ = nullptr;
  std::vector<std::map<std::string, LocalVar>> scopes_;
};

const ClassInfo* SymbolTable::find_class(std::string_view name) const {
  auto it = classes_.find(name);
  return it == classes_.end() ? nullptr : &it->second;
}

std::vector<std::string> SymbolTable::superclass_chain(std::string_view cls) const {
  std::vector<std::string> chain;
  std::string cur(cls);
  while (!cur.empty()) {
    const ClassInfo* ci = find_class(cur);
    if (!ci) break;
    for (const auto& seen : chain) {
      if (seen == cur) return chain;  // cyclic extends
    }
    chain.push_back(cur);
    cur = ci->decl->superclass.value_or("");
  }
  return chain;
}

bool SymbolTable::inherits(std::string_view cls, std::string_view ancestor) const {
  for (const auto& c : superclass_chain(cls)) {
    if (c == ancestor) return true;
  }
  return false;
}

const FieldInfo* SymbolTable::find_field(std::string_view cls, std::string_view name) const {
  for (const auto& c : superclass_chain(cls)) {
    for (const auto& f : find_class(c)->fields) {
      if (f.name == name) return &f;
    }
  }
  return nullptr;
}

const MethodInfo* SymbolTable::find_method(std::string_view cls, std::string_view name,
                                           std::size_t arity) const {
  for (const auto& c : superclass_chain(cls)) {
    for (const auto& m : find_class(c)->decl->methods) {
      if (!m.is_constructor && m.name == name && m.arity() == arity) return info(&m);
    }
  }
  return nullptr;
}

const MethodInfo* SymbolTable::find_constructor(std::string_view cls, std::size_t arity) const {
  const ClassInfo* ci = find_class(cls);
  if (!ci) return nullptr;
  for (const auto& m : ci->decl->methods) {
    if (m.is_constructor && m.arity() == arity) return info(&m);
  }
  return nullptr;
}

const MethodInfo* SymbolTable::method(std::string_view id) const {
  auto it = method_index_.find(id);
  return it == method_index_.end() ? nullptr : &methods_[it->second];
}

const MethodInfo* SymbolTable::info(const MethodDecl* decl) const {
  auto it = decl_index_.find(decl);
  return it == decl_index_.end() ? nullptr : &methods_[it->second];
}

const Resolution* SymbolTable::resolution(const Expr& expr) const {
  auto it = resolutions_.find(&expr);
  return it == resolutions_.end() ? nullptr : &it->second;
}

const MethodInfo* SymbolTable::callee(const Expr& call) const {
  auto it = callees_.find(&call);
  return it == callees_.end() ? nullptr : &methods_[it->second];
}

const std::set<std::string>& SymbolTable::promoted_locals(const std::string& id) const {
  static const std::set<std::string> kEmpty;
  auto it = promoted_.find(id);
  return it == promoted_.end() ? kEmpty : it->second;
}

bool SymbolTable::is_overloaded(const MethodInfo& m) const {
  for (const auto& other : m.cls->methods) {
    if (&other != m.decl && other.name == m.decl->name && other.is_constructor == m.decl->is_constructor) {
      return true;
    }
  }
  return false;
}

std::optional<TypeRef> SymbolTable::type_of(const Expr& expr) const {
  auto it = types_.find(&expr);
  if (it != types_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::string> SymbolTable::storage_key(const Expr& expr) const {
  const Expr& e = unwrap(expr);
  const Resolution* r = resolution(e);
  if (!r) return std::nullopt;
  switch (r->kind) {
    case ResolutionKind::Field:
      if (const auto* fa = e.as<FieldAccessExpr>()) {
        if (!fa->receiver->is<ThisExpr>() && !fa->receiver->is<SuperExpr>() && !r->field->is_static) {
          return std::nullopt;  // a field of some other object
        }
      }
      return "field:" + r->field->owner + "." + r->field->name;
    case ResolutionKind::Local:
    case ResolutionKind::Param:
      return "local:" + r->name;
    default:
      return std::nullopt;
  }
}

SymbolTable build_symbols(const Program& program) {
  SymbolTable table;
  Builder builder(table);
  builder.declare(program);
  builder.resolve_bodies();
  return table;
}

}  // namespace permlens::resolve
