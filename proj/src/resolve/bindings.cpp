#include "permlens/resolve/bindings.hpp"

#include <algorithm>
#include <functional>

#include "permlens/resolve/alias.hpp"
#include "permlens/resolve/refs.hpp"
#include "permlens/util/overloaded.hpp"

namespace permlens::resolve {

using namespace frontend;

namespace {

using Site = std::pair<const Expr*, const MethodInfo*>;  // call expression, callee
using SiteArgs = std::vector<std::vector<RefId>>;
using Visit = std::function<void(const Expr& call, const MethodInfo& callee, const SiteArgs& args)>;

void add_unique(std::vector<RefId>& into, const RefId& r) {
  if (std::find(into.begin(), into.end(), r) == into.end()) into.push_back(r);
}

const std::vector<ExprPtr>* call_args(const Expr& e) {
  if (const auto* c = e.as<CallExpr>()) return &c->args;
  if (const auto* n = e.as<NewExpr>()) return &n->args;
  return nullptr;
}

// Walks one body, tracking which globals each local aliases, and reports
// every resolved call site with the globals bound to each argument.
class SiteWalker {
 public:
  SiteWalker(const SymbolTable& symbols, const MethodInfo& method, AliasState entry, const Visit& visit)
      : map_(symbols, method), state_(std::move(entry)), visit_(visit) {}

  void run() {
    for (const auto& s : map_.method().decl->body) stmt(*s);
  }

 private:
  std::vector<RefId> bind_arg(const Expr& arg) const {
    std::vector<RefId> out;
    if (auto f = map_.denoted_field(arg)) {
      out.push_back(*f);
      return out;
    }
    if (auto d = map_.direct(arg)) {
      for (const auto& g : state_.grv_targets(*d)) out.push_back(g);
    }
    return out;
  }

  void assign_local(const RefId& lhs, const Expr& rhs_raw) {
    if (lhs.is_grv()) return;
    const Expr& rhs = unwrap(rhs_raw);
    if (auto d = map_.direct(rhs)) {
      auto targets = state_.grv_targets(*d);
      if (targets.count(lhs)) return;
      state_.retarget(lhs, std::move(targets));
    } else {
      state_.clear(lhs);
    }
  }

  void expr(const Expr& e) {
    std::visit(Overloaded{
                   [&](const AssignExpr& n) {
                     expr(*n.rhs);
                     expr(*n.lhs);
                     if (n.op == "=") {
                       if (auto d = map_.direct(*n.lhs)) assign_local(*d, *n.rhs);
                     }
                   },
                   [&](const CallExpr& n) {
                     if (n.receiver) expr(*n.receiver);
                     for (const auto& a : n.args) expr(*a);
                     site(e);
                   },
                   [&](const NewExpr& n) {
                     for (const auto& a : n.args) expr(*a);
                     site(e);
                   },
                   [&](const FieldAccessExpr& n) { expr(*n.receiver); },
                   [&](const ArrayAccessExpr& n) {
                     expr(*n.array);
                     expr(*n.index);
                   },
                   [&](const ArrayCreationExpr& n) {
                     for (const auto& d : n.dims) expr(*d);
                     if (n.init) expr(*n.init);
                   },
                   [&](const ArrayInitExpr& n) {
                     for (const auto& x : n.elements) expr(*x);
                   },
                   [&](const InfixExpr& n) {
                     expr(*n.lhs);
                     expr(*n.rhs);
                   },
                   [&](const PrefixExpr& n) { expr(*n.operand); },
                   [&](const PostfixExpr& n) { expr(*n.operand); },
                   [&](const CastExpr& n) { expr(*n.operand); },
                   [&](const ConditionalExpr& n) {
                     expr(*n.cond);
                     expr(*n.then_expr);
                     expr(*n.else_expr);
                   },
                   [&](const ParenExpr& n) { expr(*n.inner); },
                   [](const auto&) {},
               },
               e.node);
  }

  void site(const Expr& e) {
    const MethodInfo* callee = map_.symbols().callee(e);
    if (!callee) return;
    const auto* args = call_args(e);
    SiteArgs bound;
    for (const auto& a : *args) bound.push_back(bind_arg(*a));
    visit_(e, *callee, bound);
  }

  void branch(const std::function<void()>& a, const std::function<void()>& b) {
    AliasState entry = state_;
    a();
    AliasState after_a = state_;
    state_ = entry;
    if (b) b();
    state_.merge(after_a);
  }

  void loop(const std::function<void()>& body) {
    for (int i = 0; i < 4; ++i) {
      AliasState before = state_;
      body();
      state_.merge(before);
      if (state_ == before) break;
    }
  }

  void stmt(const Stmt& s) {
    std::visit(Overloaded{
                   [&](const ExprStmt& n) { expr(*n.expr); },
                   [&](const LocalDeclStmt& n) {
                     for (const auto& v : n.vars) {
                       const RefId lhs = map_.local(v.name);
                       state_.clear(lhs);
                       if (v.init) {
                         expr(*v.init);
                         assign_local(lhs, *v.init);
                       }
                     }
                   },
                   [&](const IfStmt& n) {
                     expr(*n.cond);
                     branch([&] { stmt(*n.then_stmt); },
                            n.else_stmt ? std::function<void()>([&] { stmt(*n.else_stmt); })
                                        : std::function<void()>());
                   },
                   [&](const WhileStmt& n) {
                     expr(*n.cond);
                     loop([&] { stmt(*n.body); });
                   },
                   [&](const ForStmt& n) {
                     for (const auto& i : n.init) stmt(*i);
                     if (n.cond) expr(*n.cond);
                     loop([&] {
                       stmt(*n.body);
                       for (const auto& u : n.update) expr(*u);
                     });
                   },
                   [&](const ForEachStmt& n) {
                     expr(*n.iterable);
                     loop([&] { stmt(*n.body); });
                   },
                   [&](const SwitchStmt& n) {
                     expr(*n.selector);
                     AliasState entry = state_;
                     AliasState merged = state_;
                     for (const auto& c : n.cases) {
                       state_ = entry;
                       for (const auto& b : c.body) stmt(*b);
                       merged.merge(state_);
                     }
                     state_ = merged;
                   },
                   [&](const ReturnStmt& n) {
                     if (n.value) expr(*n.value);
                   },
                   [&](const BlockStmt& n) {
                     for (const auto& b : n.stmts) stmt(*b);
                   },
                   [](const auto&) {},
               },
               s.node);
  }

  RefMapper map_;
  AliasState state_;
  const Visit& visit_;
};

}  // namespace

std::string_view to_string(BindingMode mode) {
  return mode == BindingMode::FirstCallSite ? "first" : "all";
}

const std::vector<RefId>& BindingTable::lookup(const std::string& method, std::size_t index,
                                               BindingMode mode) const {
  static const std::vector<RefId> kUnbound;
  auto it = index_.find({method, index});
  if (it == index_.end()) return kUnbound;
  const ParamBinding& b = list_[it->second];
  return mode == BindingMode::FirstCallSite ? b.primary : b.all;
}

BindingTable bind_parameters(const Program& program, const SymbolTable& symbols) {
  (void)program;
  BindingTable table;
  for (const auto& m : symbols.methods()) {
    for (std::size_t i = 0; i < m.decl->params.size(); ++i) {
      table.index_[{m.id, i}] = table.list_.size();
      table.list_.push_back(ParamBinding{m.id, i, {}, {}});
    }
  }

  auto entry_state = [&](const MethodInfo& m, BindingMode mode) {
    AliasState state;
    RefMapper map(symbols, m);
    for (std::size_t i = 0; i < m.decl->params.size(); ++i) {
      const auto& bound = table.lookup(m.id, i, mode);
      state.retarget(map.param(i), std::set<RefId>(bound.begin(), bound.end()));
    }
    return state;
  };

  // First call site of each callee in program order, ignoring self calls.
  std::map<std::string, const Expr*> first_site;
  {
    Visit record = [&](const Expr& call, const MethodInfo& callee, const SiteArgs&) {
      first_site.emplace(callee.id, &call);
    };
    for (const auto& m : symbols.methods()) {
      Visit filtered = [&](const Expr& call, const MethodInfo& callee, const SiteArgs& a) {
        if (callee.decl != m.decl) record(call, callee, a);
      };
      SiteWalker(symbols, m, AliasState{}, filtered).run();
    }
  }

  const std::size_t limit = symbols.methods().size() + 2;
  for (std::size_t iter = 0; iter < limit; ++iter) {
    bool changed = false;
    for (const auto& m : symbols.methods()) {
      Visit all = [&](const Expr&, const MethodInfo& callee, const SiteArgs& args) {
        for (std::size_t i = 0; i < args.size() && i < callee.decl->params.size(); ++i) {
          auto& b = table.list_[table.index_.at({callee.id, i})];
          for (const auto& g : args[i]) {
            if (std::find(b.all.begin(), b.all.end(), g) == b.all.end()) {
              b.all.push_back(g);
              changed = true;
            }
          }
        }
      };
      SiteWalker(symbols, m, entry_state(m, BindingMode::AllCallSites), all).run();

      Visit first = [&](const Expr& call, const MethodInfo& callee, const SiteArgs& args) {
        auto fs = first_site.find(callee.id);
        if (fs == first_site.end() || fs->second != &call) return;
        for (std::size_t i = 0; i < args.size() && i < callee.decl->params.size(); ++i) {
          auto& b = table.list_[table.index_.at({callee.id, i})];
          std::vector<RefId> next;
          for (const auto& g : args[i]) add_unique(next, g);
          if (next != b.primary) {
            b.primary = std::move(next);
            changed = true;
          }
        }
      };
      SiteWalker(symbols, m, entry_state(m, BindingMode::FirstCallSite), first).run();
    }
    if (!changed) break;
  }
  return table;
}

}  // namespace permlens::resolve
