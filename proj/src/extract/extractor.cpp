#include "permlens/extract/extractor.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <tuple>

#include "permlens/frontend/categorize.hpp"
#include "permlens/resolve/refs.hpp"
#include "permlens/util/overloaded.hpp"

namespace permlens::extract {

using namespace frontend;
using resolve::MethodInfo;
using resolve::Resolution;
using resolve::ResolutionKind;

namespace {

constexpr std::array<std::string_view, 10> kValueClasses = {
    "Math", "String", "Integer", "Double", "Long", "Float", "Boolean", "Character", "Short", "Byte"};
constexpr std::array<std::string_view, 8> kObserverMethods = {
    "equals", "hashCode", "toString", "length", "compareTo", "charAt", "intValue", "doubleValue"};

template <std::size_t N>
bool among(const std::array<std::string_view, N>& xs, std::string_view s) {
  return std::find(xs.begin(), xs.end(), s) != xs.end();
}

// Library calls known not to modify their arguments.
bool read_only_library_call(const CallExpr& call, const resolve::SymbolTable& symbols) {
  if (among(kObserverMethods, call.name)) return true;
  if (!call.receiver) return false;
  const Expr& recv = unwrap(*call.receiver);
  if (const auto* fa = recv.as<FieldAccessExpr>()) {
    if (const auto* n = fa->receiver->as<NameExpr>()) {
      if (n->name == "System" && (fa->field == "out" || fa->field == "err")) return true;
    }
  }
  if (const auto* n = recv.as<NameExpr>()) {
    const Resolution* r = symbols.resolution(recv);
    if (r && r->kind == ResolutionKind::External && among(kValueClasses, n->name)) return true;
  }
  if (auto t = symbols.type_of(recv); t && t->dims == 0 && among(kValueClasses, t->name)) return true;
  return false;
}

enum class Mode { Summary, Full };

class MethodWalker {
 public:
  MethodWalker(const Extractor& ex, const MethodInfo& method, GraphBuilder& builder, Mode mode,
               const ContractLookup* lookup, std::vector<std::string>* callees)
      : ex_(ex),
        symbols_(ex.symbols()),
        method_(method),
        map_(ex.symbols(), method),
        b_(builder),
        mode_(mode),
        lookup_(lookup),
        callees_(callees) {}

  void run() {
    const auto& params = method_.decl->params;
    for (std::size_t i = 0; i < params.size(); ++i) {
      const auto& bound = ex_.bindings().lookup(method_.id, i, ex_.options().binding_mode);
      if (!bound.empty()) b_.aliases().retarget(map_.param(i), std::set<RefId>(bound.begin(), bound.end()));
    }
    for (const auto& s : method_.decl->body) stmt(*s);
    b_.graph().safe_approximations = approx_sites_.size();
  }

 private:
  // ---- reads ----
  void read_path(const Expr& raw) {
    const Expr& e = unwrap(raw);
    if (auto d = map_.direct(e)) {
      b_.read(*d);
      return;
    }
    if (const auto* fa = e.as<FieldAccessExpr>()) {
      const Resolution* r = symbols_.resolution(e);
      if (r && r->kind == ResolutionKind::External) {
        eval(*fa->receiver);
        return;
      }
      if (fa->receiver->is<ThisExpr>() || fa->receiver->is<SuperExpr>()) return;
      read_path(*fa->receiver);
      return;
    }
    if (const auto* aa = e.as<ArrayAccessExpr>()) {
      read_path(*aa->array);
      eval(*aa->index);
      return;
    }
    if (e.is<NameExpr>()) return;  // local or unresolved name
    eval(e);
  }

  std::set<RefId> grvs_of(const Expr& e) const {
    if (auto r = map_.root(e)) return b_.aliases().grv_targets(*r);
    return {};
  }

  void eval(const Expr& e) {
    std::visit(Overloaded{
                   [&](const NameExpr&) { read_path(e); },
                   [&](const FieldAccessExpr&) { read_path(e); },
                   [&](const ArrayAccessExpr&) { read_path(e); },
                   [&](const AssignExpr& n) { assign(e, n); },
                   [&](const CallExpr& n) { call(e, n); },
                   [&](const NewExpr& n) {
                     for (const auto& a : n.args) eval(*a);
                   },
                   [&](const ArrayCreationExpr& n) {
                     for (const auto& d : n.dims) eval(*d);
                     if (n.init) eval(*n.init);
                   },
                   [&](const ArrayInitExpr& n) {
                     for (const auto& x : n.elements) eval(*x);
                   },
                   [&](const InfixExpr& n) {
                     eval(*n.lhs);
                     if (n.op != "instanceof") eval(*n.rhs);
                   },
                   [&](const PrefixExpr& n) {
                     if (n.op == "++" || n.op == "--") {
                       increment(*n.operand);
                     } else {
                       eval(*n.operand);
                     }
                   },
                   [&](const PostfixExpr& n) { increment(*n.operand); },
                   [&](const CastExpr& n) { eval(*n.operand); },
                   [&](const ConditionalExpr& n) {
                     eval(*n.cond);
                     eval(*n.then_expr);
                     eval(*n.else_expr);
                   },
                   [&](const ParenExpr& n) { eval(*n.inner); },
                   [](const auto&) {},
               },
               e.node);
  }

  void increment(const Expr& operand) {
    read_path(operand);
    if (auto r = map_.root(operand)) b_.value_flow(*r);
  }

  // ---- assignments ----
  void assign(const Expr& whole, const AssignExpr& a) {
    const Expr& lhs = unwrap(*a.lhs);
    if (map_.is_interior(lhs)) {
      // a store into some object's field or element writes that object
      eval(*a.rhs);
      if (const auto* aa = lhs.as<ArrayAccessExpr>()) eval(*aa->index);
      if (const auto* fa = lhs.as<FieldAccessExpr>()) {
        if (!map_.root(*fa->receiver)) eval(*fa->receiver);
      }
      if (a.op != "=") read_path(lhs);
      if (auto r = map_.root(lhs)) b_.value_flow(*r);
      return;
    }
    auto target = map_.direct(lhs);
    if (!target) {
      eval(*a.rhs);
      return;
    }
    if (a.op != "=") {
      eval(*a.rhs);
      b_.read(*target);
      b_.value_flow(*target);
      return;
    }
    apply(*target, frontend::categorize(whole, symbols_), *a.rhs);
  }

  void apply(const RefId& target, ExprCategory cat, const Expr& rhs_raw) {
    const Expr& rhs = unwrap(rhs_raw);
    switch (cat) {
      case ExprCategory::ValueFlow:
        eval(rhs_raw);
        b_.value_flow(target);
        break;
      case ExprCategory::ObjectCreation:
        eval(rhs_raw);
        b_.object_creation(target);
        break;
      case ExprCategory::NullAddressFlow:
        b_.null_address_flow(target);
        break;
      case ExprCategory::SelfAddressFlow:
        b_.self_address_flow(target);
        break;
      case ExprCategory::AddressFlow:
        if (const auto* c = rhs.as<CallExpr>()) {
          auto returned = call(rhs, *c);
          b_.address_flow_to(target, returned);
        } else if (auto d = map_.direct(rhs)) {
          b_.address_flow(target, *d);
        } else if (map_.is_interior(rhs)) {
          read_path(rhs);
          b_.address_flow(target, map_.root(rhs));
        } else {
          eval(rhs_raw);
          b_.address_flow(target, std::nullopt);
        }
        break;
      default:
        eval(rhs_raw);
        break;
    }
  }

  // ---- calls ----
  std::set<RefId> call(const Expr& e, const CallExpr& c) {
    const MethodInfo* callee = symbols_.callee(e);
    const bool implicit_receiver =
        !c.receiver || c.receiver->is<ThisExpr>() || c.receiver->is<SuperExpr>();
    if (c.receiver && !implicit_receiver) read_path(*c.receiver);
    for (const auto& a : c.args) eval(*a);

    if (!callee) {
      if (read_only_library_call(c, symbols_)) return {};
      std::vector<RefId> refs;
      if (c.receiver && !implicit_receiver) {
        for (const auto& g : grvs_of(*c.receiver)) refs.push_back(g);
      }
      for (const auto& a : c.args) {
        for (const auto& g : grvs_of(*a)) refs.push_back(g);
      }
      if (b_.safe_approximate(refs)) approx_sites_.insert(&e);
      return {};
    }
    if (callee->decl == method_.decl) return {};  // direct recursion adds nothing
    if (mode_ == Mode::Summary) {
      if (callees_) callees_->push_back(callee->id);
      return {};
    }
    const MethodContract* contract = lookup_ ? (*lookup_)(callee->id) : nullptr;
    if (!contract) return {};

    bool static_receiver = false;
    std::set<RefId> receiver_refs;
    if (c.receiver && !implicit_receiver) {
      const Resolution* rr = symbols_.resolution(unwrap(*c.receiver));
      static_receiver = rr && rr->kind == ResolutionKind::ClassRef;
      if (!static_receiver) receiver_refs = grvs_of(*c.receiver);
    }
    auto map_entry = [&](const RefId& object, const ContractEntry* entry) {
      std::set<RefId> out;
      const resolve::FieldInfo* fi =
          object.scope == RefId::Scope::Field ? symbols_.find_field(object.owner, object.name) : nullptr;
      if ((fi && fi->is_static) || !entry) {
        out.insert(object);
        return out;
      }
      if (entry->via_this) {
        if (implicit_receiver || static_receiver) {
          out.insert(object);
        } else {
          out.insert(receiver_refs.begin(), receiver_refs.end());
        }
      }
      for (std::size_t i : entry->via_params) {
        if (i < c.args.size()) {
          auto g = grvs_of(*c.args[i]);
          out.insert(g.begin(), g.end());
        }
      }
      if (!entry->via_this && entry->via_params.empty()) out.insert(object);
      return out;
    };
    for (const auto& entry : contract->entries) {
      for (const auto& t : map_entry(entry.object, &entry)) b_.apply_mcall(t, entry.post);
    }
    if (contract->returns) {
      return map_entry(contract->returns->object, contract->find(contract->returns->object));
    }
    return {};
  }

  // ---- statements ----
  void branch(const std::function<void()>& a, const std::function<void()>& b) {
    resolve::AliasState entry = b_.aliases();
    a();
    resolve::AliasState after_a = b_.aliases();
    b_.aliases() = entry;
    if (b) b();
    b_.aliases().merge(after_a);
  }

  void loop(const std::function<void()>& body) {
    for (int i = 0; i < 4; ++i) {
      resolve::AliasState before = b_.aliases();
      body();
      b_.aliases().merge(before);
      if (b_.aliases() == before) break;
    }
  }

  void declarator(const LocalDeclStmt& d, const Declarator& v) {
    const RefId target = map_.local(v.name);
    b_.aliases().clear(target);
    if (!v.init) return;
    const ExprCategory cat = frontend::categorize_declarator(d.type, v, symbols_);
    if (cat == ExprCategory::NullAddressFlow && !target.is_grv()) return;  // T v = null
    apply(target, cat, *v.init);
  }

  void stmt(const Stmt& s) {
    std::visit(Overloaded{
                   [&](const ExprStmt& n) { eval(*n.expr); },
                   [&](const LocalDeclStmt& n) {
                     for (const auto& v : n.vars) declarator(n, v);
                   },
                   [&](const IfStmt& n) {
                     eval(*n.cond);
                     branch([&] { stmt(*n.then_stmt); },
                            n.else_stmt ? std::function<void()>([&] { stmt(*n.else_stmt); })
                                        : std::function<void()>());
                   },
                   [&](const WhileStmt& n) {
                     eval(*n.cond);
                     loop([&] { stmt(*n.body); });
                   },
                   [&](const ForStmt& n) {
                     for (const auto& i : n.init) stmt(*i);
                     if (n.cond) eval(*n.cond);
                     loop([&] {
                       stmt(*n.body);
                       for (const auto& u : n.update) eval(*u);
                     });
                   },
                   [&](const ForEachStmt& n) {
                     read_path(*n.iterable);
                     loop([&] { stmt(*n.body); });
                   },
                   [&](const SwitchStmt& n) {
                     eval(*n.selector);
                     resolve::AliasState entry = b_.aliases();
                     resolve::AliasState merged = entry;
                     for (const auto& c : n.cases) {
                       b_.aliases() = entry;
                       for (const auto& x : c.body) stmt(*x);
                       merged.merge(b_.aliases());
                     }
                     b_.aliases() = merged;
                   },
                   [&](const ReturnStmt& n) {
                     if (!n.value) return;
                     eval(*n.value);
                     if (!method_.decl->returns_reference()) return;
                     if (auto d = map_.direct(*n.value)) {
                       for (const auto& g : b_.aliases().grv_targets(*d)) b_.returned(g);
                     }
                   },
                   [&](const BlockStmt& n) {
                     for (const auto& x : n.stmts) stmt(*x);
                   },
                   [](const auto&) {},
               },
               s.node);
  }

  const Extractor& ex_;
  const resolve::SymbolTable& symbols_;
  const MethodInfo& method_;
  resolve::RefMapper map_;
  GraphBuilder& b_;
  Mode mode_;
  const ContractLookup* lookup_;
  std::vector<std::string>* callees_;
  std::set<const Expr*> approx_sites_;
};

}  // namespace

WorldSummary Extractor::summarize_world() const {
  WorldSummary world;
  std::map<std::string, std::map<RefId, AccessBits>> own;
  std::map<std::string, std::vector<std::string>> calls;
  for (const auto& m : symbols_.methods()) {
    GraphBuilder b(m.id, m.is_main(), m.is_constructor());
    std::vector<std::string> callees;
    MethodWalker(*this, m, b, Mode::Summary, nullptr, &callees).run();
    own[m.id] = b.own_accesses();
    for (const auto& c : callees) world.add_callee(m.id, c);
    calls[m.id] = world.callees(m.id);
  }
  // transitive footprint of each method
  std::map<std::string, std::set<RefId>> footprint;
  for (const auto& [id, refs] : own) {
    for (const auto& [r, bits] : refs) footprint[id].insert(r);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [id, callees] : calls) {
      auto& fp = footprint[id];
      for (const auto& c : callees) {
        for (const auto& r : footprint[c]) changed = fp.insert(r).second || changed;
      }
    }
  }
  for (const auto& m : symbols_.methods()) {
    const bool ctor = m.is_constructor();
    for (const auto& [r, bits] : own[m.id]) world.record(m.id, ctor, r, bits);
    for (const auto& c : calls[m.id]) {
      for (const auto& r : footprint[c]) world.record(m.id, ctor, r, AccessBits{true, false});
    }
    world.declare(m.id, ctor);
  }
  return world;
}

AccessGraph Extractor::extract(const MethodInfo& m, const WorldSummary& world, const ContractLookup& lookup) const {
  GraphBuilder b(m.id, m.is_main(), m.is_constructor());
  MethodWalker(*this, m, b, Mode::Full, &lookup, nullptr).run();
  AccessGraph g = b.finish(&world);

  // origins and contract order
  const auto chain = symbols_.superclass_chain(m.class_name);
  const auto& first_seen = g.order;
  using Key = std::tuple<int, std::size_t, std::size_t, std::size_t>;
  std::vector<std::pair<Key, RefId>> keyed;
  for (const auto& v : g.vars()) {
    if (!v.is_grv() || !(g.this_reads(v) || g.this_writes(v))) continue;
    EntryOrigin origin;
    const resolve::FieldInfo* fi =
        v.scope == RefId::Scope::Field ? symbols_.find_field(v.owner, v.name) : nullptr;
    std::size_t depth = chain.size();
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (chain[i] == v.owner) depth = i;
    }
    origin.via_this = fi && !fi->is_static && !m.decl->is_static && depth < chain.size();
    std::size_t bind_pos = 0;
    for (std::size_t i = 0; i < m.decl->params.size(); ++i) {
      const auto& bound = bindings_.lookup(m.id, i, options_.binding_mode);
      auto it = std::find(bound.begin(), bound.end(), v);
      if (it != bound.end()) {
        if (origin.via_params.empty()) bind_pos = static_cast<std::size_t>(it - bound.begin());
        origin.via_params.push_back(i);
      }
    }
    const std::size_t seen =
        static_cast<std::size_t>(std::find(first_seen.begin(), first_seen.end(), v) - first_seen.begin());
    Key key;
    if (depth < chain.size() && fi) {
      key = Key{0, depth, fi->index, seen};
    } else if (!origin.via_params.empty()) {
      key = Key{1, origin.via_params.front(), bind_pos, seen};
    } else if (fi) {
      const auto* ci = symbols_.find_class(v.owner);
      key = Key{2, ci ? ci->order : 0, fi->index, seen};
    } else {
      key = Key{3, seen, 0, 0};
    }
    keyed.emplace_back(key, v);
    g.origins[v] = origin;
  }
  std::sort(keyed.begin(), keyed.end());
  g.order.clear();
  for (const auto& [k, v] : keyed) g.order.push_back(v);
  return g;
}

std::vector<std::string> Extractor::callee_first_order(const WorldSummary& world) const {
  std::vector<std::string> out;
  std::set<std::string> done;
  std::set<std::string> active;
  std::function<void(const std::string&)> visit = [&](const std::string& id) {
    if (done.count(id) || active.count(id)) return;
    active.insert(id);
    for (const auto& c : world.callees(id)) visit(c);
    active.erase(id);
    done.insert(id);
    out.push_back(id);
  };
  for (const auto& m : symbols_.methods()) visit(m.id);
  return out;
}

}  // namespace permlens::extract
