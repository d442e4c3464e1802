#include <random>

#include "ast_walk.hpp"
#include "doctest.h"
#include "permlens/pipeline.hpp"
#include "permlens/resolve/alias.hpp"
#include "permlens/resolve/refs.hpp"
#include "support.hpp"

using namespace permlens;
using namespace permlens::resolve;

namespace {

const MethodInfo& method_named(const SymbolTable& s, const std::string& id) {
  const MethodInfo* m = s.method(id);
  REQUIRE_MESSAGE(m, id);
  return *m;
}

// Every expression of a method whose printed form is a bare name or this.f.
std::vector<const frontend::Expr*> names_in(const MethodInfo& m, const std::string& name) {
  std::vector<const frontend::Expr*> out;
  testsupport::walk_method(*m.decl, [&](const frontend::Expr& e) {
    if (const auto* n = e.as<frontend::NameExpr>(); n && n->name == name) out.push_back(&e);
    if (const auto* fa = e.as<frontend::FieldAccessExpr>(); fa && fa->field == name) out.push_back(&e);
  });
  return out;
}

}  // namespace

TEST_CASE("symbols: array1 inside incrColl is the ArrayCollection field") {
  auto a = analyze_text(testsupport::example());
  const auto& m = method_named(*a.symbols, "ArrayCollection.incrColl/1");
  RefMapper map(*a.symbols, m);
  auto uses = names_in(m, "array1");
  REQUIRE(uses.size() == 3);
  for (const auto* e : uses) {
    const Resolution* r = a.symbols->resolution(*e);
    REQUIRE(r);
    CHECK(r->kind == ResolutionKind::Field);
    CHECK(map.direct(*e) == RefId::field("ArrayCollection", "array1"));
  }
}

TEST_CASE("symbols: locals shadow fields") {
  auto a = analyze_text("class S { Integer[] v; void f(){ Integer[] v = new Integer[2]; v[0] = 1; } void g(){ v[0] = 2; } }");
  const auto& f = method_named(*a.symbols, "S.f/0");
  for (const auto* e : names_in(f, "v")) {
    CHECK(a.symbols->resolution(*e)->kind == ResolutionKind::Local);
  }
  const auto& g = method_named(*a.symbols, "S.g/0");
  for (const auto* e : names_in(g, "v")) {
    CHECK(a.symbols->resolution(*e)->kind == ResolutionKind::Field);
  }
}

TEST_CASE("symbols: unresolved names become diagnostics, never aborts") {
  auto a = analyze_text("class S { void f(){ q = 3; } }");
  bool flagged = false;
  for (const auto& d : a.diagnostics) flagged = flagged || d.severity != Severity::Error;
  CHECK(flagged);
  CHECK(a.contracts.size() == 1);
}

TEST_CASE("symbols: duplicate class names are errors") {
  auto a = analyze_sources({{"a.java", "class A { }"}, {"b.java", "class A { }"}});
  CHECK(a.has_errors);
}

TEST_CASE("symbols: program ids and overload detection") {
  auto a = analyze_text("class O { void f(){ } void f(int x){ } void g(){ } }");
  CHECK(a.symbols->method("O.f/0"));
  CHECK(a.symbols->method("O.f/1"));
  CHECK(a.symbols->is_overloaded(method_named(*a.symbols, "O.f/1")));
  CHECK(!a.symbols->is_overloaded(method_named(*a.symbols, "O.g/0")));
}

TEST_CASE("classify: fields, aliases and fresh locals") {
  const RefId x = RefId::field("ObjectClass", "x");
  const RefId t = RefId::local("ObjectClass.manipulateObjects/2", "t");
  const RefId i = RefId::local("ObjectClass.manipulateObjects/2", "i");
  AliasState s;
  CHECK(classify(x, s) == RefKind::Grv);
  CHECK(classify(i, s) == RefKind::Lv);
  s.retarget(t, {x});  // t = x
  CHECK(classify(t, s) == RefKind::Lrv);
  CHECK(s.grv_targets(t) == std::set<RefId>{x});
  s.clear(t);  // t = new Client()
  CHECK(classify(t, s) == RefKind::Lv);
  CHECK(classify(x, s) == RefKind::Grv);
}

TEST_CASE("classify: merged paths may leave several targets") {
  const RefId a = RefId::field("C", "a"), b = RefId::field("C", "b");
  const RefId t = RefId::local("C.m/0", "t");
  AliasState one, two;
  one.retarget(t, {a});
  two.retarget(t, {b});
  one.merge(two);
  CHECK(one.targets(t).size() == 2);
  CHECK(!one.functional());
  CHECK(one.acyclic());
}

TEST_CASE("alias property: straight-line assignments keep one target per local") {
  std::mt19937 rng(20240607);
  std::vector<RefId> refs;
  for (int k = 0; k < 4; ++k) refs.push_back(RefId::field("C", "f" + std::to_string(k)));
  for (int k = 0; k < 5; ++k) refs.push_back(RefId::local("C.m/0", "l" + std::to_string(k)));
  std::uniform_int_distribution<std::size_t> pick(0, refs.size() - 1);
  std::uniform_int_distribution<int> op(0, 2);

  for (int run = 0; run < 2000; ++run) {
    AliasState s;
    for (int step = 0; step < 30; ++step) {
      const RefId& lhs = refs[pick(rng)];
      const RefId& rhs = refs[pick(rng)];
      switch (op(rng)) {
        case 0: {  // lhs = rhs
          if (lhs.is_grv()) break;  // global stores do not create alias edges here
          std::set<RefId> next;
          if (rhs.is_grv() || s.targets(rhs).empty()) {
            next = {rhs};
          } else {
            next = s.targets(rhs);
          }
          bool self = false;
          for (const auto& n : next) self = self || n == lhs || s.reaches(n, lhs);
          if (!self) s.retarget(lhs, next);
          break;
        }
        case 1: s.clear(lhs); break;  // lhs = new T() or null
        default: break;               // reads leave aliases alone
      }
      REQUIRE(s.functional());
      REQUIRE(s.acyclic());
      for (const auto& r : refs) {
        if (classify(r, s) == RefKind::Lrv) REQUIRE(s.targets(r).size() == 1);
      }
    }
  }
}

TEST_CASE("bindings: the example call sites") {
  auto a = analyze_text(testsupport::example());
  const auto& b = *a.bindings;
  const auto mode = BindingMode::FirstCallSite;
  CHECK(b.lookup("ObjectClass.manipulateObjects/2", 0, mode) ==
        std::vector<RefId>{RefId::field("ObjectClass", "w")});
  CHECK(b.lookup("ObjectClass.manipulateObjects/2", 1, mode) ==
        std::vector<RefId>{RefId::field("ObjectClass", "z")});
  CHECK(b.lookup("ArrayCollection.incrColl/1", 0, mode) ==
        std::vector<RefId>{RefId::field("ObjectClass", "array2")});
  CHECK(b.lookup("ArrayCollection.createColl/1", 0, mode).empty());
}

TEST_CASE("bindings: first call site versus all call sites") {
  auto a = analyze_text(testsupport::example());
  const auto& b = *a.bindings;
  const std::vector<RefId> first = b.lookup("ArrayCollection.computeStat/1", 0, BindingMode::FirstCallSite);
  const std::vector<RefId> all = b.lookup("ArrayCollection.computeStat/1", 0, BindingMode::AllCallSites);
  CHECK(first == std::vector<RefId>{RefId::field("ArrayCollection", "array1")});
  CHECK(all == std::vector<RefId>{RefId::field("ArrayCollection", "array1"), RefId::field("ObjectClass", "array2")});
  // callee parameters inherit the caller's binding
  CHECK(b.lookup("ArrayCollection.printColl/1", 0, BindingMode::FirstCallSite) == first);
}

TEST_CASE("bindings: fresh arguments leave the parameter unbound") {
  auto a = analyze_text("class B { Integer[] f; void use(Integer[] p){ p[0] = 1; } void go(){ use(new Integer[3]); } }");
  CHECK(a.bindings->lookup("B.use/1", 0, BindingMode::AllCallSites).empty());
}

TEST_CASE("bindings: every binding has a syntactic call site on every fixture") {
  for (const auto& path : testsupport::all_fixtures()) {
    auto a = analyze_text(testsupport::read_text(path), path.string());
    REQUIRE(!a.has_errors);
    // brute-force scan: (callee name, arity) -> argument expressions at that position
    std::multimap<std::pair<std::string, std::size_t>, const frontend::CallExpr*> sites;
    testsupport::walk_program(*a.program, [&](const frontend::Expr& e) {
      if (const auto* c = e.as<frontend::CallExpr>()) sites.emplace(std::pair{c->name, c->args.size()}, c);
    });
    for (const auto& pb : a.bindings->bindings()) {
      if (pb.all.empty()) continue;
      const MethodInfo& m = method_named(*a.symbols, pb.method);
      auto [lo, hi] = sites.equal_range({m.decl->name, m.decl->arity()});
      if (m.is_constructor()) {
        // constructor arguments come from `new`
        bool found = false;
        testsupport::walk_program(*a.program, [&](const frontend::Expr& e) {
          if (const auto* n = e.as<frontend::NewExpr>(); n && n->type.name == m.class_name &&
                                                         n->args.size() == m.decl->arity())
            found = true;
        });
        CHECK_MESSAGE(found, pb.method);
        continue;
      }
      CHECK_MESSAGE(lo != hi, pb.method);
      for (const auto& ref : pb.all) {
        bool named = false;
        for (auto it = lo; it != hi; ++it) {
          const auto& arg = frontend::unwrap(*it->second->args[pb.param_index]);
          // the argument names the object or passes a variable that carries it
          auto visit = [&](const frontend::Expr& e) {
            if (const auto* n = e.as<frontend::NameExpr>()) {
              const Resolution* r = a.symbols->resolution(e);
              const bool carrier = r && (r->kind == ResolutionKind::Param || r->kind == ResolutionKind::Local);
              named = named || n->name == ref.name || carrier;
            }
            if (const auto* fa = e.as<frontend::FieldAccessExpr>()) named = named || fa->field == ref.name;
          };
          testsupport::walk_expr(arg, visit);
        }
        CHECK_MESSAGE(named, pb.method << " -> " << ref.key());
      }
    }
  }
}
