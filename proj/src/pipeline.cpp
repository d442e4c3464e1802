#include "permlens/pipeline.hpp"

#include <chrono>
#include <future>

#include "permlens/extract/extractor.hpp"
#include "permlens/frontend/lower.hpp"
#include "permlens/frontend/parser.hpp"
#include "permlens/infer/infer.hpp"

namespace permlens {

emit::ContractIndex Analysis::index() const {
  emit::ContractIndex idx;
  for (const auto& c : contracts) idx[c.method] = &c;
  return idx;
}

const MethodContract* Analysis::contract(const std::string& method_id) const {
  for (const auto& c : contracts) {
    if (c.method == method_id) return &c;
  }
  return nullptr;
}

const analyze::ConcurrencyMatrix* Analysis::matrix(const std::string& class_name) const {
  for (const auto& m : matrices) {
    if (m.class_name == class_name) return &m;
  }
  return nullptr;
}

std::size_t Analysis::warning_count() const {
  std::size_t n = null_warnings.size();
  for (const auto& d : diagnostics) n += d.severity == Severity::Warning;
  return n;
}

std::unique_ptr<frontend::Program> parse_sources(const std::vector<SourceFile>& files,
                                                 std::vector<Diagnostic>& diagnostics, bool& has_errors) {
  std::vector<std::future<frontend::ParseResult>> jobs;
  jobs.reserve(files.size());
  for (const auto& f : files) {
    jobs.push_back(std::async(std::launch::async, [&f] { return frontend::parse_source(f.text, f.path); }));
  }
  auto program = std::make_unique<frontend::Program>();
  for (auto& job : jobs) {
    auto result = job.get();
    for (const auto& e : result.errors) {
      has_errors = true;
      diagnostics.push_back({Severity::Error, "syntax", e.what(), result.unit.path, e.span()});
    }
    program->units.push_back(std::move(result.unit));
  }
  frontend::lower_field_initializers(*program);
  return program;
}

Analysis analyze_sources(const std::vector<SourceFile>& files, const Options& options) {
  const auto t0 = std::chrono::steady_clock::now();
  Analysis a;
  a.program = parse_sources(files, a.diagnostics, a.has_errors);
  a.symbols = std::make_unique<resolve::SymbolTable>(resolve::build_symbols(*a.program));
  for (const auto& d : a.symbols->diagnostics()) {
    a.has_errors = a.has_errors || d.severity == Severity::Error;
    a.diagnostics.push_back(d);
  }
  a.bindings = std::make_unique<resolve::BindingTable>(resolve::bind_parameters(*a.program, *a.symbols));

  extract::Extractor ex(*a.symbols, *a.bindings, extract::ExtractOptions{options.binding_mode});
  const extract::WorldSummary world = ex.summarize_world();
  std::map<std::string, MethodContract> done;
  const extract::ContractLookup lookup = [&done](const std::string& id) -> const MethodContract* {
    auto it = done.find(id);
    return it == done.end() ? nullptr : &it->second;
  };
  std::size_t safe_approx = 0;
  for (const auto& id : ex.callee_first_order(world)) {
    const resolve::MethodInfo* m = a.symbols->method(id);
    if (!m) continue;
    extract::AccessGraph g = ex.extract(*m, world, lookup);
    safe_approx += g.safe_approximations;
    infer::MethodFacts facts{m->id, m->class_name, m->decl->name, m->is_constructor(), m->is_main()};
    done.emplace(id, infer::infer_contract(facts, g));
    a.graphs.emplace(id, std::move(g));
  }
  for (const auto& m : a.symbols->methods()) {
    a.contracts.push_back(done.at(m.id));
    if (a.symbols->is_overloaded(m)) a.overloaded.insert(m.id);
  }

  a.satisfiability = analyze::check_satisfiability(a.contracts, a.overloaded);
  const resolve::SymbolTable& symbols = *a.symbols;
  a.null_warnings = analyze::null_diagnostics(a.contracts, a.satisfiability, [&symbols](const RefId& r) {
    if (r.scope != RefId::Scope::Field) return true;
    const auto* f = symbols.find_field(r.owner, r.name);
    return !f || !f->type.is_primitive();
  });
  for (const auto& cls : a.symbols->class_order()) {
    std::vector<const MethodContract*> members;
    for (const auto& c : a.contracts) {
      if (c.class_name == cls && !a.overloaded.count(c.method)) members.push_back(&c);
    }
    a.matrices.push_back(analyze::class_matrix(cls, members));
  }
  for (const auto& unit : a.program->units) {
    for (auto d : emit::emit_object_level(unit, a.index()).diagnostics) a.diagnostics.push_back(std::move(d));
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  a.metrics = emit::compute_metrics(a.contracts, a.program->class_count(), safe_approx, ms);
  return a;
}

Analysis analyze_text(std::string text, std::string path, const Options& options) {
  return analyze_sources({SourceFile{std::move(path), std::move(text)}}, options);
}

}  // namespace permlens
