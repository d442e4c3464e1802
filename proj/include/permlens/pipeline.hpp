#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "permlens/analyze/analyze.hpp"
#include "permlens/contract.hpp"
#include "permlens/diagnostics.hpp"
#include "permlens/emit/annotate.hpp"
#include "permlens/emit/metrics.hpp"
#include "permlens/extract/access_graph.hpp"
#include "permlens/frontend/ast.hpp"
#include "permlens/resolve/bindings.hpp"
#include "permlens/resolve/symbols.hpp"

namespace permlens {

struct SourceFile {
  std::string path;
  std::string text;
};

struct Options {
  resolve::BindingMode binding_mode = resolve::BindingMode::FirstCallSite;
};

struct Analysis {
  std::unique_ptr<frontend::Program> program;
  std::vector<Diagnostic> diagnostics;
  bool has_errors = false;  // lexical, syntax or duplicate-class errors

  std::unique_ptr<resolve::SymbolTable> symbols;
  std::unique_ptr<resolve::BindingTable> bindings;
  std::vector<MethodContract> contracts;  // program order, one per method
  std::map<std::string, extract::AccessGraph> graphs;
  std::set<std::string> overloaded;

  analyze::SatisfiabilityResult satisfiability;
  std::vector<analyze::NullWarning> null_warnings;
  std::vector<analyze::ConcurrencyMatrix> matrices;
  emit::Metrics metrics;

  emit::ContractIndex index() const;
  const MethodContract* contract(const std::string& method_id) const;
  const analyze::ConcurrencyMatrix* matrix(const std::string& class_name) const;
  std::size_t warning_count() const;
};

// Parses every file concurrently and lowers field initializers.
std::unique_ptr<frontend::Program> parse_sources(const std::vector<SourceFile>& files,
                                                 std::vector<Diagnostic>& diagnostics, bool& has_errors);

Analysis analyze_sources(const std::vector<SourceFile>& files, const Options& options = {});
Analysis analyze_text(std::string text, std::string path = "input.java", const Options& options = {});

}  // namespace permlens
