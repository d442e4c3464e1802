#pragma once

#include <functional>
#include <string>
#include <vector>

#include "permlens/contract.hpp"
#include "permlens/extract/access_graph.hpp"
#include "permlens/extract/rules.hpp"
#include "permlens/resolve/bindings.hpp"
#include "permlens/resolve/symbols.hpp"

namespace permlens::extract {

struct ExtractOptions {
  resolve::BindingMode binding_mode = resolve::BindingMode::FirstCallSite;
};

// Contract of an already-analyzed callee; null while the callee is still
// being analyzed (recursion) or unknown.
using ContractLookup = std::function<const MethodContract*(const std::string& method_id)>;

class Extractor {
 public:
  Extractor(const resolve::SymbolTable& symbols, const resolve::BindingTable& bindings,
            ExtractOptions options = {})
      : symbols_(symbols), bindings_(bindings), options_(options) {}

  // Pass 1: direct accesses of every method plus call-site footprints.
  WorldSummary summarize_world() const;

  // Pass 2: the full graph of one method, given its callees' contracts.
  AccessGraph extract(const resolve::MethodInfo& method, const WorldSummary& world,
                      const ContractLookup& lookup) const;

  // Methods ordered so that callees come before callers; cycles are cut at
  // the back edge.
  std::vector<std::string> callee_first_order(const WorldSummary& world) const;

  const resolve::SymbolTable& symbols() const { return symbols_; }
  const resolve::BindingTable& bindings() const { return bindings_; }
  const ExtractOptions& options() const { return options_; }

 private:
  const resolve::SymbolTable& symbols_;
  const resolve::BindingTable& bindings_;
  ExtractOptions options_;
};

}  // namespace permlens::extract
