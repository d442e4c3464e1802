#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "permlens/extract/access_graph.hpp"
#include "permlens/permission.hpp"
#include "permlens/resolve/alias.hpp"

namespace permlens::extract {

struct AccessBits {
  bool read = false;
  bool write = false;

  AccessBits& operator|=(const AccessBits& o) {
    read = read || o.read;
    write = write || o.write;
    return *this;
  }
  bool operator==(const AccessBits&) const = default;
};

// What every method does to every global, before contexts exist. Each
// entry holds the method's own accesses plus a read of everything its
// callees reach.
class WorldSummary {
 public:
  void declare(const std::string& method, bool is_constructor);
  void record(const std::string& method, bool is_constructor, const RefId& ref, AccessBits bits);
  void add_callee(const std::string& method, const std::string& callee);

  // Union over every other non-constructor method.
  AccessBits others(const std::string& method, const RefId& ref) const;
  AccessBits of(const std::string& method, const RefId& ref) const;

  const std::map<std::string, std::map<RefId, AccessBits>>& accesses() const { return accesses_; }
  const std::vector<std::string>& callees(const std::string& method) const;
  bool is_constructor(const std::string& method) const { return constructors_.count(method) > 0; }

 private:
  std::map<std::string, std::map<RefId, AccessBits>> accesses_;
  std::map<std::string, std::vector<std::string>> callees_;
  std::set<std::string> constructors_;
};

enum class ContextKind { Read, ReadWrite, None };

// Applies the per-statement rules to one method's graph. Operands are
// already-resolved references; the AST walker lives in the extractor.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::string method, bool is_main = false, bool is_constructor = false);

  void read(const RefId& ref);
  void value_flow(const RefId& target);
  void object_creation(const RefId& target);
  // source == nullopt: the right-hand side is not a tracked reference.
  void address_flow(const RefId& target, const std::optional<RefId>& source);
  void address_flow_to(const RefId& target, const std::set<RefId>& sources);
  void null_address_flow(const RefId& target);
  void self_address_flow(const RefId&) {}

  void apply_context(const RefId& var, ContextKind kind);
  void apply_mcall(const RefId& var, Permission callee_post);
  // Unknown callee: every global gains a read and a write. Returns whether
  // anything was approximated.
  bool safe_approximate(const std::vector<RefId>& refs);
  void returned(const RefId& ref) { graph_.returned.insert(ref); }

  resolve::AliasState& aliases() { return aliases_; }
  const resolve::AliasState& aliases() const { return aliases_; }
  const AccessGraph& graph() const { return graph_; }
  AccessGraph& graph() { return graph_; }
  std::map<RefId, AccessBits> own_accesses() const;

  // Adds world contexts, applies forced Context-N, normalizes (a write by
  // the method implies a read) and syncs alias edges into the graph.
  AccessGraph finish(const WorldSummary* world);

 private:
  void this_edge(const RefId& v, EdgeLabel label);

  AccessGraph graph_;
  resolve::AliasState aliases_;
  std::map<RefId, ContextKind> mcall_context_;
  std::map<RefId, std::size_t> first_seen_;
};

}  // namespace permlens::extract
