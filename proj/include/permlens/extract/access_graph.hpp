#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "permlens/ref_id.hpp"

namespace permlens::extract {

enum class NodeKind : std::uint8_t { ThisM, Context, Var };

struct Node {
  NodeKind kind = NodeKind::Var;
  RefId ref;  // Var only

  static Node this_m() { return Node{NodeKind::ThisM, {}}; }
  static Node context() { return Node{NodeKind::Context, {}}; }
  static Node var(RefId r) { return Node{NodeKind::Var, std::move(r)}; }

  auto operator<=>(const Node&) const = default;
  bool operator==(const Node&) const = default;
};

enum class EdgeLabel : std::uint8_t { Read, Write, Alias };

struct Edge {
  Node src;
  Node dst;
  EdgeLabel label = EdgeLabel::Read;

  auto operator<=>(const Edge&) const = default;
  bool operator==(const Edge&) const = default;
};

enum class LifeEvent : std::uint8_t { Instantiated, Nulled };

struct EntryOrigin {
  bool via_this = false;
  std::vector<std::size_t> via_params;
};

// Per-method access graph: the method (ThisM) and the rest of the program
// (Context) read or write variables; variables alias each other.
class AccessGraph {
 public:
  AccessGraph() = default;
  explicit AccessGraph(std::string method) : method_(std::move(method)) {}

  const std::string& method() const { return method_; }

  void add_var(const RefId& ref) { vars_.insert(ref); }
  void add_edge(const Node& src, const Node& dst, EdgeLabel label);
  void remove_edge(const Node& src, const Node& dst, EdgeLabel label);
  bool has_edge(const Node& src, const Node& dst, EdgeLabel label) const;

  bool this_reads(const RefId& v) const { return has_edge(Node::this_m(), Node::var(v), EdgeLabel::Read); }
  bool this_writes(const RefId& v) const { return has_edge(Node::this_m(), Node::var(v), EdgeLabel::Write); }
  bool context_reads(const RefId& v) const { return has_edge(Node::context(), Node::var(v), EdgeLabel::Read); }
  bool context_writes(const RefId& v) const {
    return has_edge(Node::context(), Node::var(v), EdgeLabel::Write);
  }

  const std::set<RefId>& vars() const { return vars_; }
  const std::set<Edge>& edges() const { return edges_; }
  // Globals the method itself touches, in contract order when known.
  std::vector<RefId> accessed_globals() const;
  std::optional<RefId> alias_target(const RefId& src) const;

  // metadata filled by the extractor
  bool is_main = false;
  bool is_constructor = false;
  std::set<RefId> forced_none;
  std::map<RefId, LifeEvent> last_event;
  std::map<RefId, EntryOrigin> origins;
  std::vector<RefId> order;
  std::set<RefId> returned;
  std::size_t safe_approximations = 0;

 private:
  std::string method_;
  std::set<RefId> vars_;
  std::set<Edge> edges_;
};

// Graphviz text for debugging and the optional graph dump.
std::string to_dot(const AccessGraph& graph);

}  // namespace permlens::extract
