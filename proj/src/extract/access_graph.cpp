#include "permlens/extract/access_graph.hpp"

#include <algorithm>

namespace permlens::extract {

void AccessGraph::add_edge(const Node& src, const Node& dst, EdgeLabel label) {
  if (src.kind == NodeKind::Var) vars_.insert(src.ref);
  if (dst.kind == NodeKind::Var) vars_.insert(dst.ref);
  edges_.insert(Edge{src, dst, label});
}

void AccessGraph::remove_edge(const Node& src, const Node& dst, EdgeLabel label) {
  edges_.erase(Edge{src, dst, label});
}

bool AccessGraph::has_edge(const Node& src, const Node& dst, EdgeLabel label) const {
  return edges_.count(Edge{src, dst, label}) > 0;
}

std::vector<RefId> AccessGraph::accessed_globals() const {
  std::vector<RefId> out;
  for (const auto& v : order) {
    if (this_reads(v) || this_writes(v)) out.push_back(v);
  }
  for (const auto& v : vars_) {
    if (!v.is_grv() || !(this_reads(v) || this_writes(v))) continue;
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

std::optional<RefId> AccessGraph::alias_target(const RefId& src) const {
  for (const auto& e : edges_) {
    if (e.label == EdgeLabel::Alias && e.src.kind == NodeKind::Var && e.src.ref == src) return e.dst.ref;
  }
  return std::nullopt;
}

namespace {

std::string node_name(const Node& n) {
  switch (n.kind) {
    case NodeKind::ThisM: return "ThisM";
    case NodeKind::Context: return "Context";
    case NodeKind::Var: return "\"" + n.ref.key() + "\"";
  }
  return "?";
}

}  // namespace

std::string to_dot(const AccessGraph& graph) {
  std::string out = "digraph \"" + graph.method() + "\" {\n";
  out += "  ThisM [shape=box];\n  Context [shape=box];\n";
  for (const auto& v : graph.vars()) {
    out += "  \"" + v.key() + "\" [label=\"" + v.name + "\"" + (v.is_grv() ? "" : ", style=dashed") + "];\n";
  }
  for (const auto& e : graph.edges()) {
    const char* label = e.label == EdgeLabel::Read ? "r" : e.label == EdgeLabel::Write ? "w" : "alias";
    out += "  " + node_name(e.src) + " -> " + node_name(e.dst) + " [label=\"" + label + "\"" +
           (e.label == EdgeLabel::Alias ? ", style=dotted" : "") + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace permlens::extract
