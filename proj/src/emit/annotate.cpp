#include "permlens/emit/annotate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "permlens/algebra/algebra.hpp"
#include "permlens/resolve/symbols.hpp"

namespace permlens::emit {

using frontend::ClassDecl;
using frontend::CompilationUnit;
using frontend::MethodDecl;

std::string clause(Permission p, std::string_view name) {
  std::string out(to_string(p));
  out += '(';
  out += name;
  out += ')';
  out += kStateSuffix;
  return out;
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += kClauseSeparator;
    out += parts[i];
  }
  return out;
}

const MethodContract* lookup(const ContractIndex& idx, const ClassDecl& cls, const MethodDecl& m) {
  auto it = idx.find(resolve::method_id(cls, m));
  return it == idx.end() ? nullptr : it->second;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; });
}

struct Insert {
  std::size_t at;
  std::size_t seq;
  std::string text;
};

std::string apply_inserts(std::string_view source, std::vector<Insert> inserts) {
  std::stable_sort(inserts.begin(), inserts.end(),
                   [](const Insert& a, const Insert& b) { return a.at < b.at || (a.at == b.at && a.seq < b.seq); });
  std::string out;
  std::size_t pos = 0;
  for (const auto& ins : inserts) {
    out.append(source.substr(pos, ins.at - pos));
    out += ins.text;
    pos = ins.at;
  }
  out.append(source.substr(pos));
  return out;
}

std::string field_annotation(const MethodContract& c, const std::string& indent, bool multiline) {
  const FieldClauses fc = field_clauses(c);
  if (fc.pre.empty()) return "@Perm(ensures=\"" + join(fc.post) + "\")";
  std::string out = "@Perm(requires=\"" + join(fc.pre) + "\",";
  out += multiline ? "\n" + indent + std::string(6, ' ') : " ";
  out += "ensures=\"" + join(fc.post) + "\")";
  return out;
}

std::string render_kind(Permission p) {
  return std::string(to_string(p == Permission::Immutable ? Permission::Pure : p));
}

std::string signature(const MethodDecl& m) {
  std::string out;
  for (const auto& mod : m.modifiers) out += mod + " ";
  if (m.return_type) out += m.return_type->to_string() + " ";
  out += m.name + "(";
  for (std::size_t i = 0; i < m.params.size(); ++i) {
    if (i) out += ", ";
    out += m.params[i].type.to_string() + " " + m.params[i].name;
  }
  out += ")";
  return out;
}

}  // namespace

FieldClauses field_clauses(const MethodContract& c) {
  FieldClauses out;
  for (const auto& e : c.entries) {
    if (!c.is_constructor) out.pre.push_back(clause(e.pre, e.object.name));
    out.post.push_back(clause(e.post, e.object.name));
  }
  if (c.returns) out.post.push_back(clause(c.returns->post, "result"));
  return out;
}

std::string emit_field_level(const CompilationUnit& unit, const ContractIndex& contracts) {
  const std::string_view src = unit.source;
  std::vector<Insert> inserts;
  std::size_t seq = 0;
  for (const auto& cls : unit.classes) {
    for (const auto& m : cls.methods) {
      const MethodContract* c = lookup(contracts, cls, m);
      if (m.is_synthesized) {
        if (!c || c->empty()) continue;
        const std::size_t ls = src.rfind('\n', cls.span.start);
        const std::size_t line_start = ls == std::string_view::npos ? 0 : ls + 1;
        std::string indent(src.substr(line_start, cls.span.start - line_start));
        if (!blank(indent)) indent.clear();
        indent += ' ';
        inserts.push_back({cls.body_open, seq++,
                           "\n" + indent + field_annotation(*c, indent, false) + "\n" + indent + cls.name +
                               "() { } " + std::string(kImplicitMarker)});
        continue;
      }
      if (!c || c->empty()) continue;
      const std::size_t start = m.span.start;
      const std::size_t ls = src.rfind('\n', start == 0 ? 0 : start - 1);
      const std::size_t line_start = (ls == std::string_view::npos || start == 0) ? 0 : ls + 1;
      const std::string prefix(src.substr(line_start, start - line_start));
      if (blank(prefix)) {
        inserts.push_back({line_start, seq++, prefix + field_annotation(*c, prefix, true) + "\n"});
      } else {
        inserts.push_back({start, seq++, field_annotation(*c, "", false) + " "});
      }
    }
    inserts.push_back({cls.span.end, seq++, "\n" + std::string(kEndOfClass)});
  }
  return apply_inserts(src, std::move(inserts));
}

namespace {

// Index just past the ')' closing the annotation that opens at `open`.
std::size_t annotation_end(std::string_view s, std::size_t open) {
  int depth = 0;
  bool quoted = false;
  for (std::size_t i = open; i < s.size(); ++i) {
    const char ch = s[i];
    if (quoted) {
      if (ch == '\\') {
        ++i;
      } else if (ch == '"') {
        quoted = false;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == '(') {
      ++depth;
    } else if (ch == ')' && --depth == 0) {
      return i + 1;
    }
  }
  return s.size();
}

}  // namespace

std::string strip_annotations(std::string_view annotated) {
  std::string s(annotated);
  // synthesized constructors: "\n<ind>@Perm(...)\n<ind>Name() { } /* implicit */"
  for (std::size_t at; (at = s.find(kImplicitMarker)) != std::string::npos;) {
    const std::size_t nl1 = s.rfind('\n', at);
    const std::size_t nl0 = nl1 == 0 || nl1 == std::string::npos ? std::string::npos : s.rfind('\n', nl1 - 1);
    const std::size_t from = nl0 == std::string::npos ? 0 : nl0;
    s.erase(from, at + kImplicitMarker.size() - from);
  }
  const std::string eoc = "\n" + std::string(kEndOfClass);
  for (std::size_t at; (at = s.find(eoc)) != std::string::npos;) s.erase(at, eoc.size());
  for (std::size_t at; (at = s.find("@Perm(")) != std::string::npos;) {
    const std::size_t end = annotation_end(s, at + 5);
    const std::size_t ls = at == 0 ? std::string::npos : s.rfind('\n', at - 1);
    const std::size_t line_start = ls == std::string::npos ? 0 : ls + 1;
    if (blank(std::string_view(s).substr(line_start, at - line_start)) && end < s.size() && s[end] == '\n') {
      s.erase(line_start, end + 1 - line_start);
    } else {
      s.erase(at, end - at + (end < s.size() && s[end] == ' ' ? 1 : 0));
    }
  }
  return s;
}

ObjectClauses object_clauses(const MethodContract& c, bool is_static) {
  ObjectClauses out;
  std::optional<Permission> self;
  std::map<std::size_t, Permission> params;
  for (const auto& e : c.entries) {
    const Permission strongest = algebra::max_restrictive(e.pre, e.post);
    if (e.via_this && !is_static) self = algebra::max_restrictive(self.value_or(Permission::None), strongest);
    for (std::size_t i : e.via_params) {
      auto [it, fresh] = params.emplace(i, strongest);
      if (!fresh) it->second = algebra::max_restrictive(it->second, strongest);
    }
  }
  if (self) out.clauses.push_back(render_kind(*self) + "(this)" + std::string(kStateSuffix));
  for (const auto& [i, p] : params) {
    out.clauses.push_back(render_kind(p) + "(#" + std::to_string(i) + ")" + std::string(kStateSuffix));
  }
  return out;
}

ObjectLevel emit_object_level(const CompilationUnit& unit, const ContractIndex& contracts) {
  ObjectLevel out;
  std::string& t = out.text;
  t += "import edu.cmu.cs.plural.annot.*;\n";
  const std::string ctor_ann = "@Perm(ensures=\"unique(this) in alive\")\n";
  for (const auto& cls : unit.classes) {
    std::map<std::string, std::set<std::size_t>> arities;
    for (const auto& m : cls.methods) {
      if (!m.is_constructor) arities[m.name].insert(m.arity());
    }
    t += "@States({@State(name = \"alive\")})\n";
    t += "class " + cls.name + "{\n";
    bool has_default = false;
    for (const auto& m : cls.methods) {
      has_default = has_default || (m.is_constructor && !m.is_synthesized && m.params.empty());
    }
    if (!has_default) t += ctor_ann + cls.name + "() {   }\n";
    for (const auto& m : cls.methods) {
      if (m.is_synthesized) continue;
      if (m.is_constructor) {
        t += ctor_ann + signature(m) + " {   }\n";
        continue;
      }
      if (arities[m.name].size() > 1) {
        out.diagnostics.push_back({Severity::Warning, "overload",
                                   "overloaded method " + cls.name + "." + m.name + "/" +
                                       std::to_string(m.arity()) + " left out of the object-level program",
                                   unit.path, m.header_span});
        continue;
      }
      const MethodContract* c = lookup(contracts, cls, m);
      if (c && !c->empty()) {
        const auto oc = object_clauses(*c, m.is_static);
        if (!oc.clauses.empty()) {
          const std::string body = join(oc.clauses);
          t += "@Perm(requires=\"" + body + "\",\nensures=\"" + body + "\")\n";
        }
      }
      t += signature(m) + " { }\n";
    }
    t += "}\n";
    t += kEndOfClass;
    t += "\n";
  }
  return out;
}

}  // namespace permlens::emit
