#include "permlens/emit/report.hpp"

#include <sstream>

namespace permlens::emit {

using nlohmann::ordered_json;

namespace {

ordered_json ratio_json(const analyze::Ratio& r) {
  return {{"count", r.num}, {"total", r.den}, {"percent", r.percent()}};
}

std::string source_of(const Analysis& a, const std::string& path) {
  if (!a.program) return {};
  for (const auto& u : a.program->units) {
    if (u.path == path) return u.source;
  }
  return {};
}

std::string display_name(const Analysis& a, const std::string& method_id) {
  if (const auto* c = a.contract(method_id)) return c->class_name + "." + c->name;
  return method_id;
}

}  // namespace

ordered_json report_json(const Analysis& a, bool with_timing) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;

  ordered_json files = ordered_json::array();
  std::size_t methods = 0;
  if (a.program) {
    for (const auto& u : a.program->units) files.push_back(u.path);
    methods = a.program->method_count();
  }
  j["program"] = {{"files", files},
                  {"classes", a.program ? a.program->class_count() : 0},
                  {"methods", methods}};

  ordered_json contracts = ordered_json::array();
  for (const auto& c : a.contracts) {
    ordered_json entries = ordered_json::array();
    for (const auto& e : c.entries) {
      entries.push_back({{"object", e.object.name},
                         {"ref", e.object.key()},
                         {"pre", to_string(e.pre)},
                         {"post", to_string(e.post)},
                         {"via_this", e.via_this},
                         {"via_params", e.via_params}});
    }
    ordered_json ret = nullptr;
    if (c.returns) ret = {{"object", c.returns->object.name}, {"post", to_string(c.returns->post)}};
    contracts.push_back({{"method", c.method},
                         {"class", c.class_name},
                         {"name", c.name},
                         {"constructor", c.is_constructor},
                         {"main", c.is_main},
                         {"overloaded", a.overloaded.count(c.method) > 0},
                         {"entries", entries},
                         {"returns", ret}});
  }
  j["contracts"] = contracts;

  ordered_json verdicts = ordered_json::array();
  for (const auto& v : a.satisfiability.verdicts) {
    ordered_json unmet = ordered_json::array();
    for (const auto& u : v.unmet) unmet.push_back({{"object", u.object.name}, {"required", to_string(u.required)}});
    verdicts.push_back({{"method", v.method}, {"status", analyze::to_string(v.status)}, {"unmet", unmet}});
  }
  j["satisfiability"] = {{"satisfiable", a.satisfiability.satisfiable()},
                         {"unsatisfiable", a.satisfiability.unsatisfiable()},
                         {"excluded", a.satisfiability.excluded},
                         {"verdicts", verdicts}};

  ordered_json warnings = ordered_json::array();
  for (const auto& w : a.null_warnings) {
    warnings.push_back({{"code", analyze::to_string(w.code)},
                        {"method", w.method},
                        {"object", w.object.name},
                        {"message", w.message}});
  }
  j["warnings"] = warnings;

  ordered_json diags = ordered_json::array();
  for (const auto& d : a.diagnostics) {
    const LineCol lc = line_col(source_of(a, d.file), d.span.start);
    diags.push_back({{"severity", to_string(d.severity)},
                     {"code", d.code},
                     {"message", d.message},
                     {"file", d.file},
                     {"line", lc.line},
                     {"column", lc.column}});
  }
  j["diagnostics"] = diags;

  ordered_json matrices = ordered_json::array();
  for (const auto& m : a.matrices) {
    matrices.push_back({{"class", m.class_name},
                        {"methods", m.names},
                        {"matrix", m.cells},
                        {"symmetric", m.symmetric()},
                        {"concur_m", ratio_json(m.concur_m)},
                        {"concur_mp", ratio_json(m.concur_mp)}});
  }
  j["concurrency"] = matrices;

  const Metrics& mt = a.metrics;
  auto terms = [](const std::vector<Term>& ts) {
    ordered_json out = ordered_json::array();
    for (const auto& t : ts) out.push_back({{"term", t.name}, {"value", t.value}});
    return out;
  };
  ordered_json metrics = {{"classes", mt.classes},
                          {"contracts", mt.contracts},
                          {"m_c", mt.m_c},
                          {"m_nc_f", mt.m_nc_f},
                          {"m_nc_r", mt.m_nc_r},
                          {"loc_p", mt.loc_p},
                          {"anns_p", mt.anns_p},
                          {"anns_f", mt.anns_f},
                          {"safe_approx", mt.safe_approx},
                          {"anns_p_terms", terms(mt.anns_p_terms)},
                          {"anns_f_terms", terms(mt.anns_f_terms)}};
  if (with_timing) metrics["time_ms"] = mt.time_ms;
  j["metrics"] = metrics;
  return j;
}

std::string report_markdown(const Analysis& a) {
  std::ostringstream o;
  const auto& sat = a.satisfiability;
  o << "# permlens report\n\n";
  o << "## Summary\n\n";
  o << "- Classes: " << a.metrics.classes << "\n";
  o << "- Contracts: " << a.metrics.contracts << "\n";
  o << "- Satisfiable methods: " << sat.satisfiable() << "\n";
  o << "- Unsatisfiable methods: " << sat.unsatisfiable() << "\n";
  if (!sat.excluded.empty()) o << "- Excluded overloads: " << sat.excluded.size() << "\n";
  o << "- Null-reference warnings: " << a.null_warnings.size() << "\n";
  o << "- Safe approximations: " << a.metrics.safe_approx << "\n\n";

  o << "## Contracts\n\n";
  o << "| Method | Requires | Ensures |\n|---|---|---|\n";
  for (const auto& c : a.contracts) {
    if (c.empty()) continue;
    const auto fc = field_clauses(c);
    auto cat = [](const std::vector<std::string>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " * " : "") + v[i];
      return s.empty() ? std::string("-") : s;
    };
    o << "| " << c.class_name << "." << c.name << " | " << cat(fc.pre) << " | " << cat(fc.post) << " |\n";
  }
  o << "\n";

  if (sat.unsatisfiable() > 0) {
    o << "## Unsatisfiable methods\n\n";
    for (const auto& v : sat.verdicts) {
      if (v.status == analyze::Status::Satisfiable) continue;
      o << "- " << display_name(a, v.method) << ":";
      for (const auto& u : v.unmet) o << " " << to_string(u.required) << "(" << u.object.name << ")";
      o << "\n";
    }
    o << "\n";
  }
  if (!a.null_warnings.empty()) {
    o << "## Null-reference warnings\n\n";
    for (const auto& w : a.null_warnings) {
      o << "- " << analyze::to_string(w.code) << " in " << display_name(a, w.method) << ": " << w.message << "\n";
    }
    o << "\n";
  }

  o << "## Concurrency\n\n";
  for (const auto& m : a.matrices) {
    o << "### " << m.class_name << "\n\n";
    o << m.concur_m.num << "/" << m.concur_m.den << " methods concurrent (" << m.concur_m.percent() << "%)\n\n";
    o << m.concur_mp.num << "/" << m.concur_mp.den << " method pairs concurrent (" << m.concur_mp.percent()
      << "%)\n\n";
    if (m.names.empty()) continue;
    o << "| |";
    for (const auto& n : m.names) o << " " << n << " |";
    o << "\n|---|";
    for (std::size_t i = 0; i < m.names.size(); ++i) o << "---|";
    o << "\n";
    for (std::size_t i = 0; i < m.names.size(); ++i) {
      o << "| " << m.names[i] << " |";
      for (std::size_t k = 0; k < m.names.size(); ++k) o << (m.cells[i][k] ? " yes |" : " no |");
      o << "\n";
    }
    o << "\n";
  }

  const Metrics& mt = a.metrics;
  o << "## Annotation overhead\n\n";
  o << "- LOC_P = N + C + 1 = " << mt.contracts << " + " << mt.classes << " + 1 = " << mt.loc_p << "\n";
  o << "- Anns_P = " << mt.anns_p << " (";
  for (std::size_t i = 0; i < mt.anns_p_terms.size(); ++i) {
    o << (i ? " + " : "") << mt.anns_p_terms[i].name << " = " << mt.anns_p_terms[i].value;
  }
  o << ")\n- Anns_F = " << mt.anns_f << " (";
  for (std::size_t i = 0; i < mt.anns_f_terms.size(); ++i) {
    o << (i ? " + " : "") << mt.anns_f_terms[i].name << " = " << mt.anns_f_terms[i].value;
  }
  o << ")\n";
  return o.str();
}

}  // namespace permlens::emit
