#include <regex>

#include "doctest.h"
#include "json.hpp"
#include "permlens/emit/annotate.hpp"
#include "permlens/emit/metrics.hpp"
#include "permlens/emit/report.hpp"
#include "permlens/pipeline.hpp"
#include "support.hpp"

using namespace permlens;
using namespace permlens::emit;
using nlohmann::json;

namespace {

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string field_level(const Analysis& a, std::size_t unit = 0) {
  return emit_field_level(a.program->units.at(unit), a.index());
}

std::string object_level(const Analysis& a, std::size_t unit = 0) {
  return emit_object_level(a.program->units.at(unit), a.index()).text;
}

// A small subset of JSON Schema: type, enum, required, properties,
// additionalProperties, items, minimum, maximum and local $ref.
class MiniValidator {
 public:
  explicit MiniValidator(json schema) : root_(std::move(schema)) {}

  std::vector<std::string> validate(const json& doc) const {
    std::vector<std::string> errs;
    check(root_, doc, "$", errs);
    return errs;
  }

 private:
  const json& resolve(const json& s) const {
    if (!s.contains("$ref")) return s;
    const std::string ref = s["$ref"];
    REQUIRE(ref.rfind("#/$defs/", 0) == 0);
    return root_["$defs"][ref.substr(8)];
  }

  static bool has_type(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    return false;
  }

  void check(const json& schema, const json& v, const std::string& at, std::vector<std::string>& errs) const {
    const json& s = resolve(schema);
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_array()) {
        for (const auto& t : s["type"]) ok = ok || has_type(v, t);
      } else {
        ok = has_type(v, s["type"]);
      }
      if (!ok) {
        errs.push_back(at + ": wrong type");
        return;
      }
    }
    if (s.contains("enum")) {
      bool found = false;
      for (const auto& e : s["enum"]) found = found || e == v;
      if (!found) errs.push_back(at + ": not in enum");
    }
    if (v.is_number()) {
      if (s.contains("minimum") && v.get<double>() < s["minimum"].get<double>()) errs.push_back(at + ": below minimum");
      if (s.contains("maximum") && v.get<double>() > s["maximum"].get<double>()) errs.push_back(at + ": above maximum");
    }
    if (v.is_object()) {
      if (s.contains("required")) {
        for (const auto& r : s["required"]) {
          if (!v.contains(r.get<std::string>())) errs.push_back(at + ": missing " + r.get<std::string>());
        }
      }
      for (const auto& [k, val] : v.items()) {
        if (s.contains("properties") && s["properties"].contains(k)) {
          check(s["properties"][k], val, at + "." + k, errs);
        } else if (s.value("additionalProperties", true) == false) {
          errs.push_back(at + ": unexpected " + k);
        }
      }
    }
    if (v.is_array() && s.contains("items")) {
      for (std::size_t i = 0; i < v.size(); ++i) check(s["items"], v[i], at + "[" + std::to_string(i) + "]", errs);
    }
  }

  json root_;
};

json load_schema() { return json::parse(testsupport::read_text(std::filesystem::path(PERMLENS_DOCS_DIR) / "report.schema.json")); }

std::size_t count_clause_tokens(const std::string& annotated) {
  static const std::regex token(R"((unique|full|share|pure|immutable|none)\(\w+\))");
  std::size_t n = 0;
  std::istringstream in(annotated);
  bool in_annotation = false;
  for (std::string line; std::getline(in, line);) {
    if (contains(line, "@Perm(")) in_annotation = true;
    if (in_annotation) n += std::distance(std::sregex_iterator(line.begin(), line.end(), token), std::sregex_iterator());
    if (in_annotation && contains(line, "\")")) in_annotation = false;
  }
  return n;
}

}  // namespace

TEST_CASE("field level: printColl") {
  auto a = analyze_text(testsupport::example());
  const std::string out = field_level(a);
  CHECK(contains(out,
                 " @Perm(requires=\"pure(array1) in alive\",\n"
                 "       ensures=\"pure(array1) in alive\")\n"
                 " public void printColl(Integer[] coll) {"));
}

TEST_CASE("field level: tidyupColls") {
  auto a = analyze_text(testsupport::example());
  CHECK(contains(field_level(a),
                 "@Perm(requires=\"unique(array1) in alive * unique(array2) in alive\",\n"
                 "       ensures=\"none(array1) in alive * none(array2) in alive\")\n"
                 " public void tidyupColls"));
}

TEST_CASE("field level: constructors ensure only, helpers stay bare, classes end") {
  auto a = analyze_text(testsupport::example());
  const std::string out = field_level(a);
  CHECK(contains(out, " @Perm(ensures=\"unique(array1) in alive\")\n ArrayCollection(){"));
  CHECK(contains(out, "}\n public void createColl(Integer[] coll) {"));
  std::size_t ends = 0;
  for (auto p = out.find(kEndOfClass); p != std::string::npos; p = out.find(kEndOfClass, p + 1)) ++ends;
  CHECK(ends == 3);
}

TEST_CASE("field level: stripping restores the source on every fixture") {
  for (const auto& path : testsupport::all_fixtures()) {
    const std::string src = testsupport::read_text(path);
    auto a = analyze_text(src, path.string());
    CHECK(strip_annotations(field_level(a)) == src);
  }
}

TEST_CASE("field clauses follow field order then parameters") {
  auto a = analyze_text(testsupport::example());
  const auto fc = field_clauses(*a.contract("ObjectClass.manipulateObjects/2"));
  CHECK(fc.pre == std::vector<std::string>{"full(x) in alive", "full(y) in alive", "immutable(z) in alive",
                                           "full(w) in alive"});
  CHECK(fc.pre == fc.post);
}

TEST_CASE("object level: tidyupColls and manipulateObjects") {
  auto a = analyze_text(testsupport::example());
  const std::string out = object_level(a);
  CHECK(contains(out,
                 "@Perm(requires=\"unique(this) in alive * unique(#0) in alive\",\n"
                 "ensures=\"unique(this) in alive * unique(#0) in alive\")\n"
                 "public void tidyupColls(Integer[] coll) { }"));
  CHECK(contains(out,
                 "@Perm(requires=\"full(this) in alive * full(#0) in alive * pure(#1) in alive\",\n"
                 "ensures=\"full(this) in alive * full(#0) in alive * pure(#1) in alive\")"));
}

TEST_CASE("object level: header, default constructors and class ends") {
  auto a = analyze_text(testsupport::example());
  const std::string out = object_level(a);
  CHECK(out.rfind("import edu.cmu.cs.plural.annot.*;\n@States({@State(name = \"alive\")})\nclass ArrayCollection{\n", 0) ==
        0);
  CHECK(contains(out, "@Perm(ensures=\"unique(this) in alive\")\nArrayCollection() {   }\n"));
  CHECK(contains(out, "@Perm(ensures=\"unique(this) in alive\")\nObjectClass() {   }\n"));
  CHECK(contains(out, "}\nENDOFCLASS\n@States({@State(name = \"alive\")})\nclass ObjectClass{"));
}

TEST_CASE("object level: a class without constructors gets a default one") {
  auto a = analyze_text("class V { Integer[] d; void f(){ d[0] = 1; } }");
  CHECK(contains(object_level(a), "@Perm(ensures=\"unique(this) in alive\")\nV() {   }"));
}

TEST_CASE("object level: requires equals ensures everywhere") {
  static const std::regex perm(R"re(@Perm\(requires="([^"]*)",\n\s*ensures="([^"]*)"\))re");
  for (const auto& path : testsupport::all_fixtures()) {
    auto a = analyze_text(testsupport::read_text(path), path.string());
    const std::string out = object_level(a);
    std::size_t seen = 0;
    for (auto it = std::sregex_iterator(out.begin(), out.end(), perm); it != std::sregex_iterator(); ++it) {
      CHECK((*it)[1] == (*it)[2]);
      ++seen;
    }
    std::size_t annotated = 0;
    for (const auto& c : a.contracts) {
      if (c.is_constructor) continue;
      if (!object_clauses(c, false).clauses.empty()) ++annotated;
    }
    CHECK(seen <= annotated);
  }
}

TEST_CASE("object level: immutable parameters render as pure") {
  MethodContract c;
  c.method = "K.m/1";
  c.class_name = "K";
  c.name = "m";
  ContractEntry e;
  e.object = RefId::field("K", "f");
  e.pre = e.post = Permission::Immutable;
  e.via_this = true;
  e.via_params = {0};
  c.entries.push_back(e);
  CHECK(object_clauses(c, false).clauses == std::vector<std::string>{"pure(this) in alive", "pure(#0) in alive"});
  CHECK(object_clauses(c, true).clauses == std::vector<std::string>{"pure(#0) in alive"});
}

TEST_CASE("object level: overloads are dropped with a diagnostic") {
  auto a = analyze_text("class O { Integer[] f; O(){ f = new Integer[1]; } void g(){ f[0] = 1; } void g(int k){ f[0] = k; } }");
  auto ol = emit_object_level(a.program->units[0], a.index());
  CHECK(!contains(ol.text, "void g("));
  CHECK(ol.diagnostics.size() == 2);
  CHECK(ol.diagnostics[0].code == "overload");
}

TEST_CASE("metrics: the example program") {
  auto a = analyze_text(testsupport::example());
  CHECK(a.metrics.contracts == 11);
  CHECK(a.metrics.classes == 3);
  CHECK(a.metrics.loc_p == 15);
}

TEST_CASE("metrics: an empty class") {
  auto a = analyze_text("class Lone { }");
  CHECK(a.metrics.loc_p == 2);
  CHECK(a.metrics.anns_p == 1);
  CHECK(a.metrics.anns_f == 0);
}

TEST_CASE("metrics: two classes with one contracted method each") {
  auto a = analyze_text("class A { Integer[] a; void fa(){ a[0] = 1; } }\nclass B { Integer[] b; void fb(){ b[0] = 2; } }");
  // N = 2, C = 2, M_C = 0, M_NC^F = 2, P = 0, M_NC^R = 0, F = 1 + 1
  CHECK(a.metrics.loc_p == 2 + 2 + 1);
  CHECK(a.metrics.anns_p == 0 + 4 * 2 + 0 + 0 + 2);
  CHECK(a.metrics.anns_f == 2 * (1 + 1) + 0);
  std::size_t sum = 0;
  for (const auto& t : a.metrics.anns_p_terms) sum += t.value;
  CHECK(sum == a.metrics.anns_p);
}

TEST_CASE("metrics: closed form against a direct count of clause tokens") {
  for (const auto& path : testsupport::all_fixtures()) {
    auto a = analyze_text(testsupport::read_text(path), path.string());
    std::size_t ctor_fields = 0;
    for (const auto& c : a.contracts) {
      if (c.is_constructor) ctor_fields += c.entries.size();
    }
    const std::size_t direct = count_clause_tokens(field_level(a));
    CAPTURE(path.string());
    CHECK(direct == a.metrics.anns_f - ctor_fields - a.metrics.m_nc_r);
  }
}

TEST_CASE("report: json validates against the published schema") {
  const MiniValidator v(load_schema());
  for (const auto& path : testsupport::all_fixtures()) {
    auto a = analyze_text(testsupport::read_text(path), path.string());
    const json doc = json::parse(report_json(a, true).dump());
    const auto errs = v.validate(doc);
    CHECK_MESSAGE(errs.empty(), path.string() << ": " << (errs.empty() ? "" : errs.front()));
  }
}

TEST_CASE("report: the validator rejects broken documents") {
  const MiniValidator v(load_schema());
  auto a = analyze_text(testsupport::example());
  json doc = json::parse(report_json(a).dump());
  doc["contracts"][0]["entries"][0]["pre"] = "exclusive";
  CHECK(!v.validate(doc).empty());
  doc = json::parse(report_json(a).dump());
  doc.erase("metrics");
  CHECK(!v.validate(doc).empty());
}

TEST_CASE("report: empty program") {
  auto a = analyze_sources({});
  const json doc = json::parse(report_json(a).dump());
  CHECK(MiniValidator(load_schema()).validate(doc).empty());
  CHECK(doc["contracts"].empty());
  CHECK(doc["metrics"]["loc_p"] == 1);
  CHECK(!report_markdown(a).empty());
}

TEST_CASE("report: markdown summary lines") {
  auto a = analyze_text(testsupport::example());
  const std::string md = report_markdown(a);
  CHECK(contains(md, "4/7 methods concurrent (57%)"));
  CHECK(contains(md, "10/28 method pairs concurrent (36%)"));
  CHECK(contains(md, "2*M_NC^R"));
}

TEST_CASE("report: identical inputs give identical outputs") {
  auto a = analyze_text(testsupport::example());
  auto b = analyze_text(testsupport::example());
  CHECK(report_json(a).dump() == report_json(b).dump());
  CHECK(report_markdown(a) == report_markdown(b));
  CHECK(field_level(a) == field_level(b));
  CHECK(object_level(a) == object_level(b));
  CHECK(!report_json(a).at("metrics").contains("time_ms"));
}
