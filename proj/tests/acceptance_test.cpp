// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fail.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include "permlens/algebra/algebra.hpp"
#include "permlens/emit/report.hpp"
#include "permlens/infer/infer.hpp"
#include "permlens/pipeline.hpp"
#include "support.hpp"

using namespace permlens;
using P = Permission;
using Clock = std::chrono::steady_clock;

namespace {

using ClauseSet = std::set<std::string>;

struct Golden {
  ClauseSet pre, post;
};

// Expected field-level contracts of the example program, clause sets as kind(object).
const std::map<std::string, Golden> kGolden = {
    {"ArrayCollection.ArrayCollection/0", {{}, {"unique(array1)"}}},
    {"ArrayCollection.printColl/1", {{"pure(array1)"}, {"pure(array1)"}}},
    {"ArrayCollection.incrColl/1", {{"share(array1)", "share(array2)"}, {"share(array1)", "share(array2)"}}},
    {"ArrayCollection.isSorted/1", {{"pure(array1)"}, {"pure(array1)"}}},
    {"ArrayCollection.findMax/1", {{"pure(array1)"}, {"pure(array1)"}}},
    {"ArrayCollection.computeStat/1", {{"pure(array1)"}, {"pure(array1)"}}},
    {"ArrayCollection.tidyupColls/1", {{"unique(array1)", "unique(array2)"}, {"none(array1)", "none(array2)"}}},
    {"ObjectClass.ObjectClass/0",
     {{}, {"unique(array2)", "unique(x)", "unique(y)", "unique(z)", "unique(w)"}}},
    {"ObjectClass.manipulateObjects/2",
     {{"full(x)", "full(y)", "full(w)", "immutable(z)"}, {"full(x)", "full(y)", "full(w)", "immutable(z)"}}},
    {"Client.Client/0", {{}, {"unique(data)"}}},
    {"Client.main/1", {{"none(obj1)", "none(obj2)"}, {"unique(obj1)", "unique(obj2)"}}},
};

const char* const kPulseExpected =
    "import edu.cmu.cs.plural.annot.*;\n"
    "@States({@State(name = \"alive\")})\n"
    "class ArrayCollection{\n"
    "@Perm(ensures=\"unique(this) in alive\")\n"
    "ArrayCollection() {   }\n"
    "@Perm(requires=\"unique(this) in alive * unique(#0) in alive\",\n"
    "ensures=\"unique(this) in alive * unique(#0) in alive\")\n"
    "public void tidyupColls(Integer[] coll) { } \n"
    "}\n"
    "ENDOFCLASS\n"
    "@States({@State(name = \"alive\")})\n"
    "class ObjectClass{\n"
    "@Perm(ensures=\"unique(this) in alive\")\n"
    "ObjectClass() {   }\n"
    "@Perm(requires=\"full(this) in alive * full(#0) in alive * pure(#1) in alive\",\n"
    "    ensures=\"full(this) in alive * full(#0) in alive * pure(#1) in alive\")\n"
    "void manipulateObjects(Client p1, Client p2) { }\n"
    "}\n"
    "ENDOFCLASS\n";

int failures = 0;

void report(int n, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << "\n";
  if (!ok) ++failures;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

ClauseSet clause_set(const std::vector<std::string>& clauses) {
  ClauseSet out;
  for (const auto& c : clauses) out.insert(c.substr(0, c.find(" in alive")));
  return out;
}

std::string show(const ClauseSet& s) {
  std::string out = "{";
  for (const auto& c : s) out += (out.size() > 1 ? ", " : "") + c;
  return out + "}";
}

void criterion1() {
  const auto t0 = Clock::now();
  auto a = analyze_text(testsupport::example(), "example.java");
  const double ms = ms_since(t0);
  bool ok = true;
  std::size_t annotated = 0;
  for (const auto& c : a.contracts) {
    if (!c.empty()) ++annotated;
  }
  for (const auto& [id, want] : kGolden) {
    const auto* c = a.contract(id);
    if (!c) {
      std::cout << "  missing contract " << id << "\n";
      ok = false;
      continue;
    }
    const auto fc = emit::field_clauses(*c);
    const ClauseSet pre = clause_set(fc.pre), post = clause_set(fc.post);
    if (pre != want.pre || post != want.post) {
      std::cout << "  " << id << ": got " << show(pre) << " -> " << show(post) << "\n";
      ok = false;
    }
  }
  ok = ok && annotated == kGolden.size() && ms < 1000.0;
  report(1, ok,
         "golden contracts for " + std::to_string(annotated) + " annotated methods in " + std::to_string(ms) + " ms");
}

void criterion2() {
  auto a = analyze_text(testsupport::example());
  const auto* m = a.matrix("ArrayCollection");
  const bool ok = m && m->concur_m.num == 4 && m->concur_m.den == 7 && m->concur_m.percent() == 57 &&
                  m->concur_mp.num == 10 && m->concur_mp.den == 28 && m->concur_mp.percent() == 36 && m->symmetric();
  std::ostringstream s;
  if (m) {
    s << "ArrayCollection Concur(M) " << m->concur_m.num << "/" << m->concur_m.den << " (" << m->concur_m.percent()
      << "%), Concur(MP) " << m->concur_mp.num << "/" << m->concur_mp.den << " (" << m->concur_mp.percent() << "%)";
  }
  report(2, ok, s.str());
}

void criterion3() {
  auto a = analyze_text(testsupport::example());
  bool ok = a.satisfiability.satisfiable() == 12 && a.satisfiability.unsatisfiable() == 0;
  auto m = analyze_text(testsupport::example_no_ctor());
  std::size_t consumers = 0, np2 = 0;
  for (const char* name : {"printColl", "incrColl", "isSorted", "findMax", "computeStat", "tidyupColls"}) {
    const std::string id = std::string("ArrayCollection.") + name + "/1";
    const auto* v = m.satisfiability.find(id);
    if (v && v->status == analyze::Status::Unsatisfiable) ++consumers;
    for (const auto& w : m.null_warnings) {
      if (w.code == analyze::NullCode::NP2 && w.method == id) {
        ++np2;
        break;
      }
    }
  }
  ok = ok && consumers == 6 && np2 == 6;
  report(3, ok,
         std::to_string(a.satisfiability.satisfiable()) + " satisfiable / " +
             std::to_string(a.satisfiability.unsatisfiable()) + " unsatisfiable; mutant: " +
             std::to_string(consumers) + "/6 consumers unsatisfiable, " + std::to_string(np2) + "/6 with NP2");
}

void criterion4() {
  auto a = analyze_text(testsupport::example());
  const auto& mt = a.metrics;
  auto terms = [](const std::vector<emit::Term>& ts) {
    std::string out;
    for (const auto& t : ts) out += (out.empty() ? "" : " + ") + t.name + "=" + std::to_string(t.value);
    return out;
  };
  std::cout << "  LOC_P = " << mt.loc_p << " (N=" << mt.contracts << ", C=" << mt.classes << ")\n";
  std::cout << "  Anns_P = " << mt.anns_p << " = " << terms(mt.anns_p_terms) << " (target 78)\n";
  std::cout << "  Anns_F = " << mt.anns_f << " = " << terms(mt.anns_f_terms) << " (target 49)\n";
  const bool ok = mt.loc_p == 15 && mt.anns_p == 78 && mt.anns_f == 49;
  report(4, ok,
         "LOC_P " + std::to_string(mt.loc_p) + "/15, Anns_P " + std::to_string(mt.anns_p) + "/78, Anns_F " +
             std::to_string(mt.anns_f) + "/49");
}

// Co-existence rows; None coexists with everything.
bool coexists_table(P p, P q) {
  static const std::map<P, std::set<P>> rows = {
      {P::Unique, {}},
      {P::Full, {P::Pure}},
      {P::Share, {P::Share, P::Pure}},
      {P::Pure, {P::Full, P::Pure, P::Immutable}},
      {P::Immutable, {P::Immutable, P::Pure}},
  };
  if (p == P::None || q == P::None) return true;
  return rows.at(p).count(q) > 0 || rows.at(q).count(p) > 0;
}

bool brute_supplies(P post, P req, int depth = 5) {
  if (post == req) return true;
  if (depth == 0) return false;
  for (const auto& r : algebra::split_rules()) {
    if (r.whole != post) continue;
    if (brute_supplies(r.left, req, depth - 1) || brute_supplies(r.right, req, depth - 1)) return true;
  }
  return false;
}

void criterion5() {
  constexpr int kCases = 10000;
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, kAllPermissions.size() - 1);
  bool table = true, symmetric = true, round_trip = true, supplies_ok = true;
  for (P p : kAllPermissions) {
    for (P q : kAllPermissions) {
      table = table && algebra::coexists(p, q) == coexists_table(p, q);
      supplies_ok = supplies_ok && algebra::supplies(p, q) == brute_supplies(p, q);
    }
  }
  int splits = 0;
  for (int i = 0; i < kCases; ++i) {
    const P p = kAllPermissions[pick(rng)], q = kAllPermissions[pick(rng)];
    symmetric = symmetric && algebra::coexists(p, q) == algebra::coexists(q, p);
    supplies_ok = supplies_ok && algebra::supplies(p, q) == brute_supplies(p, q);
    if (p == P::Pure || p == P::None) continue;
    const std::int64_t den = std::uniform_int_distribution<std::int64_t>(1, 1 << 20)(rng);
    const algebra::FracPermission whole{p, algebra::Fraction(std::uniform_int_distribution<std::int64_t>(1, den)(rng), den)};
    for (const auto& [l, r] : algebra::split(whole)) {
      const auto j = algebra::join(l, r);
      round_trip = round_trip && l.k + r.k == whole.k && j && j->k == whole.k &&
                   algebra::join_all(l.kind, r.kind).count(p) == 1;
      ++splits;
    }
  }
  report(5, table && symmetric && round_trip && supplies_ok,
         std::string("coexists table 36/36 ") + (table ? "ok" : "mismatch") + ", symmetry " +
             (symmetric ? "ok" : "broken") + ", " + std::to_string(splits) + " split/join round trips " +
             (round_trip ? "ok" : "broken") + ", supplies vs brute force " + (supplies_ok ? "ok" : "mismatch"));
}

void criterion6() {
  bool ok = true;
  int combos = 0;
  for (int bits = 0; bits < 16; ++bits) {
    infer::EdgePattern pat{(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0, (bits & 8) != 0};
    infer::EdgePattern norm = pat;
    norm.this_read = norm.this_read || norm.this_write;
    norm.context_read = norm.context_read || norm.context_write;
    const auto rules = infer::matching_rules(norm);
    ok = ok && rules.size() == 1 && infer::permission_of(rules[0]) == infer::infer_from_pattern(pat);
    ++combos;
  }
  ok = ok && infer::infer_from_pattern({}) == P::None;
  report(6, ok, std::to_string(combos) + " edge combinations plus the no-edge case map to exactly one rule");
}

std::vector<std::string> normalized_lines(const std::string& text) {
  static const std::regex modifiers(R"(^((public|private|protected|static|final)\s+)+)");
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    const auto b = line.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    line = line.substr(b, line.find_last_not_of(" \t") - b + 1);
    if (line.rfind("@", 0) != 0 && line.rfind("ensures=", 0) != 0) line = std::regex_replace(line, modifiers, "");
    out.push_back(line);
  }
  return out;
}

void criterion7() {
  auto a = analyze_text(testsupport::example(), "example.java");
  const std::string got_text = emit::emit_object_level(a.program->units[0], a.index()).text;
  const auto got = normalized_lines(got_text);
  const auto want = normalized_lines(kPulseExpected);
  // Contiguous blocks of the expected text, found in order.
  const std::vector<std::pair<std::size_t, std::size_t>> blocks = {{0, 5}, {5, 8}, {8, 14}, {14, 17}, {17, 19}};
  bool ok = true;
  std::size_t from = 0;
  for (const auto& [b, e] : blocks) {
    auto it = std::search(got.begin() + static_cast<std::ptrdiff_t>(from), got.end(), want.begin() + b, want.begin() + e);
    if (it == got.end()) {
      std::cout << "  block not found: " << want[b] << "\n";
      ok = false;
      break;
    }
    from = static_cast<std::size_t>(it - got.begin()) + (e - b);
  }
  report(7, ok && want.size() == 19, "object-level translation of tidyupColls, manipulateObjects and constructors");
}

std::string run_corpus(const std::vector<SourceFile>& files) {
  auto a = analyze_sources(files);
  std::string out = emit::report_json(a).dump() + emit::report_markdown(a);
  for (const auto& u : a.program->units) {
    out += emit::emit_field_level(u, a.index());
    out += emit::emit_object_level(u, a.index()).text;
  }
  return out;
}

void criterion8() {
  std::vector<SourceFile> files;
  for (const auto& p : testsupport::corpus_files()) files.push_back({p.string(), testsupport::read_text(p)});
  const auto t0 = Clock::now();
  const std::string first = run_corpus(files);
  const double ms = ms_since(t0);
  const std::string second = run_corpus(files);
  report(8, files.size() == 20 && ms < 5000.0 && first == second,
         std::to_string(files.size()) + " corpus files in " + std::to_string(ms) + " ms, second run " +
             (first == second ? "identical" : "differs"));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7, criterion8};
  for (const auto& c : criteria) c();
  return failures == 0 ? 0 : 1;
}
