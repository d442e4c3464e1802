#include "permlens/analyze/analyze.hpp"

#include <map>

#include "permlens/algebra/algebra.hpp"

namespace permlens::analyze {

std::string_view to_string(Status s) {
  return s == Status::Satisfiable ? "satisfiable" : "unsatisfiable";
}

std::string_view to_string(NullCode c) { return c == NullCode::NP1 ? "NP1" : "NP2"; }

std::size_t SatisfiabilityResult::satisfiable() const {
  std::size_t n = 0;
  for (const auto& v : verdicts) n += v.status == Status::Satisfiable;
  return n;
}

std::size_t SatisfiabilityResult::unsatisfiable() const { return verdicts.size() - satisfiable(); }

const SatisfiabilityVerdict* SatisfiabilityResult::find(const std::string& method) const {
  for (const auto& v : verdicts) {
    if (v.method == method) return &v;
  }
  return nullptr;
}

namespace {

bool met_by(const MethodContract& consumer, const ContractEntry& need,
            const std::vector<const MethodContract*>& pool, const std::vector<bool>& ok) {
  if (need.pre == Permission::None) return true;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (!ok[i] || pool[i]->method == consumer.method) continue;
    if (const auto* e = pool[i]->find(need.object); e && algebra::supplies(e->post, need.pre)) {
      return true;
    }
  }
  return false;
}

}  // namespace

SatisfiabilityResult check_satisfiability(const std::vector<MethodContract>& contracts,
                                          const std::set<std::string>& overloaded) {
  SatisfiabilityResult out;
  std::vector<const MethodContract*> pool;
  for (const auto& c : contracts) {
    if (overloaded.count(c.method)) {
      out.excluded.push_back(c.method);
    } else {
      pool.push_back(&c);
    }
  }
  std::vector<bool> ok(pool.size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (ok[i]) continue;
      bool all = true;
      for (const auto& e : pool[i]->entries) all = all && met_by(*pool[i], e, pool, ok);
      if (all) ok[i] = changed = true;
    }
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    SatisfiabilityVerdict v;
    v.method = pool[i]->method;
    for (const auto& e : pool[i]->entries) {
      if (!met_by(*pool[i], e, pool, ok)) v.unmet.push_back({e.object, e.pre});
    }
    v.status = v.unmet.empty() ? Status::Satisfiable : Status::Unsatisfiable;
    out.verdicts.push_back(std::move(v));
  }
  return out;
}

std::vector<NullWarning> null_diagnostics(const std::vector<MethodContract>& contracts,
                                          const SatisfiabilityResult& sat,
                                          const std::function<bool(const RefId&)>& nullable) {
  std::vector<NullWarning> out;
  auto skip = [&](const RefId& r) { return nullable && !nullable(r); };
  for (const auto& v : sat.verdicts) {
    for (const auto& need : v.unmet) {
      if (skip(need.object)) continue;
      std::size_t producers = 0;
      bool all_none = true;
      for (const auto& c : contracts) {
        if (c.method == v.method) continue;
        const auto* pv = sat.find(c.method);
        const auto* e = c.find(need.object);
        if (!pv || pv->status != Status::Satisfiable || !e) continue;
        ++producers;
        all_none = all_none && e->post == Permission::None;
      }
      if (producers > 0 && all_none) {
        out.push_back({NullCode::NP1, v.method, need.object,
                       "every producer of " + need.object.name +
                           " leaves it null; it must be instantiated again before use"});
      }
    }
  }
  for (const auto& c : contracts) {
    for (const auto& e : c.entries) {
      if (e.pre == Permission::None || skip(e.object)) continue;
      bool produced = false;
      for (const auto& p : contracts) {
        const auto* pe = p.find(e.object);
        produced = produced || (pe && pe->post == Permission::Unique);
      }
      if (!produced) {
        out.push_back({NullCode::NP2, c.method, e.object,
                       "no method creates " + e.object.name + ", which may still be null here"});
      }
    }
  }
  return out;
}

namespace {

bool shares_object(const MethodContract& a, const MethodContract& b) {
  for (const auto& e : a.entries) {
    if (b.find(e.object)) return true;
  }
  return false;
}

bool harmless(Permission p) { return p == Permission::None || is_read_only(p); }

}  // namespace

bool self_parallel(const MethodContract& m) {
  if (m.is_constructor) return false;
  for (const auto& e : m.entries) {
    if (!harmless(e.pre)) return false;
  }
  return true;
}

bool pair_parallel(const MethodContract& a, const MethodContract& b) {
  if (a.method == b.method) return self_parallel(a);
  if ((a.is_constructor || b.is_constructor) && shares_object(a, b)) return false;
  for (const auto& ea : a.entries) {
    const auto* eb = b.find(ea.object);
    if (!eb) continue;
    if (ea.pre == Permission::None || eb->pre == Permission::None) continue;
    if (is_read_only(ea.pre) && is_read_only(eb->pre)) continue;
    return false;
  }
  return true;
}

int Ratio::percent() const {
  if (den == 0) return 0;
  return static_cast<int>((200 * num + den) / (2 * den));
}

bool ConcurrencyMatrix::symmetric() const {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (cells[i][j] != cells[j][i]) return false;
    }
  }
  return true;
}

ConcurrencyMatrix class_matrix(const std::string& class_name,
                               const std::vector<const MethodContract*>& contracts) {
  ConcurrencyMatrix m;
  m.class_name = class_name;
  std::vector<const MethodContract*> live;
  for (const auto* c : contracts) {
    if (c && !c->empty()) live.push_back(c);
  }
  const std::size_t n = live.size();
  for (const auto* c : live) {
    m.methods.push_back(c->method);
    m.names.push_back(c->name);
  }
  m.cells.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const bool par = pair_parallel(*live[i], *live[j]);
      m.cells[i][j] = m.cells[j][i] = par;
      m.concur_mp.num += par;
    }
  }
  m.concur_mp.den = n * (n + 1) / 2;  // C(n,2) + n
  m.concur_m.den = n;
  for (std::size_t i = 0; i < n; ++i) {
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) any = any || m.cells[i][j];
    m.concur_m.num += any;
  }
  return m;
}

}  // namespace permlens::analyze
