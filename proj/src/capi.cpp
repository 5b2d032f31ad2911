#include "poma/poma.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <map>
#include <new>
#include <string>

#include "json.hpp"
#include "poma/batteries.hpp"
#include "poma/completeness.hpp"
#include "poma/congruence.hpp"
#include "poma/constructions.hpp"
#include "poma/corpus.hpp"
#include "poma/enumerate.hpp"
#include "poma/errors.hpp"
#include "poma/free.hpp"
#include "poma/io.hpp"
#include "poma/syntax.hpp"
#include "poma/varieties.hpp"

struct poma_algebra {
  poma::FiniteAlgebra a;
};

struct poma_variety {
  poma::VarietyHandle v;
};

namespace {

using json = nlohmann::ordered_json;

thread_local std::string last_error;

poma_status guard(const std::function<void()>& body) {
  try {
    last_error.clear();
    body();
    return POMA_OK;
  } catch (const poma::ParseError& e) {
    last_error = e.what();
    return POMA_ERR_PARSE;
  } catch (const poma::StructuralError& e) {
    last_error = e.what();
    return POMA_ERR_STRUCTURE;
  } catch (const poma::InvalidAlgebra& e) {
    last_error = e.what();
    return POMA_ERR_INVALID_ALGEBRA;
  } catch (const poma::PreconditionError& e) {
    last_error = e.what();
    return POMA_ERR_PRECONDITION;
  } catch (const poma::BudgetExceeded& e) {
    last_error = e.what();
    return POMA_ERR_BUDGET;
  } catch (const poma::NotFound& e) {
    last_error = e.what();
    return POMA_ERR_NOT_FOUND;
  } catch (const poma::InternalError& e) {
    last_error = e.what();
    return POMA_ERR_INTERNAL;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return POMA_ERR_ARGUMENT;
  } catch (const json::exception& e) {
    last_error = e.what();
    return POMA_ERR_STRUCTURE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return POMA_ERR_BUDGET;
  } catch (const std::exception& e) {
    last_error = e.what();
    return POMA_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) throw std::invalid_argument(std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  need(out, "output");
  *out = dup(s);
}

void put(char** out, const json& j) { put(out, j.dump()); }

json algebra_json(const poma::FiniteAlgebra& a) { return json::parse(poma::to_json(a)); }

// Unnamed results get the corpus name of an isomorphic algebra when there is one.
json algebra_list(const std::vector<poma::FiniteAlgebra>& list) {
  json arr = json::array();
  for (const auto& a : list) {
    if (!a.name().empty()) {
      arr.push_back(algebra_json(a));
      continue;
    }
    arr.push_back(algebra_json(a.with_name(poma::corpus_identify(a))));
  }
  return arr;
}

json partition_json(const poma::Partition& p) { return p.labels(); }

std::vector<poma::FiniteAlgebra> gather(const poma_algebra* const* gens, size_t n) {
  if (n > 0) need(gens, "generators");
  std::vector<poma::FiniteAlgebra> out;
  for (size_t i = 0; i < n; ++i) {
    need(gens[i], "generator");
    out.push_back(gens[i]->a);
  }
  return out;
}

std::vector<poma::Pair> pairs_of(const poma::FiniteAlgebra& a, const uint32_t* pairs, size_t n) {
  if (n > 0) need(pairs, "pairs");
  std::vector<poma::Pair> out;
  for (size_t i = 0; i < n; ++i) {
    const uint32_t x = pairs[2 * i], y = pairs[2 * i + 1];
    if (x >= a.size() || y >= a.size()) throw poma::StructuralError("pair element out of range");
    out.emplace_back(x, y);
  }
  return out;
}

json battery_json(const poma::BatteryReport& r) {
  return json{{"name", r.name},       {"bound", r.bound},          {"passed", r.passed},
              {"checked", r.checked}, {"witnesses", r.witnesses}, {"detail", r.detail}};
}

json verdict_json(const poma::Verdict& v) {
  json j{{"status", poma::status_name(v.status)}, {"bound", v.bound}, {"route", v.route}, {"witness", nullptr}};
  if (v.witness) {
    json asg = json::object();
    for (const auto& [k, x] : v.witness->assignment) asg[k] = x;
    j["witness"] = json{{"algebra", v.witness->algebra},
                        {"formula", v.witness->formula},
                        {"assignment", asg},
                        {"note", v.witness->note}};
  }
  return j;
}

json assignment_json(const poma::Assignment& a) {
  json j = json::object();
  for (const auto& [k, x] : a) j[k] = x;
  return j;
}

std::string hex_id(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json variety_json(const poma::VarietyHandle& v) {
  json gens = json::array(), si = json::array();
  for (const auto& g : v.generators) gens.push_back(g.name());
  for (const auto& s : v.si_closure) si.push_back(s.name());
  return json{{"label", v.label}, {"generators", gens}, {"si", si}, {"hash", hex_id(poma::variety_hash(v))}};
}

json covers_json(const std::vector<poma::VarietyHandle>& hs, const std::vector<poma::Edge>& edges) {
  json nodes = json::array(), es = json::array();
  for (const auto& h : hs) nodes.push_back(h.label);
  for (auto [lo, hi] : edges) es.push_back(json::array({lo, hi}));
  return json{{"nodes", nodes}, {"edges", es}};
}

std::vector<poma::VarietyHandle> handles(const poma_variety* const* vs, size_t n) {
  if (n > 0) need(vs, "varieties");
  std::vector<poma::VarietyHandle> out;
  for (size_t i = 0; i < n; ++i) {
    need(vs[i], "variety");
    out.push_back(vs[i]->v);
  }
  return out;
}

}  // namespace

extern "C" {

const char* poma_version(void) { return "0.1.0"; }
const char* poma_last_error(void) { return last_error.c_str(); }

const char* poma_status_name(poma_status s) {
  switch (s) {
    case POMA_OK: return "ok";
    case POMA_ERR_ARGUMENT: return "argument";
    case POMA_ERR_PARSE: return "parse";
    case POMA_ERR_STRUCTURE: return "structure";
    case POMA_ERR_INVALID_ALGEBRA: return "invalid algebra";
    case POMA_ERR_PRECONDITION: return "precondition";
    case POMA_ERR_BUDGET: return "budget";
    case POMA_ERR_NOT_FOUND: return "not found";
    case POMA_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void poma_string_free(char* s) { std::free(s); }

poma_status poma_algebra_corpus(const char* spec, poma_algebra** out) {
  return guard([&] {
    need(spec, "spec");
    need(out, "output");
    *out = new poma_algebra{poma::corpus_lookup(spec)};
  });
}

poma_status poma_algebra_from_json(const char* text, poma_algebra** out) {
  return guard([&] {
    need(text, "json");
    need(out, "output");
    *out = new poma_algebra{poma::algebra_from_json(text)};
  });
}

poma_status poma_algebra_clone(const poma_algebra* a, poma_algebra** out) {
  return guard([&] {
    need(a, "algebra");
    need(out, "output");
    *out = new poma_algebra{a->a};
  });
}

void poma_algebra_free(poma_algebra* a) { delete a; }

size_t poma_algebra_size(const poma_algebra* a) { return a == nullptr ? 0 : a->a.size(); }

poma_status poma_algebra_name(const poma_algebra* a, char** out) {
  return guard([&] {
    need(a, "algebra");
    put(out, a->a.name());
  });
}

poma_status poma_algebra_to_json(const poma_algebra* a, char** out) {
  return guard([&] {
    need(a, "algebra");
    put(out, poma::to_json(a->a));
  });
}

poma_status poma_algebra_dot(const poma_algebra* a, int with_operators, char** out) {
  return guard([&] {
    need(a, "algebra");
    put(out, poma::hasse_dot(a->a, with_operators != 0));
  });
}

poma_status poma_algebra_canonical_hash(const poma_algebra* a, uint64_t* out) {
  return guard([&] {
    need(a, "algebra");
    need(out, "output");
    *out = poma::canonical_form(a->a).hash();
  });
}

poma_status poma_algebra_is_iso(const poma_algebra* a, const poma_algebra* b, int* out) {
  return guard([&] {
    need(a, "algebra");
    need(b, "algebra");
    need(out, "output");
    *out = poma::is_iso(a->a, b->a) ? 1 : 0;
  });
}

poma_status poma_corpus_names(char** out) {
  return guard([&] { put(out, json{{"names", poma::corpus_names()}}); });
}

poma_status poma_validate_json(const char* text, char** report) {
  return guard([&] {
    need(text, "json");
    put(report, poma::to_json(poma::validate(poma::algebra_data_from_json(text))));
  });
}

poma_status poma_predicate(const poma_algebra* a, const char* name, int* out) {
  return guard([&] {
    need(a, "algebra");
    need(name, "name");
    need(out, "output");
    const std::string n = name;
    const auto& x = a->a;
    bool v;
    if (n == "pma") v = poma::is_pma(x);
    else if (n == "pk4") v = poma::is_pk4(x);
    else if (n == "ps4") v = poma::is_ps4(x);
    else if (n == "si") v = poma::is_si(x);
    else if (n == "fsi") v = poma::is_fsi(x);
    else if (n == "simple") v = poma::is_simple(x);
    else if (n == "wc") v = poma::is_well_connected(x);
    else if (n == "simple45") v = poma::is_simple_lemma45(x);
    else if (n == "cep") v = poma::has_cep(x).holds;
    else if (n == "trivial") v = poma::is_trivial(x);
    else throw std::invalid_argument("unknown predicate " + n);
    *out = v ? 1 : 0;
  });
}

poma_status poma_eval(const poma_algebra* a, const char* term, const char* assignment_json, uint32_t* out) {
  return guard([&] {
    need(a, "algebra");
    need(term, "term");
    need(out, "output");
    poma::Assignment asg;
    if (assignment_json != nullptr && *assignment_json != '\0') {
      const json j = json::parse(assignment_json);
      if (!j.is_object()) throw poma::StructuralError("assignment must be a JSON object");
      for (const auto& [k, v] : j.items()) {
        if (!v.is_number_unsigned()) throw poma::StructuralError("assignment values must be element indices");
        asg[k] = v.get<poma::Element>();
      }
    }
    *out = poma::eval(a->a, poma::parse_term(term), asg);
  });
}

poma_status poma_holds(const poma_algebra* a, const char* formula, char** report) {
  return guard([&] {
    need(a, "algebra");
    need(formula, "formula");
    const auto q = poma::parse_quasi(formula);
    const auto h = poma::holds_quasi(a->a, q);
    put(report, json{{"holds", h.holds}, {"witness", h.witness ? assignment_json(*h.witness) : json(nullptr)}});
  });
}

poma_status poma_translate_tau(const char* sequent, char** equation) {
  return guard([&] {
    need(sequent, "sequent");
    put(equation, poma::to_string(poma::tau(poma::parse_sequent(sequent))));
  });
}

poma_status poma_translate_rho(const char* equation, char** report) {
  return guard([&] {
    need(equation, "equation");
    const auto [s1, s2] = poma::rho(poma::parse_equation(equation));
    put(report, json{{"first", poma::to_string(s1)}, {"second", poma::to_string(s2)}});
  });
}

poma_status poma_cg(const poma_algebra* a, const uint32_t* pairs, size_t npairs, char** partition) {
  return guard([&] {
    need(a, "algebra");
    put(partition, partition_json(poma::cg(a->a, pairs_of(a->a, pairs, npairs))));
  });
}

poma_status poma_con_lattice(const poma_algebra* a, char** report) {
  return guard([&] {
    need(a, "algebra");
    const auto cons = poma::con_lattice(a->a);
    json arr = json::array();
    for (const auto& c : cons) arr.push_back(partition_json(c));
    put(report, json{{"count", cons.size()}, {"congruences", arr}});
  });
}

poma_status poma_monolith(const poma_algebra* a, char** partition) {
  return guard([&] {
    need(a, "algebra");
    put(partition, partition_json(poma::monolith(a->a)));
  });
}

poma_status poma_hs_si(const poma_algebra* a, char** report) {
  return guard([&] {
    need(a, "algebra");
    put(report, algebra_list(poma::hs_si(a->a)));
  });
}

poma_status poma_si_quotients(const poma_algebra* a, char** report) {
  return guard([&] {
    need(a, "algebra");
    put(report, algebra_list(poma::si_quotients(a->a)));
  });
}

poma_status poma_product(const poma_algebra* a, const poma_algebra* b, poma_algebra** out) {
  return guard([&] {
    need(a, "algebra");
    need(b, "algebra");
    need(out, "output");
    *out = new poma_algebra{poma::product(a->a, b->a)};
  });
}

poma_status poma_dual_space(const poma_algebra* a, char** report) {
  return guard([&] {
    need(a, "algebra");
    const auto x = poma::dual_space(a->a);
    json j = json::parse(poma::to_json(x));
    j["kplus"] = poma::satisfies_kplus(x);
    put(report, j);
  });
}

poma_status poma_dual_space_dot(const poma_algebra* a, char** out) {
  return guard([&] {
    need(a, "algebra");
    put(out, poma::dual_space_dot(poma::dual_space(a->a)));
  });
}

poma_status poma_envelope(const poma_algebra* a, char** report) {
  return guard([&] {
    need(a, "algebra");
    const auto env = poma::boolean_envelope(a->a);
    const auto [m, comp] = poma::envelope_algebra(env);
    put(report, json{{"algebra", algebra_json(m)},
                     {"complement", comp},
                     {"kappa", env.kappa},
                     {"fsi", poma::is_fsi(m)},
                     {"simple", poma::is_simple(m)}});
  });
}

poma_status poma_complex_algebra(size_t worlds, const uint32_t* pairs, size_t npairs, poma_algebra** out) {
  return guard([&] {
    need(out, "output");
    if (npairs > 0) need(pairs, "pairs");
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (size_t i = 0; i < npairs; ++i) rel.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    *out = new poma_algebra{poma::complex_algebra(worlds, rel)};
  });
}

poma_status poma_free_over(const poma_algebra* const* gens, size_t ngens, size_t rank, poma_algebra** out,
                           uint32_t* generators_out) {
  return guard([&] {
    need(out, "output");
    if (rank > 0) need(generators_out, "generators_out");
    auto f = poma::free_over(gather(gens, ngens), rank);
    for (size_t i = 0; i < rank; ++i) generators_out[i] = f.generators[i];
    *out = new poma_algebra{std::move(f.algebra)};
  });
}

poma_status poma_free_zero(const poma_algebra* const* gens, size_t ngens, poma_algebra** out) {
  return guard([&] {
    need(out, "output");
    *out = new poma_algebra{poma::free_zero(gather(gens, ngens))};
  });
}

poma_status poma_figure1_verify(size_t bound, char** report) {
  return guard([&] {
    const auto r = poma::verify_figure1(bound);
    json stages = json::array();
    for (const auto& s : r.stages)
      stages.push_back(json{{"stage", s.stage}, {"passed", s.passed}, {"detail", s.detail}});
    put(report, json{{"passed", r.passed()}, {"bound", r.bound}, {"stages", stages}});
  });
}

poma_status poma_growth(size_t worlds, char** report) {
  return guard([&] {
    const auto g = poma::lemma53_growth(worlds);
    put(report, json{{"worlds", g.worlds},
                     {"distinct", g.distinct},
                     {"exact_upto", g.exact_upto},
                     {"saturated_at", g.saturated_at}});
  });
}

poma_status poma_enumerate(const char* kind, size_t min_size, size_t max_size, int si_only, int fsi_only,
                           const char* cache_dir, int resume, char** report) {
  return guard([&] {
    need(kind, "kind");
    poma::EnumerationTask task;
    try {
      task.kind = poma::parse_kind(kind);
    } catch (const poma::Error& e) {
      throw std::invalid_argument(e.what());
    }
    if (max_size < 1 || min_size < 1) throw std::invalid_argument("sizes must be at least 1");
    task.min_size = min_size;
    task.max_size = max_size;
    task.si_only = si_only != 0;
    task.fsi_only = fsi_only != 0;
    const auto list = cache_dir != nullptr && *cache_dir != '\0'
                          ? poma::enum_algebras_cached(task, cache_dir, resume != 0)
                          : poma::enum_algebras(task);
    put(report, algebra_list(list));
  });
}

poma_status poma_variety_new(const poma_algebra* const* gens, size_t ngens, poma_variety** out) {
  return guard([&] {
    need(out, "output");
    auto list = gather(gens, ngens);
    if (list.empty()) {
      *out = new poma_variety{poma::trivial_variety()};
      return;
    }
    *out = new poma_variety{poma::variety_of(list)};
  });
}

void poma_variety_free(poma_variety* v) { delete v; }

poma_status poma_variety_to_json(const poma_variety* v, char** out) {
  return guard([&] {
    need(v, "variety");
    put(out, variety_json(v->v));
  });
}

poma_status poma_variety_includes(const poma_variety* v, const poma_variety* w, int* out) {
  return guard([&] {
    need(v, "variety");
    need(w, "variety");
    need(out, "output");
    *out = poma::includes(v->v, w->v) ? 1 : 0;
  });
}

poma_status poma_variety_equals(const poma_variety* v, const poma_variety* w, int* out) {
  return guard([&] {
    need(v, "variety");
    need(w, "variety");
    need(out, "output");
    *out = poma::equals(v->v, w->v) ? 1 : 0;
  });
}

poma_status poma_variety_covers(const poma_variety* const* vs, size_t n, char** report) {
  return guard([&] {
    const auto hs = handles(vs, n);
    put(report, covers_json(hs, poma::covers_poset(hs)));
  });
}

poma_status poma_variety_covers_dot(const poma_variety* const* vs, size_t n, char** out) {
  return guard([&] {
    const auto hs = handles(vs, n);
    put(out, poma::variety_dot(hs, poma::covers_poset(hs)));
  });
}

poma_status poma_figure4(char** report) {
  return guard([&] {
    const auto& f = poma::figure4();
    const auto edges = poma::covers_poset(f.handles);
    json j = covers_json(f.handles, edges);
    json expected = json::array();
    for (auto [lo, hi] : f.expected) expected.push_back(json::array({lo, hi}));
    j["expected"] = expected;
    j["matches"] = edges == f.expected;
    put(report, j);
  });
}

poma_status poma_figure4_dot(char** out) {
  return guard([&] {
    const auto& f = poma::figure4();
    put(out, poma::variety_dot(f.handles, poma::covers_poset(f.handles)));
  });
}

poma_status poma_splitting(const poma_algebra* a, const char* which, char** report) {
  return guard([&] {
    need(a, "algebra");
    need(which, "which");
    const std::string w = which;
    poma::SplittingVerdict v;
    const poma::Equation* e;
    if (w == "c3a") v = poma::splitting_c3a(a->a), e = &poma::splitting_equation_c3a();
    else if (w == "c3b") v = poma::splitting_c3b(a->a), e = &poma::splitting_equation_c3b();
    else if (w == "d3") v = poma::splitting_d3(a->a), e = &poma::splitting_equation_d3();
    else throw std::invalid_argument("unknown splitting algebra " + w);
    put(report, json{{"equation", poma::to_string(*e)},
                     {"equation_holds", v.equation_holds},
                     {"excluded", v.excluded},
                     {"consistent", v.consistent()}});
  });
}

poma_status poma_battery(const char* name, size_t bound, char** report) {
  return poma_battery_cached(name, bound, nullptr, 0, report);
}

poma_status poma_battery_cached(const char* name, size_t bound, const char* cache_dir, int resume, char** report) {
  return guard([&] {
    need(name, "name");
    const std::string n = name;
    const bool cached = cache_dir != nullptr && *cache_dir != '\0';
    // Pools only matter for the enumeration-backed batteries.
    std::map<poma::AlgebraKind, std::vector<poma::FiniteAlgebra>> pools;
    auto pool = [&](poma::AlgebraKind k) -> const std::vector<poma::FiniteAlgebra>* {
      if (!cached) return nullptr;
      auto it = pools.find(k);
      if (it == pools.end()) {
        poma::EnumerationTask task;
        task.kind = k;
        task.max_size = bound;
        it = pools.emplace(k, poma::enum_algebras_cached(task, cache_dir, resume != 0)).first;
      }
      return &it->second;
    };
    using K = poma::AlgebraKind;
    poma::BatteryReport r;
    if (n == "thm610") r = poma::theorem610_battery(bound, pool(K::PS4));
    else if (n == "lemma92") r = poma::lemma92_battery(bound, pool(K::PMA));
    else if (n == "thm42") r = poma::thm42_battery(bound, pool(K::PS4));
    else if (n == "fact52") r = poma::fact52_battery(bound, pool(K::PS4));
    else if (n == "split") r = poma::splitting_battery(bound, bound, pool(K::PS4), pool(K::PK4));
    else if (n == "lemma83") r = poma::lemma83_shadow(bound, pool(K::PS4));
    else if (n == "lemma84") r = poma::lemma84_shadow(bound, pool(K::PS4));
    else if (n == "duality") r = poma::duality_battery(bound, pool(K::PMA));
    else if (n == "cg_dl") r = poma::cg_dl_battery(bound);
    else if (n == "cg_k4") r = poma::cg_k4_battery(bound);
    else if (n == "tau_rho") r = poma::tau_rho_battery(bound);
    else throw std::invalid_argument("unknown battery " + n);
    put(report, battery_json(r));
  });
}

poma_status poma_endomorphism_report(const poma_algebra* a, char** report) {
  return guard([&] {
    need(a, "algebra");
    const auto r = poma::lemma64_66_properties(a->a);
    put(report, json{{"endomorphisms", r.endomorphisms},
                     {"kernels_equal", r.kernels_equal},
                     {"kernel_congruence", r.kernel_congruence},
                     {"principal_lattice", r.principal_lattice},
                     {"si", r.si},
                     {"fixed_points", r.fixed_points},
                     {"monoliths", r.monoliths},
                     {"passed", r.passed()}});
  });
}

poma_status poma_separating_equation(const poma_algebra* a, const poma_algebra* b, unsigned depth, char** report) {
  return guard([&] {
    need(a, "algebra");
    need(b, "algebra");
    const auto s = poma::separating_equation(a->a, b->a, depth);
    put(report, json{{"equation", s.equation ? json(poma::to_string(*s.equation)) : json(nullptr)},
                     {"terms", s.terms},
                     {"truncated", s.truncated}});
  });
}

poma_status poma_complete(const poma_variety* v, const char* which, char** report) {
  return guard([&] {
    need(v, "variety");
    need(which, "which");
    const std::string w = which;
    poma::Verdict r;
    if (w == "sc") r = poma::is_sc_pk4(v->v);
    else if (w == "hsc") r = poma::is_hsc_pk4(v->v);
    else if (w == "psc") r = poma::is_psc(v->v);
    else if (w == "asc") r = poma::asc_necessary(v->v);
    else throw std::invalid_argument("unknown completeness notion " + w);
    put(report, verdict_json(r));
  });
}

poma_status poma_thm93(const poma_variety* v, size_t bound, char** report) {
  return guard([&] {
    need(v, "variety");
    const auto r = poma::theorem93_battery(v->v, bound);
    put(report, json{{"b2_branch", r.b2_branch},
                     {"n", r.n},
                     {"m", r.m},
                     {"bound", r.bound},
                     {"holds", r.disjunction()}});
  });
}

poma_status poma_lemma22(const poma_variety* v, int* out) {
  return guard([&] {
    need(v, "variety");
    need(out, "output");
    *out = poma::lemma22_check(v->v) ? 1 : 0;
  });
}

poma_status poma_quasi_classify(const poma_variety* v, const char* quasi, size_t max_free_rank, char** report) {
  return guard([&] {
    need(v, "variety");
    need(quasi, "quasi");
    const auto q = poma::parse_quasi(quasi);
    const auto r = poma::classify_quasi(v->v, q, max_free_rank);
    json subst = json::object();
    for (const auto& [k, t] : r.substitution) subst[k] = poma::to_string(t);
    put(report, json{{"status", poma::quasi_status_name(r.status)},
                     {"valid", r.valid},
                     {"rank", r.rank},
                     {"bound", r.bound},
                     {"assignment", assignment_json(r.assignment)},
                     {"substitution", subst}});
  });
}

poma_status poma_asc_experiment(size_t bound, char** report) {
  return guard([&] {
    const auto e = poma::asc_experiment(bound);
    json rows = json::array();
    for (const auto& r : e.rows)
      rows.push_back(json{{"algebra", r.algebra}, {"status", poma::status_name(r.status)}, {"reason", r.reason}});
    put(report, json{{"bound", e.bound}, {"rows", rows}, {"unknown", e.unknown()}});
  });
}

}  // extern "C"
