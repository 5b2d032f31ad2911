#include "poma/completeness.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "poma/congruence.hpp"
#include "poma/constructions.hpp"
#include "poma/corpus.hpp"
#include "poma/enumerate.hpp"
#include "poma/errors.hpp"

namespace poma {

std::string status_name(Status s) {
  switch (s) {
    case Status::Yes: return "Yes";
    case Status::No: return "No";
    case Status::UnknownUpToBound: return "UnknownUpToBound";
  }
  return "?";
}

std::string quasi_status_name(QuasiStatus s) {
  switch (s) {
    case QuasiStatus::Valid: return "Valid";
    case QuasiStatus::ActiveWitness: return "ActiveWitness";
    case QuasiStatus::PassiveUpTo: return "PassiveUpTo";
    case QuasiStatus::AdmissibleUpTo: return "AdmissibleUpTo";
    case QuasiStatus::RefutedAdmissibilityAt: return "RefutedAdmissibilityAt";
  }
  return "?";
}

const FreeAlgebraResult& free_of(const VarietyHandle& v, std::size_t m) {
  using Key = std::pair<std::vector<CanonicalForm>, std::size_t>;
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<FreeAlgebraResult>> cache;
  Key key;
  for (const auto& g : v.generators) key.first.push_back(canonical_form(g));
  key.second = m;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto f = std::make_unique<FreeAlgebraResult>(free_over(v.generators, m));
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[key];
  if (!slot) slot = std::move(f);
  return *slot;
}

std::vector<Term> element_terms(const FreeAlgebraResult& f) {
  const FiniteAlgebra& a = f.algebra;
  std::vector<std::optional<Term>> named(a.size());
  std::vector<Element> known;
  auto learn = [&](Element e, Term t) {
    if (named[e]) return;
    named[e] = std::move(t);
    known.push_back(e);
  };
  learn(a.bottom(), Term::zero());
  learn(a.top(), Term::one());
  for (std::size_t i = 0; i < f.generators.size(); ++i)
    learn(f.generators[i], Term::var("x" + std::to_string(i + 1)));
  for (std::size_t done = 0; known.size() < a.size();) {
    const std::size_t end = known.size();
    if (done == end) throw InternalError("free algebra not generated by its generators");
    for (std::size_t i = done; i < end; ++i) {
      const Element x = known[i];
      learn(a.box(x), Term::box(*named[x]));
      learn(a.diamond(x), Term::diamond(*named[x]));
      for (std::size_t j = 0; j < end; ++j) {
        const Element y = known[j];
        learn(a.meet(x, y), Term::meet(*named[x], *named[y]));
        learn(a.join(x, y), Term::join(*named[x], *named[y]));
      }
    }
    done = end;
  }
  std::vector<Term> out;
  for (auto& t : named) out.push_back(std::move(*t));
  return out;
}

namespace {

void check_assignment_budget(std::size_t size, std::size_t vars) {
  double count = 1;
  for (std::size_t i = 0; i < vars; ++i) count *= double(size);
  if (count > double(1u << 22)) throw BudgetExceeded("too many assignments over the free algebra");
}

void fill_substitution(QuasiVerdict& r, const FreeAlgebraResult& f) {
  const auto terms = element_terms(f);
  for (const auto& [name, value] : r.assignment) r.substitution.emplace_back(name, terms[value]);
}

void require_nontrivial(const VarietyHandle& v) {
  if (v.si_closure.empty()) throw PreconditionError("needs a non-trivial variety");
}

void require_kind(const VarietyHandle& v, bool s4) {
  for (const auto& g : v.generators)
    if (s4 ? !is_ps4(g) : !is_pk4(g))
      throw PreconditionError(std::string("generator ") + g.name() + " is not a positive " + (s4 ? "S4" : "K4") +
                              "-algebra");
}

const VarietyHandle& named_variety(const char* name) {
  static std::mutex mu;
  static std::map<std::string, VarietyHandle> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, variety_of_names({name})).first;
  return it->second;
}

bool all_generators(const VarietyHandle& v, const std::vector<Equation>& es) {
  for (const auto& g : v.generators)
    if (!holds_all(g, es)) return false;
  return true;
}

}  // namespace

QuasiVerdict classify_quasi(const VarietyHandle& v, const QuasiEquation& q, std::size_t max_free_rank) {
  QuasiVerdict r;
  r.bound = max_free_rank;
  r.valid = std::all_of(v.generators.begin(), v.generators.end(),
                        [&](const FiniteAlgebra& g) { return holds_quasi(g, q).holds; });
  if (q.premises.empty() && r.valid) {
    r.status = QuasiStatus::Valid;
    return r;
  }
  const auto vars = variables(q);
  std::optional<std::size_t> active_rank;
  Assignment active;
  for (std::size_t m = 0; m <= max_free_rank; ++m) {
    const auto& f = free_of(v, m);
    check_assignment_budget(f.algebra.size(), vars.size());
    auto h = holds_quasi(f.algebra, q);
    if (!h.holds) {
      r.status = QuasiStatus::RefutedAdmissibilityAt;
      r.rank = m;
      r.assignment = *h.witness;
      fill_substitution(r, f);
      return r;
    }
    if (!active_rank && !q.premises.empty()) {
      if (auto s = solve_all(f.algebra, q.premises, vars)) {
        active_rank = m;
        active = *s;
      }
    }
  }
  if (q.premises.empty()) {
    r.status = QuasiStatus::AdmissibleUpTo;  // not valid, but no F(m) up to the bound refutes it
    return r;
  }
  if (!active_rank) {
    r.status = QuasiStatus::PassiveUpTo;
    return r;
  }
  r.rank = *active_rank;
  r.assignment = active;
  fill_substitution(r, free_of(v, r.rank));
  r.status = r.valid ? QuasiStatus::ActiveWitness : QuasiStatus::AdmissibleUpTo;
  return r;
}

bool psc_route_free_zero(const VarietyHandle& v) {
  if (equals(v, named_variety("B2"))) return true;
  return is_iso(free_zero(v.generators), corpus("C2")) && !contains_si(v, corpus("D3"));
}

bool psc_route_equations(const VarietyHandle& v) {
  if (equals(v, named_variety("B2"))) return true;
  return all_generators(v, {parse_equation("dia 1 ~ 1"), parse_equation("box 0 ~ 0"), splitting_equation_d3()});
}

Verdict is_psc(const VarietyHandle& v) {
  require_kind(v, false);
  require_nontrivial(v);
  const bool a = psc_route_free_zero(v);
  const bool b = psc_route_equations(v);
  if (a != b) throw InternalError("passive structural completeness routes disagree on " + v.label);
  Verdict r;
  r.status = a ? Status::Yes : Status::No;
  r.route = "free-zero and equations";
  Witness w;
  if (equals(v, named_variety("B2"))) {
    w.algebra = "B2";
    w.note = "the variety is V(B2)";
  } else if (contains_si(v, corpus("D3"))) {
    w.algebra = "D3";
    w.formula = "E x. box x ~ 0 & dia x ~ 1";
    w.note = "D3 is in the variety; the sentence holds in D3 but not in C2";
  } else {
    const auto f0 = free_zero(v.generators);
    w.algebra = "F0";
    w.note = "free zero-generated algebra has " + std::to_string(f0.size()) + " elements" +
             (is_iso(f0, corpus("C2")) ? " and is C2" : "");
  }
  r.witness = w;
  return r;
}

namespace {

Verdict sc_decision(const VarietyHandle& v, const std::string& route) {
  require_kind(v, false);
  require_nontrivial(v);
  Verdict r;
  r.route = route;
  Witness w;
  if (equals(v, named_variety("D4"))) {
    const auto f1 = free_over({corpus("D4")}, 1);
    if (!is_retract(corpus("D4"), f1.algebra)) throw InternalError("D4 is not a retract of its free algebra");
    r.status = Status::Yes;
    w.algebra = f1.algebra.name();
    w.note = "V(D4); D4 is a retract of the " + std::to_string(f1.algebra.size()) +
             "-element one-generated free algebra";
  } else if (equals(v, named_variety("C2")) || equals(v, named_variety("B2"))) {
    const auto& f1 = free_of(v, 1);
    for (const auto& s : v.si_closure)
      if (embeddings(s, f1.algebra).empty())
        throw InternalError(s.name() + " does not embed into the one-generated free algebra");
    r.status = Status::Yes;
    w.algebra = f1.algebra.name();
    w.note = std::string(equals(v, named_variety("B2")) ? "V(B2)" : "V(C2)") +
             "; every si member embeds into the one-generated free algebra";
  } else {
    r.status = Status::No;
    const std::vector<FiniteAlgebra> allowed = {corpus("B2"), corpus("C2"), corpus("D4")};
    bool outside = false;
    for (const auto& s : v.si_closure)
      if (!contains_iso(allowed, s)) {
        w.algebra = corpus_identify(s);
        if (w.algebra.empty()) w.algebra = s.name().empty() ? std::to_string(s.size()) + "-element si member" : s.name();
        w.note = "si member outside V(B2), V(C2) and V(D4)";
        outside = true;
        break;
      }
    if (!outside) {
      w.algebra = "B2";
      w.note = "contains B2 together with C2";
    }
  }
  r.witness = w;
  return r;
}

}  // namespace

Verdict is_sc_pk4(const VarietyHandle& v) { return sc_decision(v, "sc: V(B2), V(C2) or V(D4)"); }
Verdict is_hsc_pk4(const VarietyHandle& v) { return sc_decision(v, "hsc: V(B2), V(C2) or V(D4)"); }

Verdict asc_necessary(const VarietyHandle& v) {
  require_kind(v, true);
  require_nontrivial(v);
  Verdict r;
  for (const char* name : {"C3a", "C3b", "D3"})
    if (contains_si(v, corpus(name))) {
      r.status = Status::No;
      r.route = "excluded algebra";
      r.witness = Witness{name, {}, {}, std::string(name) + " is in the variety"};
      return r;
    }
  const Equation e1 = parse_equation("box dia x ~ box x"), e2 = parse_equation("dia box x ~ dia x");
  r.route = "box dia x ~ box x, dia box x ~ dia x";
  for (const auto& g : v.generators)
    for (const auto* e : {&e1, &e2}) {
      auto h = holds_eq(g, *e);
      if (!h.holds) {
        r.status = Status::No;
        r.witness = Witness{g.name(), to_string(*e), *h.witness, "equation fails"};
        return r;
      }
    }
  r.status = Status::Yes;
  r.witness = Witness{{}, {}, {}, equals(v, named_variety("C2")) ? "V(C2)" : "V(D4)"};
  return r;
}

Equation thm93_box_equation(std::size_t n) {
  Term lhs = Term::box(Term::var("x"));
  for (unsigned i = 2; i <= n; ++i) lhs = Term::meet(lhs, iterate_box(Term::var("x"), i));
  return leq_equation(lhs, Term::var("x"));
}

Equation thm93_diamond_equation(std::size_t m) {
  Term rhs = Term::diamond(Term::var("x"));
  for (unsigned i = 2; i <= m; ++i) rhs = Term::join(rhs, iterate_diamond(Term::var("x"), i));
  return leq_equation(Term::var("x"), rhs);
}

Thm93Report theorem93_battery(const VarietyHandle& v, std::size_t bound) {
  Thm93Report r;
  r.bound = bound;
  r.b2_branch = equals(v, named_variety("B2"));
  for (std::size_t k = 1; k <= bound && r.n == 0; ++k)
    if (all_generators(v, {thm93_box_equation(k)})) r.n = k;
  for (std::size_t k = 1; k <= bound && r.m == 0; ++k)
    if (all_generators(v, {thm93_diamond_equation(k)})) r.m = k;
  return r;
}

bool lemma22_check(const VarietyHandle& v) {
  const auto f0 = free_zero(v.generators.empty() ? std::vector<FiniteAlgebra>{trivial_algebra()} : v.generators);
  if (v.si_closure.empty()) return is_trivial(f0);
  if (is_psc(v).status != Status::Yes) return true;
  return is_trivial(f0) || is_simple(f0);
}

std::size_t AscExperiment::unknown() const {
  return std::size_t(std::count_if(rows.begin(), rows.end(),
                                   [](const auto& r) { return r.status == Status::UnknownUpToBound; }));
}

AscExperiment asc_experiment(std::size_t bound) {
  AscExperiment out;
  out.bound = bound;
  EnumerationTask task;
  task.max_size = bound;
  task.kind = AlgebraKind::PK4;
  task.si_only = true;
  for (const auto& a : enum_algebras(task)) {
    const auto v = variety_of({a});
    AscExperimentRow row;
    row.algebra = a.name();
    if (is_ps4(a)) {
      const auto verdict = asc_necessary(v);
      row.status = verdict.status;
      row.reason = "inside PS4: " + verdict.route;
    } else if (equals(v, named_variety("B2"))) {
      row.status = Status::Yes;
      row.reason = "V(B2) is structurally complete";
    } else {
      row.reason = "outside PS4 and not V(B2): not SC, ASC open";
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace poma
