#include "poma/varieties.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <unordered_map>

#include "poma/congruence.hpp"
#include "poma/corpus.hpp"
#include "poma/enumerate.hpp"
#include "poma/errors.hpp"
#include "poma/free.hpp"

namespace poma {

VarietyHandle variety_of(const std::vector<FiniteAlgebra>& gens, std::string label) {
  VarietyHandle v;
  v.generators = gens;
  std::vector<FiniteAlgebra> all;
  for (const auto& g : gens)
    for (auto& s : hs_si(g)) all.push_back(std::move(s));
  v.si_closure = dedup_iso(std::move(all));
  for (const auto& s : v.si_closure) v.forms.push_back(canonical_form(s));
  std::sort(v.forms.begin(), v.forms.end());
  if (label.empty()) {
    label = "V(";
    for (std::size_t i = 0; i < gens.size(); ++i) label += (i ? "," : "") + gens[i].name();
    label += ")";
  }
  v.label = std::move(label);
  return v;
}

VarietyHandle variety_of_names(const std::vector<std::string>& names) {
  std::vector<FiniteAlgebra> gens;
  for (const auto& n : names) gens.push_back(corpus_lookup(n));
  return variety_of(gens);
}

VarietyHandle trivial_variety() { return variety_of({trivial_algebra()}, "Trivial"); }

bool includes(const VarietyHandle& v, const VarietyHandle& w) {
  return std::includes(v.forms.begin(), v.forms.end(), w.forms.begin(), w.forms.end());
}

bool equals(const VarietyHandle& v, const VarietyHandle& w) { return v.forms == w.forms; }

bool contains_si(const VarietyHandle& v, const FiniteAlgebra& a) {
  return std::binary_search(v.forms.begin(), v.forms.end(), canonical_form(a));
}

std::uint64_t variety_hash(const VarietyHandle& v) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint8_t b) {
    h ^= b;
    h *= 1099511628211ull;
  };
  for (const auto& f : v.forms) {
    for (auto b : f.code) mix(b);
    mix(0xff);
  }
  return h;
}

std::vector<Edge> covers_poset(const std::vector<VarietyHandle>& handles) {
  const std::size_t n = handles.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));  // strict inclusion
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      below[i][j] = i != j && includes(handles[j], handles[i]) && !includes(handles[i], handles[j]);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!below[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (below[i][k] && below[k][j]) cover = false;
      if (cover) edges.emplace_back(i, j);
    }
  return edges;
}

const Figure4& figure4() {
  static const Figure4 fig = [] {
    Figure4 f;
    const std::vector<std::vector<std::string>> gens = {
        {},           {"C2"},        {"D3"},        {"C3a"},       {"C3b"},       {"D4"},
        {"A4"},       {"B4"},        {"D3", "D4"},  {"C3a", "D4"}, {"C4a"},       {"C3a", "C3b"},
        {"C3b", "D4"}, {"C4b"},      {"D3", "C3a"}, {"D3", "C3b"}};
    for (const auto& g : gens) f.handles.push_back(g.empty() ? trivial_variety() : variety_of_names(g));
    auto at = [&](const std::string& label) {
      for (std::size_t i = 0; i < f.handles.size(); ++i)
        if (f.handles[i].label == label) return i;
      throw NotFound("no handle " + label);
    };
    const std::vector<std::pair<std::string, std::string>> drawn = {
        {"Trivial", "V(C2)"},
        {"V(C2)", "V(D3)"},       {"V(C2)", "V(D4)"},       {"V(C2)", "V(C3a)"},     {"V(C2)", "V(C3b)"},
        {"V(D4)", "V(D3,D4)"},    {"V(D4)", "V(C3a,D4)"},   {"V(D4)", "V(C3b,D4)"},
        {"V(D3)", "V(D3,D4)"},    {"V(D3)", "V(D3,C3a)"},   {"V(D3)", "V(D3,C3b)"},  {"V(D3)", "V(A4)"},
        {"V(D3)", "V(B4)"},
        {"V(C3a)", "V(C3a,D4)"},  {"V(C3a)", "V(C4a)"},     {"V(C3a)", "V(C3a,C3b)"}, {"V(C3a)", "V(D3,C3a)"},
        {"V(C3b)", "V(C3a,C3b)"}, {"V(C3b)", "V(C3b,D4)"},  {"V(C3b)", "V(C4b)"},    {"V(C3b)", "V(D3,C3b)"}};
    for (const auto& [lo, hi] : drawn) f.expected.emplace_back(at(lo), at(hi));
    std::sort(f.expected.begin(), f.expected.end());
    return f;
  }();
  return fig;
}

std::string variety_dot(const std::vector<VarietyHandle>& handles, const std::vector<Edge>& edges) {
  auto id = [&](std::size_t i) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "v%016llx", static_cast<unsigned long long>(variety_hash(handles[i])));
    return std::string(buf);
  };
  std::string out = "digraph varieties {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < handles.size(); ++i)
    out += "  " + id(i) + " [label=\"" + handles[i].label + "\"];\n";
  for (auto [lo, hi] : edges) out += "  " + id(lo) + " -> " + id(hi) + " [arrowhead=none];\n";
  return out + "}\n";
}

// ------------------------------------------------------------ splittings

const Equation& splitting_equation_c3a() {
  static const Equation e = parse_equation("dia box dia x ~ dia x");
  return e;
}
const Equation& splitting_equation_c3b() {
  static const Equation e = parse_equation("box dia box x ~ box x");
  return e;
}
const Equation& splitting_equation_d3() {
  static const Equation e = parse_equation("dia x /\\ box dia x <= x \\/ box x \\/ dia box x");
  return e;
}

namespace {

SplittingVerdict splitting_verdict(const FiniteAlgebra& a, const Equation& e, const char* target) {
  SplittingVerdict v;
  v.equation_holds = holds_eq(a, e).holds;
  v.excluded = !contains_iso(hs_si(a), corpus(target));
  return v;
}

// Corpus name of an isomorphic algebra, else the algebra's own name.
std::string display_name(const FiniteAlgebra& a) {
  auto n = corpus_identify(a);
  return n.empty() ? a.name() : n;
}

std::vector<FiniteAlgebra> pool_or_enumerate(std::size_t bound, AlgebraKind kind,
                                             const std::vector<FiniteAlgebra>* pool) {
  if (pool != nullptr) {
    std::vector<FiniteAlgebra> out;
    for (const auto& a : *pool)
      if (a.size() <= bound && satisfies_kind(a, kind)) out.push_back(a);
    return out;
  }
  EnumerationTask task;
  task.max_size = bound;
  task.kind = kind;
  return enum_algebras(task);
}

// Every si algebra of the pool passing `eqs` is isomorphic to one of `allowed`.
BatteryReport axiomatization_battery(std::string name, std::size_t bound, AlgebraKind kind,
                                     const std::vector<Equation>& eqs, const std::vector<std::string>& allowed,
                                     const std::vector<FiniteAlgebra>* pool) {
  BatteryReport r;
  r.name = std::move(name);
  r.bound = bound;
  r.passed = true;
  const auto algebras = pool_or_enumerate(bound, kind, pool);
  std::vector<FiniteAlgebra> allowed_algs;
  for (const auto& n : allowed) allowed_algs.push_back(corpus(n));
  for (const auto& a : algebras) {
    if (!holds_all(a, eqs) || !is_si(a)) continue;
    ++r.checked;
    const std::string w = display_name(a);
    if (std::find(r.witnesses.begin(), r.witnesses.end(), w) == r.witnesses.end()) r.witnesses.push_back(w);
    if (!contains_iso(allowed_algs, a)) {
      r.passed = false;
      if (r.detail.empty()) r.detail = "unexpected " + a.name();
    }
  }
  r.detail = std::to_string(algebras.size()) + " " + kind_name(kind) + " algebras scanned, " +
             std::to_string(r.checked) + " si models" + (r.detail.empty() ? "" : "; " + r.detail);
  return r;
}

}  // namespace

SplittingVerdict splitting_c3a(const FiniteAlgebra& a) {
  if (!is_ps4(a)) throw PreconditionError("splitting_c3a requires a positive S4-algebra");
  return splitting_verdict(a, splitting_equation_c3a(), "C3a");
}

SplittingVerdict splitting_c3b(const FiniteAlgebra& a) {
  if (!is_ps4(a)) throw PreconditionError("splitting_c3b requires a positive S4-algebra");
  return splitting_verdict(a, splitting_equation_c3b(), "C3b");
}

SplittingVerdict splitting_d3(const FiniteAlgebra& a) {
  if (!is_pk4(a)) throw PreconditionError("splitting_d3 requires a positive K4-algebra");
  return splitting_verdict(a, splitting_equation_d3(), "D3");
}

// ------------------------------------------------------------ batteries

std::string format_witnesses(const std::vector<std::string>& w) {
  std::string out = "{";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? ", " : "") + w[i];
  return out + "}";
}

BatteryReport theorem610_battery(std::size_t bound, const std::vector<FiniteAlgebra>* pool) {
  return axiomatization_battery("thm610", bound, AlgebraKind::PS4,
                                {parse_equation("box dia x ~ box x"), parse_equation("dia box x ~ dia x")},
                                {"C2", "D4"}, pool);
}

BatteryReport lemma92_battery(std::size_t bound, const std::vector<FiniteAlgebra>* pool) {
  return axiomatization_battery("lemma92", bound, AlgebraKind::PMA,
                                {parse_equation("box x ~ 1"), parse_equation("dia x ~ 0")}, {"B2"}, pool);
}

BatteryReport splitting_battery(std::size_t ps4_bound, std::size_t pk4_bound, const std::vector<FiniteAlgebra>* ps4,
                                const std::vector<FiniteAlgebra>* pk4) {
  BatteryReport r;
  r.name = "split";
  r.bound = std::max(ps4_bound, pk4_bound);
  r.passed = true;
  std::size_t checked_s = 0, checked_k = 0;
  for (const auto& a : pool_or_enumerate(ps4_bound, AlgebraKind::PS4, ps4)) {
    if (!is_si(a)) continue;
    ++checked_s;
    for (auto v : {splitting_c3a(a), splitting_c3b(a)})
      if (!v.consistent()) {
        r.passed = false;
        r.witnesses.push_back(a.name());
      }
  }
  for (const auto& a : pool_or_enumerate(pk4_bound, AlgebraKind::PK4, pk4)) {
    if (!is_si(a)) continue;
    ++checked_k;
    if (!splitting_d3(a).consistent()) {
      r.passed = false;
      r.witnesses.push_back(a.name());
    }
  }
  r.checked = checked_s + checked_k;
  r.detail = std::to_string(checked_s) + " si PS4 algebras <= " + std::to_string(ps4_bound) + ", " +
             std::to_string(checked_k) + " si PK4 algebras <= " + std::to_string(pk4_bound);
  return r;
}

BatteryReport lemma83_shadow(std::size_t bound, const std::vector<FiniteAlgebra>* pool) {
  BatteryReport r;
  r.name = "lemma83-shadow";
  r.bound = bound;
  r.passed = true;
  const FiniteAlgebra c2 = corpus("C2"), d3 = corpus("D3"), a4 = corpus("A4"), b4 = corpus("B4");
  for (const auto& a : pool_or_enumerate(bound, AlgebraKind::PS4, pool)) {
    if (!is_si(a) || is_iso(a, c2) || is_iso(a, d3)) continue;
    if (!satisfies_one_var_theory(a, d3)) continue;
    ++r.checked;
    r.witnesses.push_back(display_name(a));
    if (embeddings(a4, a).empty() && embeddings(b4, a).empty()) {
      r.passed = false;
      r.detail = "no A4 or B4 inside " + a.name() + "; ";
    }
  }
  r.detail += std::to_string(r.checked) + " si algebras with the one-variable theory of D3";
  return r;
}

BatteryReport lemma84_shadow(std::size_t bound, const std::vector<FiniteAlgebra>* pool) {
  BatteryReport r;
  r.name = "lemma84-shadow";
  r.bound = bound;
  r.passed = true;
  const std::vector<FiniteAlgebra> allowed = {corpus("C2"), corpus("C3a")};
  const FiniteAlgebra c3a = corpus("C3a");
  for (const auto& a : pool_or_enumerate(bound, AlgebraKind::PS4, pool)) {
    if (!is_si(a) || !satisfies_one_var_theory(a, c3a)) continue;
    ++r.checked;
    r.witnesses.push_back(display_name(a));
    if (!contains_iso(allowed, a)) r.passed = false;
  }
  r.detail = "desk-scale: " + std::to_string(r.checked) + " si algebras with the one-variable theory of C3a";
  return r;
}

// ------------------------------------------- box and dia as endomorphisms

bool EndomorphismReport::passed() const {
  return endomorphisms && kernels_equal && kernel_congruence && principal_lattice &&
         (!si || (fixed_points && monoliths));
}

EndomorphismReport lemma64_66_properties(const FiniteAlgebra& a) {
  if (!is_ps4(a) || !holds_eq(a, parse_equation("box dia x ~ box x")).holds ||
      !holds_eq(a, parse_equation("dia box x ~ dia x")).holds)
    throw PreconditionError("needs a positive S4-algebra with box dia x ~ box x and dia box x ~ dia x");
  const std::size_t n = a.size();
  EndomorphismReport r;
  r.endomorphisms = a.box(a.bottom()) == a.bottom() && a.diamond(a.top()) == a.top();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      r.endomorphisms = r.endomorphisms && a.box(a.join(x, y)) == a.join(a.box(x), a.box(y)) &&
                        a.diamond(a.meet(x, y)) == a.meet(a.diamond(x), a.diamond(y));
    }
  std::vector<std::uint32_t> kb(a.box_table().begin(), a.box_table().end());
  std::vector<std::uint32_t> kd(a.diamond_table().begin(), a.diamond_table().end());
  const Partition ker_box(kb), ker_dia(kd);
  r.kernels_equal = ker_box == ker_dia;
  r.kernel_congruence = is_congruence(a, ker_box);
  r.principal_lattice = true;
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (a.box(x) == a.box(y) && cg(a, {{x, y}}) != cg_lattice(a, {{x, y}})) r.principal_lattice = false;
  r.si = is_si(a);
  if (!r.si) return r;
  const Partition mu = monolith(a);
  r.fixed_points = true;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!a.less(x, y) || cg(a, {{x, y}}) != mu) continue;
      for (Element c = 0; c < n; ++c) {
        if (a.leq(y, c) && c != a.top() && a.diamond(c) != c) r.fixed_points = false;
        if (a.leq(c, x) && c != a.bottom() && a.box(c) != c) r.fixed_points = false;
      }
    }
  r.monoliths = true;
  for (Element x = 0; x < n; ++x) {
    if (a.box(x) != x && cg(a, {{a.box(x), x}}) != mu) r.monoliths = false;
    if (a.diamond(x) != x && cg(a, {{x, a.diamond(x)}}) != mu) r.monoliths = false;
  }
  return r;
}

// ------------------------------------------------ equation separation oracle

SeparationResult separating_equation(const FiniteAlgebra& a, const FiniteAlgebra& b, unsigned depth, unsigned vars,
                                     std::size_t cap) {
  if (vars < 1 || vars > 3) throw PreconditionError("separation oracle supports 1 to 3 variables");
  using Table = std::u16string;
  auto assignments = [&](const FiniteAlgebra& x) {
    std::size_t c = 1;
    for (unsigned i = 0; i < vars; ++i) c *= x.size();
    return c;
  };
  const std::size_t na = assignments(a), nb = assignments(b);
  if (a.size() > 0xffff || b.size() > 0xffff || na + nb > (1u << 16))
    throw PreconditionError("algebras too large for the separation oracle");

  std::vector<Term> terms;
  std::vector<Table> tab;  // a-part then b-part
  std::unordered_map<Table, std::size_t> seen, by_b;
  SeparationResult res;

  auto add = [&](Term t, Table full) -> bool {
    if (seen.count(full)) return false;
    Table bpart = full.substr(na);
    auto it = by_b.find(bpart);
    if (it != by_b.end()) {
      res.equation = Equation{terms[it->second], std::move(t)};
      return true;
    }
    const std::size_t id = terms.size();
    seen.emplace(full, id);
    by_b.emplace(std::move(bpart), id);
    terms.push_back(std::move(t));
    tab.push_back(std::move(full));
    return false;
  };
  auto constant = [&](Element ca, Element cb) {
    Table t(na, char16_t(ca));
    t.append(nb, char16_t(cb));
    return t;
  };
  auto variable = [&](unsigned v) {
    Table t;
    for (const FiniteAlgebra* x : {&a, &b}) {
      const std::size_t count = x == &a ? na : nb;
      std::size_t stride = 1;
      for (unsigned i = v + 1; i < vars; ++i) stride *= x->size();
      for (std::size_t k = 0; k < count; ++k) t.push_back(char16_t((k / stride) % x->size()));
    }
    return t;
  };
  auto unary = [&](const Table& t, bool box) {
    Table out(t.size(), u'\0');
    for (std::size_t k = 0; k < t.size(); ++k) {
      const FiniteAlgebra& x = k < na ? a : b;
      out[k] = char16_t(box ? x.box(t[k]) : x.diamond(t[k]));
    }
    return out;
  };
  auto binary = [&](const Table& s, const Table& t, bool meet) {
    Table out(s.size(), u'\0');
    for (std::size_t k = 0; k < s.size(); ++k) {
      const FiniteAlgebra& x = k < na ? a : b;
      out[k] = char16_t(meet ? x.meet(s[k], t[k]) : x.join(s[k], t[k]));
    }
    return out;
  };

  auto finish = [&](bool truncated) {
    res.truncated = truncated;
    res.terms = terms.size();
    return res;
  };

  static const char* names[] = {"x", "y", "z"};
  if (add(Term::zero(), constant(a.bottom(), b.bottom())) || add(Term::one(), constant(a.top(), b.top())))
    return finish(false);
  for (unsigned v = 0; v < vars; ++v)
    if (add(Term::var(names[v]), variable(v))) return finish(false);

  std::size_t prev_begin = 0;
  for (unsigned d = 1; d <= depth; ++d) {
    const std::size_t prev_end = terms.size();
    for (std::size_t i = prev_begin; i < prev_end; ++i) {
      for (bool box : {true, false}) {
        if (terms.size() >= cap) return finish(true);
        Term t = box ? Term::box(terms[i]) : Term::diamond(terms[i]);
        if (add(std::move(t), unary(tab[i], box))) return finish(false);
      }
      for (std::size_t j = 0; j < prev_end; ++j) {
        if (j >= prev_begin && j < i) continue;  // both new: take each unordered pair once
        for (bool meet : {true, false}) {
          if (terms.size() >= cap) return finish(true);
          Term t = meet ? Term::meet(terms[i], terms[j]) : Term::join(terms[i], terms[j]);
          if (add(std::move(t), binary(tab[i], tab[j], meet))) return finish(false);
        }
      }
    }
    prev_begin = prev_end;
  }
  return finish(false);
}

}  // namespace poma
