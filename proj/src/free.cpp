#include "poma/free.hpp"

#include <algorithm>
#include <unordered_map>

#include "poma/congruence.hpp"
#include "poma/constructions.hpp"
#include "poma/corpus.hpp"
#include "poma/enumerate.hpp"
#include "poma/errors.hpp"

namespace poma {

FreeAlgebraResult free_over(const std::vector<FiniteAlgebra>& k, std::size_t n, std::size_t budget) {
  if (k.empty()) throw PreconditionError("free_over needs at least one algebra");
  // Coordinates: one per (algebra, assignment of the n generators).
  std::vector<const FiniteAlgebra*> coord_alg;
  std::vector<std::vector<Element>> gen_values(n);
  for (const auto& a : k) {
    if (a.size() > 0xffff) throw PreconditionError("basis algebra too large");
    std::size_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
      count *= a.size();
      if (count > (1u << 20)) throw BudgetExceeded("too many coordinates for free_over");
    }
    for (std::size_t c = 0; c < count; ++c) {
      coord_alg.push_back(&a);
      // First generator is the most significant digit.
      std::size_t rest = c;
      for (std::size_t i = n; i-- > 0;) {
        gen_values[i].push_back(Element(rest % a.size()));
        rest /= a.size();
      }
    }
  }
  const std::size_t width = coord_alg.size();
  using Tuple = std::u16string;
  std::vector<Tuple> elems;
  std::unordered_map<Tuple, Element> index;
  auto intern = [&](Tuple t) -> Element {
    auto it = index.find(t);
    if (it != index.end()) return it->second;
    if (elems.size() >= budget)
      throw BudgetExceeded("free algebra exceeds " + std::to_string(budget) + " elements");
    Element id = Element(elems.size());
    index.emplace(t, id);
    elems.push_back(std::move(t));
    return id;
  };
  Tuple t(width, u'\0');
  for (std::size_t c = 0; c < width; ++c) t[c] = char16_t(coord_alg[c]->bottom());
  intern(t);
  for (std::size_t c = 0; c < width; ++c) t[c] = char16_t(coord_alg[c]->top());
  intern(t);
  std::vector<Element> gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < width; ++c) t[c] = char16_t(gen_values[i][c]);
    gens.push_back(intern(t));
  }
  std::vector<std::vector<Element>> meet_rows, join_rows;
  std::vector<Element> box, diamond;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    Tuple u(width, u'\0');
    for (std::size_t c = 0; c < width; ++c) u[c] = char16_t(coord_alg[c]->box(elems[i][c]));
    box.push_back(intern(u));
    for (std::size_t c = 0; c < width; ++c) u[c] = char16_t(coord_alg[c]->diamond(elems[i][c]));
    diamond.push_back(intern(u));
    meet_rows.emplace_back(i + 1);
    join_rows.emplace_back(i + 1);
    for (std::size_t j = 0; j <= i; ++j) {
      for (std::size_t c = 0; c < width; ++c) u[c] = char16_t(coord_alg[c]->meet(elems[i][c], elems[j][c]));
      meet_rows[i][j] = intern(u);
      for (std::size_t c = 0; c < width; ++c) u[c] = char16_t(coord_alg[c]->join(elems[i][c], elems[j][c]));
      join_rows[i][j] = intern(u);
    }
  }
  const std::size_t size = elems.size();
  std::vector<Element> meet(size * size), join(size * size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      meet[i * size + j] = meet[j * size + i] = meet_rows[i][j];
      join[i * size + j] = join[j * size + i] = join_rows[i][j];
    }
  FreeAlgebraResult r{FiniteAlgebra::from_tables(size, std::move(meet), std::move(join), std::move(box),
                                                 std::move(diamond), "F" + std::to_string(n)),
                      std::move(gens),
                      {}};
  for (const auto& a : k) r.basis.push_back(a.name());
  return r;
}

FiniteAlgebra free_zero(const std::vector<FiniteAlgebra>& k) { return free_over(k, 0).algebra; }

bool check_freeness(const FreeAlgebraResult& f, const std::vector<FiniteAlgebra>& k) {
  const std::size_t n = f.generators.size();
  for (const auto& a : k) {
    std::vector<Element> asg(n, 0);
    for (;;) {
      HomQuery q;
      q.limit = 2;
      for (std::size_t i = 0; i < n; ++i) q.fixed.emplace_back(f.generators[i], asg[i]);
      if (find_homs(f.algebra, a, q).size() != 1) return false;
      std::size_t i = n;
      while (i > 0 && ++asg[i - 1] == a.size()) asg[--i] = 0;
      if (i == 0) break;
    }
  }
  return true;
}

FreeAlgebraResult figure1_algebra() { return {corpus("F1_PS4"), {figure1_generator()}, {"PS4"}}; }

bool Figure1Report::passed() const {
  return std::all_of(stages.begin(), stages.end(), [](const auto& s) { return s.passed; });
}

const std::vector<Term>& sigma_terms() {
  static const std::vector<Term> terms = {
      parse_term("x"),        parse_term("box x"),         parse_term("dia box x"),
      parse_term("box dia box x"), parse_term("dia x"), parse_term("box dia x"),
      parse_term("dia box dia x")};
  return terms;
}

const std::vector<std::pair<int, int>>& fact52_relations() {
  // Positions in sigma_terms(); each pair is (lower, upper).
  static const std::vector<std::pair<int, int>> rel = {{1, 3}, {3, 5}, {3, 2}, {5, 6},
                                                       {2, 6}, {6, 4}, {1, 0}, {0, 4}};
  return rel;
}

namespace {

std::vector<Element> sigma_values(const FiniteAlgebra& b, Element x) {
  std::vector<Element> out;
  for (const auto& t : sigma_terms()) out.push_back(eval(b, t, {{"x", x}}));
  return out;
}

// Reflexive-transitive closure of fact52_relations on 7 points.
std::vector<std::vector<bool>> fact52_order() {
  std::vector<std::vector<bool>> le(7, std::vector<bool>(7, false));
  for (int i = 0; i < 7; ++i) le[i][i] = true;
  for (auto [l, u] : fact52_relations()) le[l][u] = true;
  for (int k = 0; k < 7; ++k)
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  return le;
}

}  // namespace

bool fact52_check(const FiniteAlgebra& b, Element x) {
  if (!is_ps4(b)) throw PreconditionError("fact52_check requires a positive S4-algebra");
  if (x >= b.size()) throw PreconditionError("element index out of range");
  const auto v = sigma_values(b, x);
  for (auto [l, u] : fact52_relations())
    if (!b.leq(v[l], v[u])) return false;
  return true;
}

bool fact52_exact(const FiniteAlgebra& b, Element x) {
  if (!fact52_check(b, x)) return false;
  const auto v = sigma_values(b, x);
  const auto le = fact52_order();
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      if (i != j && v[i] == v[j]) return false;
      if (b.leq(v[i], v[j]) != le[i][j]) return false;
    }
  return true;
}

Figure1Report verify_figure1(std::size_t bound, const std::vector<FiniteAlgebra>* ps4) {
  Figure1Report report;
  report.bound = bound;
  const auto f = figure1_algebra();
  const FiniteAlgebra& a = f.algebra;
  const Element g = f.generators.front();

  StageResult sa{"a: positive S4-algebra", is_ps4(a), ""};
  if (!sa.passed) {
    auto v = validate(a);
    if (!v.violations.empty()) sa.detail = "violates " + v.violations.front().axiom;
  }
  report.stages.push_back(sa);

  const auto gen = subuniverse_closure(a, {g});
  report.stages.push_back({"b: generated by a", gen.size() == a.size(),
                           std::to_string(gen.size()) + " of " + std::to_string(a.size()) + " elements"});

  const auto qs = si_quotients(a);
  bool catalog = qs.size() == figure2_names().size();
  std::string missing;
  for (const auto& name : figure2_names())
    if (!contains_iso(qs, corpus(name))) {
      catalog = false;
      missing += " " + name;
    }
  report.stages.push_back({"c: s.i. quotients are the one-generated catalog", catalog,
                           std::to_string(qs.size()) + " quotients" +
                               (missing.empty() ? std::string() : "; missing" + missing)});

  std::vector<FiniteAlgebra> own;
  if (ps4 == nullptr) {
    EnumerationTask task;
    task.max_size = bound;
    task.kind = AlgebraKind::PS4;
    own = enum_algebras(task);
    ps4 = &own;
  }
  StageResult sd{"d: unique homomorphism a -> b", true, ""};
  std::size_t checked = 0;
  for (const auto& b : *ps4) {
    if (b.size() > bound) continue;
    for (Element x = 0; x < b.size() && sd.passed; ++x) {
      HomQuery q;
      q.limit = 2;
      q.fixed = {{g, x}};
      const auto hs = find_homs(a, b, q);
      ++checked;
      if (hs.size() != 1) {
        sd.passed = false;
        sd.detail = b.name() + " element " + std::to_string(x) + ": " + std::to_string(hs.size()) + " maps";
      }
    }
    if (!sd.passed) break;
  }
  if (sd.passed)
    sd.detail = std::to_string(ps4->size()) + " algebras, " + std::to_string(checked) + " targets, bound " +
                std::to_string(bound);
  report.stages.push_back(sd);

  report.stages.push_back({"e: sigma values form the diagram", fact52_exact(a, g), "seven distinct values"});
  return report;
}

Term build_phi(std::size_t n) {
  Term phi = Term::box(Term::var("x"));
  for (std::size_t m = 0; m < n; ++m) {
    Term side = Term::var(m % 2 == 1 ? "x" : "y");
    phi = Term::box(Term::join(side, phi));
  }
  return phi;
}

GrowthReport lemma53_growth(std::size_t n_worlds) {
  if (n_worlds < 1 || n_worlds > 64) throw PreconditionError("lemma53_growth needs 1..64 worlds");
  std::vector<WorldSet> succ(n_worlds);
  WorldSet evens = 0, odds = 0;
  for (std::size_t w = 0; w < n_worlds; ++w) {
    succ[w] = w == 63 ? ~WorldSet(0) : (WorldSet(1) << (w + 1)) - 1;  // {v : v <= w}
    (w % 2 == 0 ? evens : odds) |= WorldSet(1) << w;
  }
  FrameAlgebra frame(n_worlds, succ);
  GrowthReport r;
  r.worlds = n_worlds;
  std::vector<WorldSet> values;
  bool exact = true;
  r.saturated_at = n_worlds;
  for (std::size_t k = 0; k < n_worlds; ++k) {
    const WorldSet v = eval_in<FrameAlgebra>(frame, build_phi(k), [&](const std::string& name) {
      return name == "x" ? evens : odds;
    });
    values.push_back(v);
    const WorldSet expect = k == 63 ? ~WorldSet(0) : (WorldSet(1) << (k + 1)) - 1;
    if (exact && v == expect) r.exact_upto = k + 1;
    else exact = false;
    if (v == frame.top() && r.saturated_at == n_worlds) r.saturated_at = k;
  }
  std::sort(values.begin(), values.end());
  r.distinct = std::size_t(std::unique(values.begin(), values.end()) - values.begin());
  return r;
}

bool same_one_var_theory(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const auto fa = free_over({a}, 1);
  const auto fb = free_over({b}, 1);
  if (fa.algebra.size() != fb.algebra.size()) return false;
  HomQuery q;
  q.injective = true;
  q.limit = 1;
  q.fixed = {{fa.generators.front(), fb.generators.front()}};
  return !find_homs(fa.algebra, fb.algebra, q).empty();
}

bool satisfies_one_var_theory(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  // F_a(1) is then a quotient of F_b(1) by the generator-preserving map.
  const auto fa = free_over({a}, 1);
  const auto fb = free_over({b}, 1);
  HomQuery q;
  q.limit = 1;
  q.fixed = {{fb.generators.front(), fa.generators.front()}};
  return !find_homs(fb.algebra, fa.algebra, q).empty();
}

}  // namespace poma
