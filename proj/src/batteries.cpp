#include "poma/batteries.hpp"

#include <algorithm>
#include <random>

#include "poma/congruence.hpp"
#include "poma/constructions.hpp"
#include "poma/corpus.hpp"
#include "poma/enumerate.hpp"
#include "poma/free.hpp"
#include "poma/syntax.hpp"

namespace poma {

namespace {

std::vector<FiniteAlgebra> scan(std::size_t bound, AlgebraKind kind, const std::vector<FiniteAlgebra>* pool) {
  if (pool == nullptr) {
    EnumerationTask task;
    task.max_size = bound;
    task.kind = kind;
    return enum_algebras(task);
  }
  std::vector<FiniteAlgebra> out;
  for (const auto& a : *pool)
    if (a.size() <= bound && satisfies_kind(a, kind)) out.push_back(a);
  return out;
}

BatteryReport start(const char* name, std::size_t bound) {
  BatteryReport r;
  r.name = name;
  r.bound = bound;
  r.passed = true;
  return r;
}

void fail(BatteryReport& r, const std::string& what) {
  if (r.passed) r.detail = what;
  r.passed = false;
  r.witnesses.push_back(what);
}

bool s4_inequalities(const FiniteAlgebra& a) {
  for (Element x = 0; x < a.size(); ++x)
    if (!a.leq(a.box(x), x) || !a.leq(x, a.diamond(x))) return false;
  return true;
}

bool k4_inequalities(const FiniteAlgebra& a) {
  for (Element x = 0; x < a.size(); ++x)
    if (!a.leq(a.box(x), a.box(a.box(x))) || !a.leq(a.diamond(a.diamond(x)), a.diamond(x))) return false;
  return true;
}

}  // namespace

BatteryReport duality_battery(std::size_t bound, const std::vector<FiniteAlgebra>* pool) {
  auto r = start("duality", bound);
  for (const auto& a : scan(bound, AlgebraKind::PMA, pool)) {
    ++r.checked;
    const DualSpace x = dual_space(a);
    const auto [up, masks] = upset_algebra(x);
    const Map k = kappa(a);
    auto sorted = k;
    std::sort(sorted.begin(), sorted.end());
    const bool bijective = up.size() == a.size() && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (!bijective || !is_homomorphism(a, up, k)) fail(r, a.name() + ": kappa is not an isomorphism");
    bool refl = true, trans = true;
    for (std::size_t p = 0; p < x.size(); ++p) {
      refl = refl && x.rel(p, p);
      for (std::size_t q = 0; q < x.size(); ++q)
        for (std::size_t s = 0; s < x.size(); ++s)
          if (x.rel(p, q) && x.rel(q, s) && !x.rel(p, s)) trans = false;
    }
    if (refl != s4_inequalities(a)) fail(r, a.name() + ": reflexivity correspondence");
    if (trans != k4_inequalities(a)) fail(r, a.name() + ": transitivity correspondence");
  }
  if (r.passed) r.detail = std::to_string(r.checked) + " PMA algebras";
  return r;
}

BatteryReport thm42_battery(std::size_t bound, const std::vector<FiniteAlgebra>* pool) {
  auto r = start("thm42", bound);
  std::size_t scanned = 0;
  for (const auto& a : scan(bound, AlgebraKind::PS4, pool)) {
    ++scanned;
    if (!is_fsi(a)) continue;
    ++r.checked;
    const auto m = envelope_algebra(boolean_envelope(a)).first;
    if (!is_fsi(m)) fail(r, a.name() + ": envelope is not fsi");
  }
  if (r.passed)
    r.detail = std::to_string(r.checked) + " fsi of " + std::to_string(scanned) + " PS4 algebras; all envelopes fsi";
  return r;
}

BatteryReport fact52_battery(std::size_t bound, const std::vector<FiniteAlgebra>* pool) {
  auto r = start("fact52", bound);
  std::size_t algebras = 0;
  for (const auto& a : scan(bound, AlgebraKind::PS4, pool)) {
    ++algebras;
    for (Element x = 0; x < a.size(); ++x) {
      ++r.checked;
      if (!fact52_check(a, x)) fail(r, a.name() + " at " + std::to_string(x));
    }
  }
  if (r.passed) r.detail = std::to_string(algebras) + " PS4 algebras, " + std::to_string(r.checked) + " elements";
  return r;
}

BatteryReport cg_dl_battery(std::size_t bound) {
  auto r = start("cg_dl", bound);
  const auto lattices = enum_bdl(bound);
  for (const auto& a : lattices)
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y) {
        ++r.checked;
        if (cg_dl(a, x, y) != cg_lattice(a, {{x, y}}))
          fail(r, a.name() + " pair " + std::to_string(x) + "," + std::to_string(y));
      }
  if (r.passed)
    r.detail = std::to_string(lattices.size()) + " lattices, " + std::to_string(r.checked) + " pairs";
  return r;
}

BatteryReport cg_k4_battery(std::size_t exhaustive_limit, std::size_t samples, std::uint32_t seed) {
  auto r = start("cg_k4", exhaustive_limit);
  std::vector<FiniteAlgebra> algebras;
  for (const auto& n : corpus_names()) {
    if (n == "EX46") {
      for (int k = 3; k <= 6; ++k) algebras.push_back(corpus(n, k));
    } else if (n == "AN_MINUS") {
      for (int k = 1; k <= 6; ++k) algebras.push_back(corpus(n, k));
    } else if (n == "AN_SIMPLE") {
      for (int k = 2; k <= 6; ++k) algebras.push_back(corpus(n, k));
    } else {
      algebras.push_back(corpus(n));
    }
  }
  std::mt19937 rng(seed);
  std::size_t envelopes = 0, sampled = 0;
  for (const auto& a : algebras) {
    if (!is_pk4(a) || is_trivial(a)) continue;
    ++envelopes;
    const auto env = boolean_envelope(a);
    const PowersetModalAlgebra m(env.frame);
    const auto comp = m.complement_table();
    auto check = [&](Element x, Element y) {
      ++r.checked;
      if (cg_k4_of(m, comp, x, y) != cg_of(m, {{x, y}}))
        fail(r, a.name() + " pair " + std::to_string(x) + "," + std::to_string(y));
    };
    if (m.size() <= exhaustive_limit) {
      for (Element x = 0; x < m.size(); ++x)
        for (Element y = x; y < m.size(); ++y) check(x, y);
    } else {
      ++sampled;
      std::uniform_int_distribution<Element> pick(0, Element(m.size() - 1));
      for (std::size_t i = 0; i < samples; ++i) {
        const Element x = pick(rng), y = pick(rng);
        check(x, y);
      }
    }
  }
  if (r.passed)
    r.detail = std::to_string(envelopes) + " envelopes, " + std::to_string(r.checked) + " pairs (" +
               std::to_string(sampled) + " sampled)";
  return r;
}

namespace {

Term random_term(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> leaf(0, 3), node(0, 6);
  const int k = depth <= 0 ? leaf(rng) : node(rng);
  switch (k) {
    case 0: return Term::var("x");
    case 1: return Term::var("y");
    case 2: return Term::zero();
    case 3: return Term::one();
    case 4: return Term::box(random_term(rng, depth - 1));
    case 5: return Term::diamond(random_term(rng, depth - 1));
    default:
      return rng() % 2 ? Term::meet(random_term(rng, depth - 1), random_term(rng, depth - 1))
                       : Term::join(random_term(rng, depth - 1), random_term(rng, depth - 1));
  }
}

}  // namespace

BatteryReport tau_rho_battery(std::size_t count, std::uint32_t seed) {
  auto r = start("tau_rho", count);
  std::vector<FiniteAlgebra> pool;
  for (const auto& n : corpus_names())
    if (n != "EX46" && n != "AN_MINUS" && n != "AN_SIMPLE" && n != "TRIVIAL") pool.push_back(corpus(n));
  pool.push_back(corpus("AN_MINUS", 3));
  pool.push_back(corpus("AN_SIMPLE", 2));
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const std::vector<std::string> vars = {"x", "y"};
  for (std::size_t i = 0; i < count; ++i) {
    const FiniteAlgebra& a = pool[pick(rng)];
    const Equation e{random_term(rng, 3), random_term(rng, 3)};
    const auto [s1, s2] = rho(e);
    const Equation t1 = tau(s1), t2 = tau(s2);
    const auto l = term_table(a, e.lhs, vars), rr = term_table(a, e.rhs, vars);
    const auto l1 = term_table(a, t1.lhs, vars), r1 = term_table(a, t1.rhs, vars);
    const auto l2 = term_table(a, t2.lhs, vars), r2 = term_table(a, t2.rhs, vars);
    ++r.checked;
    for (std::size_t k = 0; k < l.size(); ++k)
      if ((l[k] == rr[k]) != (l1[k] == r1[k] && l2[k] == r2[k])) {
        fail(r, a.name() + ": " + to_string(e));
        break;
      }
  }
  if (r.passed) r.detail = std::to_string(r.checked) + " random equations over " + std::to_string(pool.size()) +
                           " corpus algebras";
  return r;
}

}  // namespace poma
