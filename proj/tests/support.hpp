#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "poma/algebra.hpp"
#include "poma/constructions.hpp"
#include "poma/corpus.hpp"
#include "poma/enumerate.hpp"
#include "poma/syntax.hpp"

namespace testing {

inline poma::FiniteAlgebra C(const std::string& spec) { return poma::corpus_lookup(spec); }

inline std::vector<poma::FiniteAlgebra> enumerate(std::size_t max, poma::AlgebraKind kind, bool si = false) {
  poma::EnumerationTask t;
  t.max_size = max;
  t.kind = kind;
  t.si_only = si;
  return poma::enum_algebras(t);
}

// Every fixed-size corpus algebra except the 37-element free algebra.
inline std::vector<poma::FiniteAlgebra> small_corpus() {
  std::vector<poma::FiniteAlgebra> out;
  for (const char* n : {"TRIVIAL", "C2", "B2", "D3", "C3a", "C3b", "D4", "C4a", "C4b", "C5a", "C5b", "C6a", "C6b",
                        "A4", "D5a", "D5b", "B4", "EX44III", "EX44IV", "EX46:3", "AN_MINUS:2", "AN_MINUS:3",
                        "AN_SIMPLE:2"})
    out.push_back(C(n));
  return out;
}

inline poma::Term random_term(std::mt19937& rng, int depth, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> leaf(0, int(vars.size()) + 1), node(0, 5);
  if (depth <= 0 || rng() % 4 == 0) {
    const int k = leaf(rng);
    if (k == int(vars.size())) return poma::Term::zero();
    if (k == int(vars.size()) + 1) return poma::Term::one();
    return poma::Term::var(vars[std::size_t(k)]);
  }
  switch (node(rng)) {
    case 0:
    case 1: return poma::Term::box(random_term(rng, depth - 1, vars));
    case 2:
    case 3: return poma::Term::diamond(random_term(rng, depth - 1, vars));
    case 4: return poma::Term::meet(random_term(rng, depth - 1, vars), random_term(rng, depth - 1, vars));
    default: return poma::Term::join(random_term(rng, depth - 1, vars), random_term(rng, depth - 1, vars));
  }
}

// The same algebra with elements renamed by `perm` (old -> new).
inline poma::FiniteAlgebra relabel(const poma::FiniteAlgebra& a, const std::vector<poma::Element>& perm) {
  const std::size_t n = a.size();
  std::vector<poma::Element> meet(n * n), join(n * n), box(n), dia(n);
  for (poma::Element x = 0; x < n; ++x) {
    for (poma::Element y = 0; y < n; ++y) {
      meet[perm[x] * n + perm[y]] = perm[a.meet(x, y)];
      join[perm[x] * n + perm[y]] = perm[a.join(x, y)];
    }
    box[perm[x]] = perm[a.box(x)];
    dia[perm[x]] = perm[a.diamond(x)];
  }
  return poma::FiniteAlgebra::from_tables(n, meet, join, box, dia, a.name());
}

inline bool same_iso_set(std::vector<poma::FiniteAlgebra> a, std::vector<poma::FiniteAlgebra> b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a)
    if (!poma::contains_iso(b, x)) return false;
  return true;
}

}  // namespace testing
