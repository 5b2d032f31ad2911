#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "poma/algebra.hpp"
#include "poma/syntax.hpp"

namespace poma {

struct FreeAlgebraResult {
  FiniteAlgebra algebra;
  std::vector<Element> generators;  // images of x1..xn
  std::vector<std::string> basis;   // names of the generating algebras
};

constexpr std::size_t kDefaultFreeBudget = 1u << 12;

// Subalgebra of the product over A in K of A^(A^n) generated by the
// projections. Elements are numbered in discovery order: 0, 1, then the
// generators. Throws BudgetExceeded past `budget` elements.
FreeAlgebraResult free_over(const std::vector<FiniteAlgebra>& k, std::size_t n,
                            std::size_t budget = kDefaultFreeBudget);
FiniteAlgebra free_zero(const std::vector<FiniteAlgebra>& k);

// For every A in K and every assignment of the generators in A exactly one
// homomorphism extends it.
bool check_freeness(const FreeAlgebraResult& f, const std::vector<FiniteAlgebra>& k);

FreeAlgebraResult figure1_algebra();

struct StageResult {
  std::string stage;
  bool passed = false;
  std::string detail;
};

struct Figure1Report {
  std::vector<StageResult> stages;
  std::size_t bound = 0;
  bool passed() const;
};

// Stages a to e. `ps4` lists the algebras for stage d; when null they are
// enumerated up to `bound`.
Figure1Report verify_figure1(std::size_t bound = 6, const std::vector<FiniteAlgebra>* ps4 = nullptr);

// x, box x, dia box x, box dia box x, dia x, box dia x, dia box dia x.
const std::vector<Term>& sigma_terms();
// Order relations (lower, upper) between sigma_terms() positions.
const std::vector<std::pair<int, int>>& fact52_relations();
bool fact52_check(const FiniteAlgebra& b, Element x);
// The seven values are pairwise distinct and ordered exactly as in the diagram.
bool fact52_exact(const FiniteAlgebra& b, Element x);

Term build_phi(std::size_t n);

struct GrowthReport {
  std::size_t worlds = 0;
  std::size_t distinct = 0;     // distinct values among phi_0 .. phi_{N-1}
  std::size_t exact_upto = 0;   // phi_n = {0..n} for all n < exact_upto
  std::size_t saturated_at = 0; // least n with phi_n the whole frame
};

// Over ({0..N-1}, >=) with x = evens and y = odds.
GrowthReport lemma53_growth(std::size_t n_worlds);

bool same_one_var_theory(const FiniteAlgebra& a, const FiniteAlgebra& b);
// a satisfies every one-variable equation valid in b.
bool satisfies_one_var_theory(const FiniteAlgebra& a, const FiniteAlgebra& b);

}  // namespace poma
