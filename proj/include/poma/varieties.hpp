#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poma/algebra.hpp"
#include "poma/constructions.hpp"
#include "poma/syntax.hpp"

namespace poma {

// Finitely generated variety, kept as the s.i. members of HS(generators).
// By Jonsson's lemma these are all the s.i. members of V(generators).
struct VarietyHandle {
  std::vector<FiniteAlgebra> generators;
  std::vector<FiniteAlgebra> si_closure;  // sorted by (size, form)
  std::vector<CanonicalForm> forms;       // sorted, one per si_closure member
  std::string label;
};

VarietyHandle variety_of(const std::vector<FiniteAlgebra>& gens, std::string label = {});
// Generators given as corpus specs; label "V(A,B)".
VarietyHandle variety_of_names(const std::vector<std::string>& names);
VarietyHandle trivial_variety();

// W is a subvariety of V.
bool includes(const VarietyHandle& v, const VarietyHandle& w);
bool equals(const VarietyHandle& v, const VarietyHandle& w);
bool contains_si(const VarietyHandle& v, const FiniteAlgebra& a);
// Stable id from the si forms, for DOT output.
std::uint64_t variety_hash(const VarietyHandle& v);

using Edge = std::pair<std::size_t, std::size_t>;  // (lower, upper) indices

// Hasse diagram of inclusion among the handles, sorted.
std::vector<Edge> covers_poset(const std::vector<VarietyHandle>& handles);

struct Figure4 {
  std::vector<VarietyHandle> handles;
  std::vector<Edge> expected;  // edges as drawn, sorted
};
const Figure4& figure4();
std::string variety_dot(const std::vector<VarietyHandle>& handles, const std::vector<Edge>& edges);

// ------------------------------------------------------------ splittings

const Equation& splitting_equation_c3a();  // dia box dia x ~ dia x
const Equation& splitting_equation_c3b();  // box dia box x ~ box x
const Equation& splitting_equation_d3();   // dia x /\ box dia x <= x \/ box x \/ dia box x

struct SplittingVerdict {
  bool equation_holds = false;
  bool excluded = false;  // splitting algebra not in hs_si(A)
  bool consistent() const { return equation_holds == excluded; }
};

SplittingVerdict splitting_c3a(const FiniteAlgebra& a);
SplittingVerdict splitting_c3b(const FiniteAlgebra& a);
SplittingVerdict splitting_d3(const FiniteAlgebra& a);

// ------------------------------------------------------------ batteries

struct BatteryReport {
  std::string name;
  std::size_t bound = 0;
  bool passed = false;
  std::size_t checked = 0;
  std::vector<std::string> witnesses;  // corpus names, or enumeration names when unmatched
  std::string detail;
};

std::string format_witnesses(const std::vector<std::string>& w);  // "{C2, D4}"

// Enumerated si PS4 algebras up to `bound` satisfying box dia x ~ box x and
// dia box x ~ dia x are all C2 or D4. `pool` overrides the enumeration.
BatteryReport theorem610_battery(std::size_t bound, const std::vector<FiniteAlgebra>* pool = nullptr);
// Enumerated si PMA algebras satisfying box x ~ 1 and dia x ~ 0 are all B2.
BatteryReport lemma92_battery(std::size_t bound, const std::vector<FiniteAlgebra>* pool = nullptr);
// Splitting consistency on every si algebra of the pool (PS4 for c3a/c3b, PK4 for d3).
BatteryReport splitting_battery(std::size_t ps4_bound, std::size_t pk4_bound,
                                const std::vector<FiniteAlgebra>* ps4 = nullptr,
                                const std::vector<FiniteAlgebra>* pk4 = nullptr);
// si PS4 algebras outside {C2, D3} satisfying the one-variable theory of D3
// have A4 or B4 as a subalgebra.
BatteryReport lemma83_shadow(std::size_t bound, const std::vector<FiniteAlgebra>* pool = nullptr);
// si PS4 algebras satisfying the one-variable theory of C3a are C2 or C3a.
// Finite shadow only ("desk-scale").
BatteryReport lemma84_shadow(std::size_t bound, const std::vector<FiniteAlgebra>* pool = nullptr);

struct EndomorphismReport {
  bool endomorphisms = false;    // box, dia preserve meet, join, 0, 1
  bool kernels_equal = false;
  bool kernel_congruence = false;
  bool principal_lattice = false;  // box a = box b: Cg(a,b) is the lattice congruence
  bool si = false;
  bool fixed_points = false;     // only checked when si
  bool monoliths = false;        // only checked when si
  bool passed() const;
};

// Requires PS4 and both equations box dia x ~ box x, dia box x ~ dia x.
EndomorphismReport lemma64_66_properties(const FiniteAlgebra& a);

// ------------------------------------------------ equation separation oracle

struct SeparationResult {
  std::optional<Equation> equation;  // valid in b, fails in a
  std::size_t terms = 0;             // distinct term-function pairs seen
  bool truncated = false;            // stopped by the term cap
};

// Enumerates terms in `vars` variables up to `depth` nested operations.
SeparationResult separating_equation(const FiniteAlgebra& a, const FiniteAlgebra& b, unsigned depth = 4,
                                     unsigned vars = 2, std::size_t cap = 4000);

}  // namespace poma
