#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "poma/algebra.hpp"
#include "poma/syntax.hpp"

namespace poma {

enum class AlgebraKind { PMA, PK4, PS4 };

std::string kind_name(AlgebraKind k);
AlgebraKind parse_kind(std::string_view name);
bool satisfies_kind(const FiniteAlgebra& a, AlgebraKind k);

struct Poset {
  std::size_t size = 0;
  std::vector<std::uint8_t> leq;  // size x size
  bool le(std::size_t x, std::size_t y) const { return leq[x * size + y] != 0; }
};

constexpr std::size_t kDefaultEnumBudget = 1u << 20;

// Posets on exactly k points, up to isomorphism.
std::vector<Poset> enum_posets(std::size_t k, std::size_t budget = kDefaultEnumBudget);
// Downset lattice with identity operators.
FiniteAlgebra downset_lattice(const Poset& p);
// Distributive lattices with at most max_size elements (identity operators),
// one per isomorphism class, sorted by (size, canonical form).
std::vector<FiniteAlgebra> enum_bdl(std::size_t max_size, std::size_t budget = kDefaultEnumBudget);

struct EnumerationTask {
  std::size_t max_size = 1;
  std::size_t min_size = 1;
  AlgebraKind kind = AlgebraKind::PS4;
  bool si_only = false;
  bool fsi_only = false;
  std::vector<Equation> equations;  // every one must hold
  std::size_t budget = kDefaultEnumBudget;
};

// All algebras of the kind up to isomorphism, in canonical relabelling,
// sorted by (size, canonical form). Names are KIND:size:index, counted
// before filters apply.
std::vector<FiniteAlgebra> enum_algebras(const EnumerationTask& task);

// Same, through a JSON-lines cache in `dir` holding one file per
// (kind, size). With resume, existing files are read instead of recomputed.
std::vector<FiniteAlgebra> enum_algebras_cached(const EnumerationTask& task, const std::string& dir, bool resume);

bool passes_filters(const FiniteAlgebra& a, const EnumerationTask& task);

// Brute force over all order matrices and operator tables; for tests.
std::vector<FiniteAlgebra> naive_bdl(std::size_t max_size);
std::vector<FiniteAlgebra> naive_algebras(std::size_t max_size, AlgebraKind kind);
// Permutation-minimised encoding, independent of canonical_form.
std::vector<std::uint32_t> naive_canonical_code(const FiniteAlgebra& a);

}  // namespace poma
