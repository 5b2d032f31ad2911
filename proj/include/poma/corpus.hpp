#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "poma/algebra.hpp"

namespace poma {

using Cover = std::pair<Element, Element>;  // (lower, upper)

// Named algebras. Names are case-insensitive; parameterised families are
// EX46 (k atoms, 3..6), AN_MINUS (1..6) and AN_SIMPLE (2..6).
FiniteAlgebra corpus(std::string_view name, std::optional<int> parameter = std::nullopt);

// Accepts "NAME", "NAME:n" or "NAME(n)".
FiniteAlgebra corpus_lookup(std::string_view spec);

const std::vector<std::string>& corpus_names();
const std::vector<std::string>& figure2_names();  // the eleven one-generated si algebras
const std::vector<std::string>& figure3_names();

// Transcribed free one-generated positive S4-algebra.
const std::vector<Cover>& figure1_covers();
Element figure1_generator();
// A segment drawn in the source diagram that is not a cover of the algebra
// (keeping it breaks the lattice property); see figure1-verify.
Cover figure1_dropped_segment();

// Builders.
FiniteAlgebra from_covers(std::size_t n, const std::vector<Cover>& covers, std::vector<Element> box,
                          std::vector<Element> diamond, std::string name = {});
// Interior/closure operators given by their fixed points; 0 and 1 are added.
// box x is the greatest box-fixed point below x, diamond x the least
// diamond-fixed point above x.
FiniteAlgebra from_fixed_points(std::size_t n, const std::vector<Cover>& covers,
                                std::vector<Element> box_fixed, std::vector<Element> diamond_fixed,
                                std::string name = {});
FiniteAlgebra chain_algebra(std::size_t n, std::vector<Element> box_fixed,
                            std::vector<Element> diamond_fixed, std::string name = {});
// Powerset of {0..atoms-1}; element index is the subset bitmask.
FiniteAlgebra powerset_algebra(unsigned atoms, const std::function<Element(Element)>& box,
                               const std::function<Element(Element)>& diamond, std::string name = {});

FiniteAlgebra trivial_algebra();

// Name of the isomorphic non-parametric corpus algebra, or "" if none.
std::string corpus_identify(const FiniteAlgebra& a);

}  // namespace poma
