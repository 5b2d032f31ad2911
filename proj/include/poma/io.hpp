#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "poma/algebra.hpp"
#include "poma/congruence.hpp"
#include "poma/constructions.hpp"

namespace poma {

// Parses the JSON algebra format without checking the axioms.
// Throws StructuralError on malformed input.
AlgebraData algebra_data_from_json(std::string_view text);
FiniteAlgebra algebra_from_json(std::string_view text);

// Canonical compact form: keys size, leq, box, diamond, name (when set),
// then generators when non-empty.
std::string to_json(const FiniteAlgebra& a, const std::vector<Element>& generators = {});
std::string to_json(const Partition& p);
std::string to_json(const DualSpace& s);
std::string to_json(const ValidationReport& r);

// Hasse diagram; nodes are element indices.
std::string hasse_dot(const FiniteAlgebra& a, bool with_operators = false);
// Order covers as solid edges, R as dashed edges.
std::string dual_space_dot(const DualSpace& s);

// Stable DOT node id from a canonical form.
std::string dot_node_id(const CanonicalForm& f);

}  // namespace poma
