#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "poma/algebra.hpp"
#include "poma/varieties.hpp"

namespace poma {

// Each battery scans an enumeration up to `bound` unless `pool` is given,
// in which case members above the bound or of the wrong kind are skipped.

// kappa is an isomorphism onto the upsets of the dual space, and R is
// reflexive (transitive) exactly when the S4 (K4) inequalities hold.
BatteryReport duality_battery(std::size_t bound, const std::vector<FiniteAlgebra>* pool = nullptr);
// The Boolean envelope of every fsi PS4 algebra is fsi.
BatteryReport thm42_battery(std::size_t bound, const std::vector<FiniteAlgebra>* pool = nullptr);
// The sigma-term order holds at every element of every PS4 algebra.
BatteryReport fact52_battery(std::size_t bound, const std::vector<FiniteAlgebra>* pool = nullptr);
// cg_dl agrees with the generic closure on all pairs of every lattice.
BatteryReport cg_dl_battery(std::size_t bound);
// cg_k4 agrees with the generic closure on envelopes of the PK4 corpus.
// Envelopes above `exhaustive_limit` elements are checked on `samples` pairs.
BatteryReport cg_k4_battery(std::size_t exhaustive_limit = 1024, std::size_t samples = 4, std::uint32_t seed = 1);
// Random equations over random corpus algebras: e holds at an assignment
// iff both translated sequents do.
BatteryReport tau_rho_battery(std::size_t count = 1000, std::uint32_t seed = 1);

}  // namespace poma
