#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "poma/free.hpp"
#include "poma/syntax.hpp"
#include "poma/varieties.hpp"

namespace poma {

enum class Status { Yes, No, UnknownUpToBound };
std::string status_name(Status s);

struct Witness {
  std::string algebra;      // name of the algebra the certificate lives in
  std::string formula;      // equation or quasi-equation, printed
  Assignment assignment;    // may be empty
  std::string note;
};

struct Verdict {
  Status status = Status::UnknownUpToBound;
  std::size_t bound = 0;
  std::optional<Witness> witness;
  std::string route;
};

// F(m) over V, memoised per (generators, m).
const FreeAlgebraResult& free_of(const VarietyHandle& v, std::size_t m);

enum class QuasiStatus { Valid, ActiveWitness, PassiveUpTo, AdmissibleUpTo, RefutedAdmissibilityAt };
std::string quasi_status_name(QuasiStatus s);

struct QuasiVerdict {
  QuasiStatus status = QuasiStatus::AdmissibleUpTo;
  bool valid = false;
  std::size_t rank = 0;   // m of the witness (active or refuted)
  std::size_t bound = 0;  // max_free_rank searched
  Assignment assignment;  // values in F(rank)
  std::vector<std::pair<std::string, Term>> substitution;  // same values as terms
};

// Reporting order:
//   no premises: Valid, or RefutedAdmissibilityAt the least failing rank;
//   premises never unifiable in F(0..bound): PassiveUpTo;
//   some F(m) refutes q: RefutedAdmissibilityAt(least m);
//   unifiable and valid: ActiveWitness; unifiable, not valid, unrefuted: AdmissibleUpTo.
QuasiVerdict classify_quasi(const VarietyHandle& v, const QuasiEquation& q, std::size_t max_free_rank);

// A term naming each element of a free algebra, built from the generators x1..xn.
std::vector<Term> element_terms(const FreeAlgebraResult& f);

// Passive structural completeness for non-trivial subvarieties of PK4.
// Free-zero route: V = V(B2), or F(0) is C2 and D3 is not in V.
// Equation route: V = V(B2), or V satisfies dia 1 ~ 1, box 0 ~ 0 and the D3
// splitting inequality. Throws InternalError if the routes disagree.
Verdict is_psc(const VarietyHandle& v);
bool psc_route_free_zero(const VarietyHandle& v);
bool psc_route_equations(const VarietyHandle& v);

// Non-trivial subvarieties of PK4: Yes exactly for V(B2), V(C2), V(D4), with
// the free-algebra evidence checked.
Verdict is_sc_pk4(const VarietyHandle& v);
Verdict is_hsc_pk4(const VarietyHandle& v);

// Non-trivial subvarieties of PS4.
Verdict asc_necessary(const VarietyHandle& v);

struct Thm93Report {
  bool b2_branch = false;
  std::size_t n = 0;  // least n with box x /\ ... /\ box^n x <= x, 0 if none up to bound
  std::size_t m = 0;  // least m with x <= dia x \/ ... \/ dia^m x
  std::size_t bound = 0;
  bool disjunction() const { return b2_branch || (n > 0 && m > 0); }
};
Thm93Report theorem93_battery(const VarietyHandle& v, std::size_t bound);
Equation thm93_box_equation(std::size_t n);
Equation thm93_diamond_equation(std::size_t m);

// PSC implies F(0) simple or trivial. Needs PK4 generators.
bool lemma22_check(const VarietyHandle& v);

struct AscExperimentRow {
  std::string algebra;
  Status status = Status::UnknownUpToBound;
  std::string reason;
};

struct AscExperiment {
  std::size_t bound = 0;
  std::vector<AscExperimentRow> rows;  // one per enumerated si PK4 algebra
  std::size_t unknown() const;
};

// Scans V(A) for si PK4 algebras A up to `bound`; rows outside PS4 and
// different from V(B2) stay UnknownUpToBound.
AscExperiment asc_experiment(std::size_t bound);

}  // namespace poma
