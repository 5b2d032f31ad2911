#pragma once

#include <concepts>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "poma/algebra.hpp"
#include "poma/errors.hpp"

namespace poma {

struct Term {
  enum class Kind { Var, Zero, One, Meet, Join, Box, Diamond };

  Kind kind = Kind::Zero;
  std::string name;        // Var only
  std::vector<Term> args;  // operands, left to right

  static Term var(std::string name);
  static Term zero();
  static Term one();
  static Term meet(Term l, Term r);
  static Term join(Term l, Term r);
  static Term box(Term t);
  static Term diamond(Term t);

  bool operator==(const Term&) const = default;
};

// Box applied n times.
Term iterate_box(Term t, unsigned n);
Term iterate_diamond(Term t, unsigned n);

struct Equation {
  Term lhs;
  Term rhs;
  bool operator==(const Equation&) const = default;
};

// l <= r, written as l /\ r ~ l.
Equation leq_equation(Term l, Term r);

struct QuasiEquation {
  std::vector<Equation> premises;
  Equation conclusion;
  bool operator==(const QuasiEquation&) const = default;
};

// E vars . conjunction of disjunctions of equations.
struct PosExistSentence {
  std::vector<std::string> variables;
  std::vector<std::vector<Equation>> matrix;
  bool operator==(const PosExistSentence&) const = default;
};

// Antecedent is kept sorted by printed form without duplicates.
struct Sequent {
  std::vector<Term> antecedent;
  Term succedent;
  bool operator==(const Sequent&) const = default;
};

Sequent make_sequent(std::vector<Term> antecedent, Term succedent);

Term parse_term(std::string_view text);
Equation parse_equation(std::string_view text);
QuasiEquation parse_quasi(std::string_view text);
PosExistSentence parse_pos_exist(std::string_view text);
Sequent parse_sequent(std::string_view text);

std::string to_string(const Term& t);
std::string to_string(const Equation& e);
std::string to_string(const QuasiEquation& q);
std::string to_string(const PosExistSentence& s);
std::string to_string(const Sequent& s);

// Sorted, duplicate-free variable names.
std::vector<std::string> variables(const Term& t);
std::vector<std::string> variables(const Equation& e);
std::vector<std::string> variables(const QuasiEquation& q);

using Assignment = std::map<std::string, Element>;

// Anything with meet/join/box/diamond/bottom/top over value_type.
template <class A>
concept TermAlgebra = requires(const A& a, typename A::value_type x) {
  { a.meet(x, x) } -> std::convertible_to<typename A::value_type>;
  { a.join(x, x) } -> std::convertible_to<typename A::value_type>;
  { a.box(x) } -> std::convertible_to<typename A::value_type>;
  { a.diamond(x) } -> std::convertible_to<typename A::value_type>;
  { a.bottom() } -> std::convertible_to<typename A::value_type>;
  { a.top() } -> std::convertible_to<typename A::value_type>;
};

template <TermAlgebra A>
typename A::value_type eval_in(const A& a, const Term& t,
                               const std::function<typename A::value_type(const std::string&)>& lookup) {
  switch (t.kind) {
    case Term::Kind::Var: return lookup(t.name);
    case Term::Kind::Zero: return a.bottom();
    case Term::Kind::One: return a.top();
    case Term::Kind::Meet: return a.meet(eval_in(a, t.args[0], lookup), eval_in(a, t.args[1], lookup));
    case Term::Kind::Join: return a.join(eval_in(a, t.args[0], lookup), eval_in(a, t.args[1], lookup));
    case Term::Kind::Box: return a.box(eval_in(a, t.args[0], lookup));
    case Term::Kind::Diamond: return a.diamond(eval_in(a, t.args[0], lookup));
  }
  return a.bottom();
}

Element eval(const FiniteAlgebra& a, const Term& t, const Assignment& asg);

struct HoldsResult {
  bool holds = true;
  std::optional<Assignment> witness;  // first counterexample when !holds
};

HoldsResult holds_eq(const FiniteAlgebra& a, const Equation& e);
HoldsResult holds_quasi(const FiniteAlgebra& a, const QuasiEquation& q);
bool holds_pos_exist(const FiniteAlgebra& a, const PosExistSentence& s);
// All equations at once.
bool holds_all(const FiniteAlgebra& a, const std::vector<Equation>& es);
// First assignment of `vars` (sorted) making every equation true, in odometer order.
std::optional<Assignment> solve_all(const FiniteAlgebra& a, const std::vector<Equation>& es,
                                    const std::vector<std::string>& vars);

Equation tau(const Sequent& s);
std::pair<Sequent, Sequent> rho(const Equation& e);

// Term evaluated on every assignment of `vars` in lexicographic order
// (first variable most significant).
std::vector<Element> term_table(const FiniteAlgebra& a, const Term& t,
                                const std::vector<std::string>& vars);

}  // namespace poma
