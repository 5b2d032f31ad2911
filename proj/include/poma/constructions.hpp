#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poma/algebra.hpp"
#include "poma/congruence.hpp"

namespace poma {

// Element map between two algebras, indexed by source element.
using Map = std::vector<Element>;

constexpr std::size_t kDefaultSearchBudget = 1u << 22;

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b);

// Least subuniverse containing `generators`, 0 and 1; ascending.
std::vector<Element> subuniverse_closure(const FiniteAlgebra& a, const std::vector<Element>& generators);
// All subuniverses (ascending element lists, sorted); needs size <= 64.
std::vector<std::vector<Element>> subuniverses(const FiniteAlgebra& a,
                                               std::size_t budget = kDefaultSearchBudget);
// Subalgebra on a subuniverse; the map sends positions to parent elements.
std::pair<FiniteAlgebra, Map> subalgebra_of(const FiniteAlgebra& a, const std::vector<Element>& subuniverse);
std::pair<FiniteAlgebra, Map> subalgebra_generated(const FiniteAlgebra& a,
                                                   const std::vector<Element>& generators);
// Block algebra; the map sends elements to block indices.
std::pair<FiniteAlgebra, Map> quotient(const FiniteAlgebra& a, const Partition& p);

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const Map& f);

struct HomQuery {
  std::vector<std::pair<Element, Element>> fixed;  // forced source -> target
  bool injective = false;
  std::size_t limit = 0;  // stop after this many results (0: all)
  std::size_t budget = kDefaultSearchBudget;  // search nodes
};

// Homomorphisms in lexicographic order of their maps.
std::vector<Map> find_homs(const FiniteAlgebra& a, const FiniteAlgebra& b, const HomQuery& q);
std::vector<Map> homs(const FiniteAlgebra& a, const FiniteAlgebra& b);
std::vector<Map> embeddings(const FiniteAlgebra& a, const FiniteAlgebra& b);

struct CanonicalForm {
  std::vector<std::uint8_t> code;
  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;
  std::uint64_t hash() const;  // FNV-1a, stable across platforms
};

// Order in which elements are relabelled: position -> element.
std::vector<Element> canonical_labeling(const FiniteAlgebra& a, std::size_t budget = kDefaultSearchBudget);
CanonicalForm canonical_form(const FiniteAlgebra& a);
// The algebra relabelled in canonical order.
FiniteAlgebra canonical_algebra(const FiniteAlgebra& a);
bool is_iso(const FiniteAlgebra& a, const FiniteAlgebra& b);
// canonical_algebra and canonical_form from one labelling pass.
std::pair<FiniteAlgebra, CanonicalForm> canonicalize(const FiniteAlgebra& a);

// Quotients by meet-irreducible congruences, deduplicated, sorted by
// (size, canonical form).
std::vector<FiniteAlgebra> si_quotients(const FiniteAlgebra& a);
std::vector<Partition> meet_irreducible_congruences(const FiniteAlgebra& a);
std::vector<FiniteAlgebra> hs_si(const FiniteAlgebra& a, std::size_t budget = kDefaultSearchBudget);

// Keeps the first of each isomorphism class and sorts by (size, form).
std::vector<FiniteAlgebra> dedup_iso(std::vector<FiniteAlgebra> algebras);
bool contains_iso(const std::vector<FiniteAlgebra>& list, const FiniteAlgebra& a);

bool is_retract(const FiniteAlgebra& a, const FiniteAlgebra& b);

// ------------------------------------------------------------------ duality

using WorldSet = std::uint64_t;

// Complex algebra of a finite frame, elements are world bitmasks (<= 64 worlds).
class FrameAlgebra {
 public:
  using value_type = WorldSet;

  FrameAlgebra(std::size_t worlds, std::vector<WorldSet> successors);

  std::size_t worlds() const { return worlds_; }
  bool related(std::size_t x, std::size_t y) const { return (succ_[x] >> y) & 1u; }
  const std::vector<WorldSet>& successors() const { return succ_; }

  WorldSet bottom() const { return 0; }
  WorldSet top() const { return full_; }
  WorldSet meet(WorldSet x, WorldSet y) const { return x & y; }
  WorldSet join(WorldSet x, WorldSet y) const { return x | y; }
  WorldSet complement(WorldSet x) const { return full_ & ~x; }
  WorldSet box(WorldSet v) const;
  WorldSet diamond(WorldSet v) const;

  bool reflexive() const;
  bool transitive() const;

  // Whole powerset as a FiniteAlgebra (element index = mask); <= 10 worlds.
  FiniteAlgebra to_finite(std::string name = {}) const;

 private:
  std::size_t worlds_;
  WorldSet full_;
  std::vector<WorldSet> succ_;
};

// Tabulated powerset modal algebra for closure algorithms (<= 20 worlds).
class PowersetModalAlgebra {
 public:
  using value_type = Element;

  explicit PowersetModalAlgebra(const FrameAlgebra& frame);

  std::size_t size() const { return box_.size(); }
  Element bottom() const { return 0; }
  Element top() const { return Element(box_.size() - 1); }
  Element meet(Element x, Element y) const { return x & y; }
  Element join(Element x, Element y) const { return x | y; }
  Element box(Element x) const { return box_[x]; }
  Element diamond(Element x) const { return diamond_[x]; }
  bool leq(Element x, Element y) const { return (x & ~y) == 0; }
  std::vector<Element> complement_table() const;

 private:
  std::vector<Element> box_;
  std::vector<Element> diamond_;
};

FiniteAlgebra complex_algebra(std::size_t worlds, const std::vector<std::pair<std::size_t, std::size_t>>& relation,
                              std::string name = {});

struct DualSpace {
  std::vector<std::vector<Element>> points;  // prime filters, ascending elements
  std::vector<std::uint8_t> leq;            // inclusion, points x points
  std::vector<std::uint8_t> R;
  std::size_t size() const { return points.size(); }
  bool le(std::size_t x, std::size_t y) const { return leq[x * points.size() + y] != 0; }
  bool rel(std::size_t x, std::size_t y) const { return R[x * points.size() + y] != 0; }
};

std::vector<std::vector<Element>> prime_filters(const FiniteAlgebra& a);
DualSpace dual_space(const FiniteAlgebra& a);
// R = (R;<=) intersected with (R;>=), both as compositions.
bool satisfies_kplus(const DualSpace& x);
// Upsets ordered by mask value; the second component lists each upset's mask.
std::pair<FiniteAlgebra, std::vector<WorldSet>> upset_algebra(const DualSpace& x);
// kappa as a map into upset_algebra(dual_space(a)).
Map kappa(const FiniteAlgebra& a);

bool is_p_morphism(const DualSpace& x, const DualSpace& y, const std::vector<std::size_t>& f);
// F |-> h^{-1}[F] for a homomorphism h: a -> b, as a map Pr(b) -> Pr(a).
std::vector<std::size_t> dual_map(const FiniteAlgebra& a, const FiniteAlgebra& b, const Map& h);

struct BooleanEnvelope {
  DualSpace space;
  FrameAlgebra frame;
  std::vector<WorldSet> kappa;  // image of each element of the source
};

BooleanEnvelope boolean_envelope(const FiniteAlgebra& a);
// Envelope as a FiniteAlgebra with its complement table (<= 10 prime filters).
std::pair<FiniteAlgebra, std::vector<Element>> envelope_algebra(const BooleanEnvelope& env);

// Generators f (f <= box f) of the open filters of a Boolean modal algebra.
std::vector<Element> open_filters(const FiniteAlgebra& m, const std::vector<Element>& complement);
Partition filter_congruence(const FiniteAlgebra& m, const std::vector<Element>& complement, Element f);
bool open_filter_congruence_iso_check(const FiniteAlgebra& m, const std::vector<Element>& complement);

}  // namespace poma
