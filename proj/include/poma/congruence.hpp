#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poma/algebra.hpp"

namespace poma {

using Pair = std::pair<Element, Element>;

// Partition of 0..n-1. Block ids are assigned in order of least element, so
// equal partitions have equal label vectors.
class Partition {
 public:
  Partition() = default;
  explicit Partition(const std::vector<std::uint32_t>& labels);

  static Partition identity(std::size_t n);
  static Partition total(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  std::size_t block_count() const { return blocks_; }
  std::uint32_t block(Element x) const { return labels_[x]; }
  bool same(Element x, Element y) const { return labels_[x] == labels_[y]; }
  const std::vector<std::uint32_t>& labels() const { return labels_; }

  std::vector<std::vector<Element>> blocks() const;
  bool is_identity() const { return blocks_ == labels_.size(); }
  bool is_total() const { return blocks_ <= 1; }
  // this is contained in other (as a set of pairs).
  bool refines(const Partition& other) const;
  Partition intersect(const Partition& other) const;
  // (least element of block, x) for every non-least x.
  std::vector<Pair> generating_pairs() const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<std::uint32_t> labels_;
  std::size_t blocks_ = 0;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x < y) std::swap(x, y);
    parent_[x] = y;
    return true;
  }
  Partition partition() {
    std::vector<std::uint32_t> labels(parent_.size());
    for (std::uint32_t i = 0; i < parent_.size(); ++i) labels[i] = find(i);
    return Partition(labels);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

enum class Signature { Full, Lattice };

// Least congruence containing `base` (assumed a congruence) and `pairs`.
// Works for any algebra exposing size/meet/join/box/diamond.
template <class A>
Partition cg_extend(const A& a, const Partition* base, std::vector<Pair> work,
                    Signature sig = Signature::Full) {
  const std::size_t n = a.size();
  UnionFind uf(n);
  if (base != nullptr)
    for (auto [lo, x] : base->generating_pairs()) uf.unite(lo, x);
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (!uf.unite(x, y)) continue;
    if (sig == Signature::Full) {
      work.emplace_back(a.box(x), a.box(y));
      work.emplace_back(a.diamond(x), a.diamond(y));
    }
    for (Element c = 0; c < n; ++c) {
      work.emplace_back(a.meet(x, c), a.meet(y, c));
      work.emplace_back(a.join(x, c), a.join(y, c));
    }
  }
  return uf.partition();
}

template <class A>
Partition cg_of(const A& a, const std::vector<Pair>& pairs, Signature sig = Signature::Full) {
  return cg_extend(a, nullptr, pairs, sig);
}

Partition cg(const FiniteAlgebra& a, const std::vector<Pair>& pairs);
Partition cg_lattice(const FiniteAlgebra& a, const std::vector<Pair>& pairs);
Partition join_congruences(const FiniteAlgebra& a, const Partition& x, const Partition& y);

bool is_congruence(const FiniteAlgebra& a, const Partition& p);

constexpr std::size_t kDefaultConLatticeBudget = 1u << 16;

// All congruences, identity first and total last.
std::vector<Partition> con_lattice(const FiniteAlgebra& a, std::size_t budget = kDefaultConLatticeBudget);

// Distinct principal congruences generated by covering pairs.
std::vector<Partition> cover_congruences(const FiniteAlgebra& a);

bool is_simple(const FiniteAlgebra& a);
bool is_si(const FiniteAlgebra& a);
bool is_fsi(const FiniteAlgebra& a);
Partition monolith(const FiniteAlgebra& a);
bool is_well_connected(const FiniteAlgebra& a);
bool is_simple_lemma45(const FiniteAlgebra& a);

Partition cg_dl(const FiniteAlgebra& a, Element x, Element y);

// Boolean algebra with K4 operators given by a complement table.
template <class M>
Partition cg_k4_of(const M& m, const std::vector<Element>& complement, Element a, Element b) {
  auto iff = [&](Element x, Element y) {
    return m.meet(m.join(complement[x], y), m.join(complement[y], x));
  };
  const Element e = iff(a, b);
  const Element t = m.meet(e, m.box(e));
  std::vector<std::uint32_t> labels(m.size());
  std::vector<Element> reps;
  for (Element c = 0; c < m.size(); ++c) {
    std::uint32_t label = std::uint32_t(reps.size());
    for (std::uint32_t r = 0; r < reps.size(); ++r) {
      const Element bi = iff(c, reps[r]);
      if (m.meet(t, bi) == t) {
        label = r;
        break;
      }
    }
    if (label == reps.size()) reps.push_back(c);
    labels[c] = label;
  }
  return Partition(labels);
}

// Checks that `complement` is a Boolean complement and the operators are K4.
Partition cg_k4(const FiniteAlgebra& m, const std::vector<Element>& complement, Element a, Element b);

struct CepResult {
  bool holds = true;
  // Failing subuniverse (parent indices, ascending) and a congruence of the
  // subalgebra on positions 0..k-1 with no extension to the whole algebra.
  std::vector<Element> subuniverse;
  std::optional<Partition> congruence;
};

CepResult has_cep(const FiniteAlgebra& a, std::size_t budget = kDefaultConLatticeBudget);

}  // namespace poma
