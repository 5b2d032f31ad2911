#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace poma {

using Element = std::uint32_t;

// Unchecked algebra description, as read from JSON.
struct AlgebraData {
  std::size_t size = 0;
  std::vector<std::vector<int>> leq;
  std::vector<long long> box;
  std::vector<long long> diamond;
  std::string name;
};

struct Violation {
  std::string axiom;
  std::vector<Element> witness;
};

struct ValidationReport {
  bool is_bounded_lattice = false;
  bool is_distributive = false;
  bool is_pma = false;
  bool is_pk4 = false;
  bool is_ps4 = false;
  std::vector<Violation> violations;
};

// A finite bounded distributive lattice with two unary operations.
// Immutable after construction; meet and join are tabulated.
class FiniteAlgebra {
 public:
  using value_type = Element;

  // Throws StructuralError on malformed data, InvalidAlgebra when the order
  // is not a bounded distributive lattice.
  static FiniteAlgebra from_data(const AlgebraData& data);
  static FiniteAlgebra from_order(std::size_t n, const std::vector<std::uint8_t>& leq,
                                  std::vector<Element> box, std::vector<Element> diamond,
                                  std::string name = {});
  // Trusted constructor: meet and join must describe a distributive lattice.
  static FiniteAlgebra from_tables(std::size_t n, std::vector<Element> meet,
                                   std::vector<Element> join, std::vector<Element> box,
                                   std::vector<Element> diamond, std::string name = {});

  std::size_t size() const { return n_; }
  bool leq(Element x, Element y) const { return leq_[x * n_ + y] != 0; }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  Element meet(Element x, Element y) const { return meet_[x * n_ + y]; }
  Element join(Element x, Element y) const { return join_[x * n_ + y]; }
  Element box(Element x) const { return box_[x]; }
  Element diamond(Element x) const { return diamond_[x]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  const std::string& name() const { return name_; }

  const std::vector<Element>& box_table() const { return box_; }
  const std::vector<Element>& diamond_table() const { return diamond_; }
  const std::vector<std::uint8_t>& leq_table() const { return leq_; }

  FiniteAlgebra with_name(std::string name) const;
  // Same lattice, new operators (tables are range-checked only).
  FiniteAlgebra with_operators(std::vector<Element> box, std::vector<Element> diamond) const;

  AlgebraData data() const;

  // Equality of tables, ignoring the name. Not isomorphism.
  bool same_tables(const FiniteAlgebra& other) const;

 private:
  FiniteAlgebra() = default;
  void finish_bounds();

  std::size_t n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<Element> box_;
  std::vector<Element> diamond_;
  Element bottom_ = 0;
  Element top_ = 0;
  std::string name_;
};

ValidationReport validate(const AlgebraData& data);
ValidationReport validate(const FiniteAlgebra& a);

// Fast checks without witnesses.
bool is_pma(const FiniteAlgebra& a);
bool is_pk4(const FiniteAlgebra& a);
bool is_ps4(const FiniteAlgebra& a);

bool is_trivial(const FiniteAlgebra& a);

// Elements covered by x (lower covers), in index order.
std::vector<Element> lower_covers(const FiniteAlgebra& a, Element x);

}  // namespace poma
