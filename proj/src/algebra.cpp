#include "poma/algebra.hpp"

#include <algorithm>

#include "poma/errors.hpp"

namespace poma {

namespace {

struct LatticeCheck {
  bool lattice = true;
  bool distributive = false;
  std::vector<Element> meet;
  std::vector<Element> join;
};

// Records the first witness of each axiom; stops early when `out` is null.
class ViolationSink {
 public:
  explicit ViolationSink(std::vector<Violation>* out) : out_(out) {}

  // Returns true when the caller should stop checking this axiom.
  bool fail(const char* axiom, std::vector<Element> witness) {
    ok_ = false;
    if (out_ != nullptr) out_->push_back({axiom, std::move(witness)});
    return true;
  }
  bool ok() const { return ok_; }
  bool stop_all() const { return !ok_ && out_ == nullptr; }

 private:
  std::vector<Violation>* out_;
  bool ok_ = true;
};

void check_shape(const AlgebraData& d) {
  if (d.size == 0) throw StructuralError("size must be positive");
  if (d.leq.size() != d.size) throw StructuralError("leq must have size rows");
  for (std::size_t i = 0; i < d.size; ++i) {
    if (d.leq[i].size() != d.size)
      throw StructuralError("leq row " + std::to_string(i) + " has wrong length");
    for (int v : d.leq[i])
      if (v != 0 && v != 1) throw StructuralError("leq entries must be 0 or 1");
  }
  auto check_table = [&](const std::vector<long long>& t, const char* what) {
    if (t.size() != d.size) throw StructuralError(std::string(what) + " table has wrong length");
    for (long long v : t)
      if (v < 0 || static_cast<std::size_t>(v) >= d.size)
        throw StructuralError(std::string(what) + " entry " + std::to_string(v) + " out of range");
  };
  check_table(d.box, "box");
  check_table(d.diamond, "diamond");
}

// Order axioms first, then meets and joins, then distributivity.
LatticeCheck check_lattice(std::size_t n, const std::vector<std::uint8_t>& leq,
                           std::vector<Violation>* out) {
  LatticeCheck r;
  ViolationSink sink(out);
  auto le = [&](std::size_t x, std::size_t y) { return leq[x * n + y] != 0; };

  for (std::size_t x = 0; x < n; ++x)
    if (!le(x, x) && sink.fail("order.reflexive", {Element(x)})) break;
  for (std::size_t x = 0; x < n && !sink.stop_all(); ++x) {
    bool stop = false;
    for (std::size_t y = 0; y < n && !stop; ++y)
      if (x != y && le(x, y) && le(y, x)) stop = sink.fail("order.antisymmetric", {Element(x), Element(y)});
    if (stop) break;
  }
  for (std::size_t x = 0; x < n && !sink.stop_all(); ++x) {
    bool stop = false;
    for (std::size_t y = 0; y < n && !stop; ++y) {
      if (!le(x, y)) continue;
      for (std::size_t z = 0; z < n && !stop; ++z)
        if (le(y, z) && !le(x, z))
          stop = sink.fail("order.transitive", {Element(x), Element(y), Element(z)});
    }
    if (stop) break;
  }
  if (!sink.ok()) {
    r.lattice = false;
    return r;
  }

  std::vector<std::size_t> below(n, 0), above(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (le(y, x)) ++below[x];
      if (le(x, y)) ++above[x];
    }
  r.meet.assign(n * n, 0);
  r.join.assign(n * n, 0);
  bool meet_failed = false, join_failed = false;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!meet_failed) {
        std::size_t best = n;
        for (std::size_t z = 0; z < n; ++z)
          if (le(z, x) && le(z, y) && (best == n || below[z] > below[best])) best = z;
        bool ok = best != n;
        for (std::size_t z = 0; ok && z < n; ++z)
          if (le(z, x) && le(z, y) && !le(z, best)) ok = false;
        if (ok) {
          r.meet[x * n + y] = Element(best);
        } else {
          meet_failed = true;
          sink.fail("lattice.meet", {Element(x), Element(y)});
        }
      }
      if (!join_failed) {
        std::size_t best = n;
        for (std::size_t z = 0; z < n; ++z)
          if (le(x, z) && le(y, z) && (best == n || above[z] > above[best])) best = z;
        bool ok = best != n;
        for (std::size_t z = 0; ok && z < n; ++z)
          if (le(x, z) && le(y, z) && !le(best, z)) ok = false;
        if (ok) {
          r.join[x * n + y] = Element(best);
        } else {
          join_failed = true;
          sink.fail("lattice.join", {Element(x), Element(y)});
        }
      }
      if (sink.stop_all()) break;
    }
    if (sink.stop_all()) break;
  }
  if (meet_failed || join_failed) {
    r.lattice = false;
    return r;
  }

  r.distributive = true;
  for (std::size_t x = 0; x < n && r.distributive; ++x)
    for (std::size_t y = 0; y < n && r.distributive; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Element lhs = r.meet[x * n + r.join[y * n + z]];
        Element rhs = r.join[r.meet[x * n + y] * n + r.meet[x * n + z]];
        if (lhs != rhs) {
          r.distributive = false;
          sink.fail("distributive", {Element(x), Element(y), Element(z)});
          break;
        }
      }
  return r;
}

bool check_pma_axioms(const FiniteAlgebra& a, std::vector<Violation>* out) {
  ViolationSink sink(out);
  const Element n = Element(a.size());
  if (a.box(a.top()) != a.top()) sink.fail("box.top", {a.top()});
  if (sink.stop_all()) return false;
  if (a.diamond(a.bottom()) != a.bottom()) sink.fail("diamond.bottom", {a.bottom()});
  if (sink.stop_all()) return false;

  auto pairwise = [&](const char* axiom, auto&& holds) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (!holds(x, y)) {
          sink.fail(axiom, {x, y});
          return;
        }
  };
  pairwise("box.meet", [&](Element x, Element y) {
    return a.box(a.meet(x, y)) == a.meet(a.box(x), a.box(y));
  });
  if (sink.stop_all()) return false;
  pairwise("diamond.join", [&](Element x, Element y) {
    return a.diamond(a.join(x, y)) == a.join(a.diamond(x), a.diamond(y));
  });
  if (sink.stop_all()) return false;
  pairwise("box_diamond.meet", [&](Element x, Element y) {
    return a.leq(a.meet(a.box(x), a.diamond(y)), a.diamond(a.meet(x, y)));
  });
  if (sink.stop_all()) return false;
  pairwise("box_diamond.join", [&](Element x, Element y) {
    return a.leq(a.box(a.join(x, y)), a.join(a.box(x), a.diamond(y)));
  });
  return sink.ok();
}

bool check_unary(const FiniteAlgebra& a, const char* axiom, std::vector<Violation>* out,
                 auto&& holds) {
  for (Element x = 0; x < a.size(); ++x)
    if (!holds(x)) {
      if (out != nullptr) out->push_back({axiom, {x}});
      return false;
    }
  return true;
}

bool check_k4_axioms(const FiniteAlgebra& a, std::vector<Violation>* out) {
  bool ok = check_unary(a, "k4.box", out, [&](Element x) { return a.leq(a.box(x), a.box(a.box(x))); });
  if (!ok && out == nullptr) return false;
  ok &= check_unary(a, "k4.diamond", out,
                    [&](Element x) { return a.leq(a.diamond(a.diamond(x)), a.diamond(x)); });
  return ok;
}

bool check_t_axioms(const FiniteAlgebra& a, std::vector<Violation>* out) {
  bool ok = check_unary(a, "s4.box", out, [&](Element x) { return a.leq(a.box(x), x); });
  if (!ok && out == nullptr) return false;
  ok &= check_unary(a, "s4.diamond", out, [&](Element x) { return a.leq(x, a.diamond(x)); });
  return ok;
}

std::vector<Element> to_table(const std::vector<long long>& t) {
  return std::vector<Element>(t.begin(), t.end());
}

}  // namespace

FiniteAlgebra FiniteAlgebra::from_data(const AlgebraData& data) {
  check_shape(data);
  std::vector<std::uint8_t> leq(data.size * data.size);
  for (std::size_t i = 0; i < data.size; ++i)
    for (std::size_t j = 0; j < data.size; ++j) leq[i * data.size + j] = std::uint8_t(data.leq[i][j]);
  return from_order(data.size, leq, to_table(data.box), to_table(data.diamond), data.name);
}

FiniteAlgebra FiniteAlgebra::from_order(std::size_t n, const std::vector<std::uint8_t>& leq,
                                        std::vector<Element> box, std::vector<Element> diamond,
                                        std::string name) {
  if (n == 0) throw StructuralError("size must be positive");
  if (leq.size() != n * n) throw StructuralError("leq must be size x size");
  if (box.size() != n || diamond.size() != n) throw StructuralError("operator tables have wrong length");
  for (std::size_t i = 0; i < n; ++i)
    if (box[i] >= n || diamond[i] >= n) throw StructuralError("operator entry out of range");
  std::vector<Violation> violations;
  LatticeCheck check = check_lattice(n, leq, &violations);
  if (!check.lattice || !check.distributive) {
    std::string message = "not a bounded distributive lattice";
    if (!violations.empty()) message += ": " + violations.front().axiom;
    throw InvalidAlgebra(message);
  }
  FiniteAlgebra a;
  a.n_ = n;
  a.leq_ = leq;
  for (auto& v : a.leq_) v = v ? 1 : 0;
  a.meet_ = std::move(check.meet);
  a.join_ = std::move(check.join);
  a.box_ = std::move(box);
  a.diamond_ = std::move(diamond);
  a.name_ = std::move(name);
  a.finish_bounds();
  return a;
}

FiniteAlgebra FiniteAlgebra::from_tables(std::size_t n, std::vector<Element> meet,
                                         std::vector<Element> join, std::vector<Element> box,
                                         std::vector<Element> diamond, std::string name) {
  if (n == 0 || meet.size() != n * n || join.size() != n * n || box.size() != n || diamond.size() != n)
    throw StructuralError("inconsistent table sizes");
  FiniteAlgebra a;
  a.n_ = n;
  a.leq_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) a.leq_[x * n + y] = meet[x * n + y] == x ? 1 : 0;
  a.meet_ = std::move(meet);
  a.join_ = std::move(join);
  a.box_ = std::move(box);
  a.diamond_ = std::move(diamond);
  a.name_ = std::move(name);
  a.finish_bounds();
  return a;
}

void FiniteAlgebra::finish_bounds() {
  bottom_ = 0;
  top_ = 0;
  for (Element x = 1; x < n_; ++x) {
    bottom_ = meet(bottom_, x);
    top_ = join(top_, x);
  }
}

FiniteAlgebra FiniteAlgebra::with_name(std::string name) const {
  FiniteAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

FiniteAlgebra FiniteAlgebra::with_operators(std::vector<Element> box,
                                            std::vector<Element> diamond) const {
  if (box.size() != n_ || diamond.size() != n_) throw StructuralError("operator tables have wrong length");
  for (std::size_t i = 0; i < n_; ++i)
    if (box[i] >= n_ || diamond[i] >= n_) throw StructuralError("operator entry out of range");
  FiniteAlgebra copy = *this;
  copy.box_ = std::move(box);
  copy.diamond_ = std::move(diamond);
  return copy;
}

AlgebraData FiniteAlgebra::data() const {
  AlgebraData d;
  d.size = n_;
  d.leq.assign(n_, std::vector<int>(n_, 0));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) d.leq[i][j] = leq_[i * n_ + j];
  d.box.assign(box_.begin(), box_.end());
  d.diamond.assign(diamond_.begin(), diamond_.end());
  d.name = name_;
  return d;
}

bool FiniteAlgebra::same_tables(const FiniteAlgebra& other) const {
  return n_ == other.n_ && leq_ == other.leq_ && box_ == other.box_ && diamond_ == other.diamond_;
}

ValidationReport validate(const AlgebraData& data) {
  check_shape(data);
  const std::size_t n = data.size;
  std::vector<std::uint8_t> leq(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i * n + j] = std::uint8_t(data.leq[i][j]);

  ValidationReport report;
  LatticeCheck check = check_lattice(n, leq, &report.violations);
  report.is_bounded_lattice = check.lattice;
  report.is_distributive = check.distributive;
  if (!check.lattice || !check.distributive) return report;

  FiniteAlgebra a = FiniteAlgebra::from_tables(n, std::move(check.meet), std::move(check.join),
                                               to_table(data.box), to_table(data.diamond), data.name);
  report.is_pma = check_pma_axioms(a, &report.violations);
  bool k4 = check_k4_axioms(a, &report.violations);
  bool t = check_t_axioms(a, &report.violations);
  report.is_pk4 = report.is_pma && k4;
  report.is_ps4 = report.is_pk4 && t;
  return report;
}

ValidationReport validate(const FiniteAlgebra& a) {
  ValidationReport report;
  report.is_bounded_lattice = true;
  report.is_distributive = true;
  report.is_pma = check_pma_axioms(a, &report.violations);
  bool k4 = check_k4_axioms(a, &report.violations);
  bool t = check_t_axioms(a, &report.violations);
  report.is_pk4 = report.is_pma && k4;
  report.is_ps4 = report.is_pk4 && t;
  return report;
}

bool is_pma(const FiniteAlgebra& a) { return check_pma_axioms(a, nullptr); }

bool is_pk4(const FiniteAlgebra& a) { return is_pma(a) && check_k4_axioms(a, nullptr); }

bool is_ps4(const FiniteAlgebra& a) { return is_pk4(a) && check_t_axioms(a, nullptr); }

bool is_trivial(const FiniteAlgebra& a) { return a.size() == 1; }

std::vector<Element> lower_covers(const FiniteAlgebra& a, Element x) {
  std::vector<Element> out;
  for (Element y = 0; y < a.size(); ++y) {
    if (!a.less(y, x)) continue;
    bool cover = true;
    for (Element z = 0; z < a.size() && cover; ++z)
      if (a.less(y, z) && a.less(z, x)) cover = false;
    if (cover) out.push_back(y);
  }
  return out;
}

}  // namespace poma
