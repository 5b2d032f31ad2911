#include "poma/congruence.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "poma/constructions.hpp"
#include "poma/errors.hpp"

namespace poma {

Partition::Partition(const std::vector<std::uint32_t>& labels) : labels_(labels.size()) {
  std::map<std::uint32_t, std::uint32_t> rename;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = rename.emplace(labels[i], std::uint32_t(rename.size()));
    labels_[i] = it->second;
  }
  blocks_ = rename.size();
}

Partition Partition::identity(std::size_t n) {
  std::vector<std::uint32_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0u);
  return Partition(labels);
}

Partition Partition::total(std::size_t n) { return Partition(std::vector<std::uint32_t>(n, 0)); }

std::vector<std::vector<Element>> Partition::blocks() const {
  std::vector<std::vector<Element>> out(blocks_);
  for (Element x = 0; x < labels_.size(); ++x) out[labels_[x]].push_back(x);
  return out;
}

bool Partition::refines(const Partition& other) const {
  // Each of our blocks must sit inside one block of `other`.
  std::vector<std::int64_t> image(blocks_, -1);
  for (std::size_t x = 0; x < labels_.size(); ++x) {
    auto& slot = image[labels_[x]];
    if (slot < 0) slot = other.labels_[x];
    else if (slot != std::int64_t(other.labels_[x])) return false;
  }
  return true;
}

Partition Partition::intersect(const Partition& other) const {
  std::vector<std::uint32_t> labels(labels_.size());
  for (std::size_t x = 0; x < labels_.size(); ++x)
    labels[x] = labels_[x] * std::uint32_t(other.blocks_) + other.labels_[x];
  return Partition(labels);
}

std::vector<Pair> Partition::generating_pairs() const {
  std::vector<Pair> out;
  std::vector<std::int64_t> least(blocks_, -1);
  for (Element x = 0; x < labels_.size(); ++x) {
    auto& l = least[labels_[x]];
    if (l < 0) l = x;
    else out.emplace_back(Element(l), x);
  }
  return out;
}

std::string Partition::to_string() const {
  std::string out = "[";
  auto bs = blocks();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (i > 0) out += ",";
    out += "[";
    for (std::size_t j = 0; j < bs[i].size(); ++j) {
      if (j > 0) out += ",";
      out += std::to_string(bs[i][j]);
    }
    out += "]";
  }
  return out + "]";
}

namespace {

void check_pairs(const FiniteAlgebra& a, const std::vector<Pair>& pairs) {
  for (auto [x, y] : pairs)
    if (x >= a.size() || y >= a.size()) throw PreconditionError("element index out of range");
}

// Identity first, total last, otherwise by labels.
bool canonical_less(const Partition& x, const Partition& y) {
  if (x.block_count() != y.block_count()) return x.block_count() > y.block_count();
  return x.labels() < y.labels();
}

}  // namespace

Partition cg(const FiniteAlgebra& a, const std::vector<Pair>& pairs) {
  check_pairs(a, pairs);
  return cg_of(a, pairs, Signature::Full);
}

Partition cg_lattice(const FiniteAlgebra& a, const std::vector<Pair>& pairs) {
  check_pairs(a, pairs);
  return cg_of(a, pairs, Signature::Lattice);
}

Partition join_congruences(const FiniteAlgebra& a, const Partition& x, const Partition& y) {
  return cg_extend(a, &x, y.generating_pairs());
}

bool is_congruence(const FiniteAlgebra& a, const Partition& p) {
  if (p.size() != a.size()) return false;
  for (auto [x, y] : p.generating_pairs()) {
    if (!p.same(a.box(x), a.box(y)) || !p.same(a.diamond(x), a.diamond(y))) return false;
    for (Element c = 0; c < a.size(); ++c)
      if (!p.same(a.meet(x, c), a.meet(y, c)) || !p.same(a.join(x, c), a.join(y, c))) return false;
  }
  return true;
}

std::vector<Partition> con_lattice(const FiniteAlgebra& a, std::size_t budget) {
  const std::size_t n = a.size();
  std::set<Partition> seen;
  std::vector<Partition> principal;
  seen.insert(Partition::identity(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y) {
      Partition p = cg_of(a, {{x, y}});
      if (seen.insert(p).second) principal.push_back(std::move(p));
    }
  if (seen.size() > budget) throw BudgetExceeded("con_lattice: more than " + std::to_string(budget) + " congruences");
  std::vector<Partition> frontier = principal;
  while (!frontier.empty()) {
    std::vector<Partition> next;
    for (const auto& theta : frontier)
      for (const auto& p : principal) {
        if (p.refines(theta)) continue;
        Partition j = cg_extend(a, &theta, p.generating_pairs());
        if (seen.insert(j).second) {
          if (seen.size() > budget)
            throw BudgetExceeded("con_lattice: more than " + std::to_string(budget) + " congruences");
          next.push_back(std::move(j));
        }
      }
    frontier = std::move(next);
  }
  std::vector<Partition> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Partition> cover_congruences(const FiniteAlgebra& a) {
  std::set<Partition> seen;
  std::vector<Partition> out;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y : lower_covers(a, x)) {
      Partition p = cg_of(a, {{y, x}});
      if (seen.insert(p).second) out.push_back(std::move(p));
    }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_simple(const FiniteAlgebra& a) {
  if (a.size() < 2) return false;
  for (const auto& p : cover_congruences(a))
    if (!p.is_total()) return false;
  return true;
}

namespace {

// Every non-identity congruence of a lattice-based algebra contains the
// congruence generated by some covering pair, so these suffice.
std::optional<Partition> monolith_or_none(const FiniteAlgebra& a) {
  if (a.size() < 2) return std::nullopt;
  auto covers = cover_congruences(a);
  Partition m = covers.front();
  for (const auto& p : covers) m = m.intersect(p);
  if (m.is_identity()) return std::nullopt;
  return m;
}

}  // namespace

bool is_si(const FiniteAlgebra& a) { return monolith_or_none(a).has_value(); }

Partition monolith(const FiniteAlgebra& a) {
  auto m = monolith_or_none(a);
  if (!m) throw PreconditionError("monolith requested on an algebra that is not subdirectly irreducible");
  return *m;
}

bool is_fsi(const FiniteAlgebra& a) {
  if (a.size() < 2) return false;
  auto covers = cover_congruences(a);
  for (std::size_t i = 0; i < covers.size(); ++i)
    for (std::size_t j = i + 1; j < covers.size(); ++j)
      if (covers[i].intersect(covers[j]).is_identity()) return false;
  return true;
}

bool is_well_connected(const FiniteAlgebra& a) {
  if (!is_ps4(a)) throw PreconditionError("is_well_connected requires a positive S4-algebra");
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      if (a.join(a.box(x), a.box(y)) == a.top() && x != a.top() && y != a.top()) return false;
      if (a.meet(a.diamond(x), a.diamond(y)) == a.bottom() && x != a.bottom() && y != a.bottom())
        return false;
    }
  return true;
}

bool is_simple_lemma45(const FiniteAlgebra& a) {
  if (a.size() < 2) throw PreconditionError("is_simple_lemma45 requires a non-trivial algebra");
  if (!is_pk4(a)) throw PreconditionError("is_simple_lemma45 requires a positive K4-algebra");
  const Element zero = a.bottom(), one = a.top();
  if (a.size() == 2 && a.box(zero) == one && a.diamond(one) == zero) return true;
  for (Element x = 0; x < a.size(); ++x) {
    if (a.box(x) != (x == one ? one : zero)) return false;
    if (a.diamond(x) != (x == zero ? zero : one)) return false;
  }
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      if (x == zero || y == one || !a.less(x, y)) continue;
      bool found = false;
      for (Element c = 0; c < a.size() && !found; ++c) {
        if (c == zero || c == one) continue;
        if (a.leq(x, c) && a.join(y, c) == one) found = true;
        if (a.leq(c, y) && a.meet(x, c) == zero) found = true;
      }
      if (!found) return false;
    }
  return true;
}

Partition cg_dl(const FiniteAlgebra& a, Element x, Element y) {
  const Element lo = a.meet(x, y), hi = a.join(x, y);
  std::map<std::pair<Element, Element>, std::uint32_t> keys;
  std::vector<std::uint32_t> labels(a.size());
  for (Element c = 0; c < a.size(); ++c) {
    auto [it, fresh] = keys.emplace(std::make_pair(a.meet(c, lo), a.join(c, hi)), std::uint32_t(keys.size()));
    labels[c] = it->second;
  }
  return Partition(labels);
}

Partition cg_k4(const FiniteAlgebra& m, const std::vector<Element>& complement, Element a, Element b) {
  if (complement.size() != m.size()) throw PreconditionError("complement table has wrong length");
  for (Element x = 0; x < m.size(); ++x)
    if (complement[x] >= m.size() || m.meet(x, complement[x]) != m.bottom() ||
        m.join(x, complement[x]) != m.top())
      throw PreconditionError("cg_k4 requires a Boolean carrier");
  for (Element x = 0; x < m.size(); ++x)
    if (!m.leq(m.box(x), m.box(m.box(x))) ||
        m.diamond(x) != complement[m.box(complement[x])])
      throw PreconditionError("cg_k4 requires K4 operators");
  return cg_k4_of(m, complement, a, b);
}

CepResult has_cep(const FiniteAlgebra& a, std::size_t budget) {
  for (const auto& sub : subuniverses(a, budget)) {
    auto [b, embedding] = subalgebra_of(a, sub);
    for (const auto& theta : con_lattice(b, budget)) {
      std::vector<Pair> lifted;
      for (auto [x, y] : theta.generating_pairs()) lifted.emplace_back(embedding[x], embedding[y]);
      Partition up = cg_of(a, lifted);
      bool trace_ok = true;
      for (Element x = 0; x < b.size() && trace_ok; ++x)
        for (Element y = x + 1; y < b.size() && trace_ok; ++y)
          if (up.same(embedding[x], embedding[y]) != theta.same(x, y)) trace_ok = false;
      if (!trace_ok) return {false, embedding, theta};
    }
  }
  return {};
}

}  // namespace poma
