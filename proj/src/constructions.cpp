#include "poma/constructions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "poma/corpus.hpp"
#include "poma/errors.hpp"

namespace poma {

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  std::vector<Element> meet(n * n), join(n * n), box(n), diamond(n);
  auto idx = [nb](Element x, Element y) { return Element(x * nb + y); };
  for (Element x1 = 0; x1 < na; ++x1)
    for (Element y1 = 0; y1 < nb; ++y1) {
      const Element p = idx(x1, y1);
      box[p] = idx(a.box(x1), b.box(y1));
      diamond[p] = idx(a.diamond(x1), b.diamond(y1));
      for (Element x2 = 0; x2 < na; ++x2)
        for (Element y2 = 0; y2 < nb; ++y2) {
          const Element q = idx(x2, y2);
          meet[p * n + q] = idx(a.meet(x1, x2), b.meet(y1, y2));
          join[p * n + q] = idx(a.join(x1, x2), b.join(y1, y2));
        }
    }
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + "x" + b.name();
  return FiniteAlgebra::from_tables(n, std::move(meet), std::move(join), std::move(box), std::move(diamond),
                                    std::move(name));
}

namespace {

void check_elements(const FiniteAlgebra& a, const std::vector<Element>& xs) {
  for (Element x : xs)
    if (x >= a.size()) throw PreconditionError("element index out of range");
}

// Closes `in` under all operations. Flagged elements listed in `work` are
// still unprocessed; the other flagged ones must already be closed together.
void close_into(const FiniteAlgebra& a, std::vector<std::uint8_t>& in, std::vector<Element> work) {
  std::vector<std::uint8_t> pending(a.size(), 0);
  for (Element x : work) pending[x] = 1;
  std::vector<Element> members;
  for (Element x = 0; x < a.size(); ++x)
    if (in[x] && !pending[x]) members.push_back(x);
  auto add = [&](Element y) {
    if (!in[y]) {
      in[y] = 1;
      work.push_back(y);
    }
  };
  while (!work.empty()) {
    Element x = work.back();
    work.pop_back();
    members.push_back(x);
    add(a.box(x));
    add(a.diamond(x));
    for (std::size_t i = 0; i < members.size(); ++i) {
      add(a.meet(x, members[i]));
      add(a.join(x, members[i]));
    }
  }
}

}  // namespace

std::vector<Element> subuniverse_closure(const FiniteAlgebra& a, const std::vector<Element>& generators) {
  check_elements(a, generators);
  std::vector<std::uint8_t> in(a.size(), 0);
  std::vector<Element> work;
  for (Element g : generators)
    if (!in[g]) {
      in[g] = 1;
      work.push_back(g);
    }
  for (Element c : {a.bottom(), a.top()})
    if (!in[c]) {
      in[c] = 1;
      work.push_back(c);
    }
  close_into(a, in, std::move(work));
  std::vector<Element> out;
  for (Element x = 0; x < a.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<std::vector<Element>> subuniverses(const FiniteAlgebra& a, std::size_t budget) {
  const std::size_t n = a.size();
  if (n > 64) throw PreconditionError("subuniverses needs at most 64 elements");
  auto to_mask = [](const std::vector<std::uint8_t>& in) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < in.size(); ++i)
      if (in[i]) m |= std::uint64_t(1) << i;
    return m;
  };
  std::vector<std::uint8_t> base(n, 0);
  {
    auto b = subuniverse_closure(a, {});
    for (Element x : b) base[x] = 1;
  }
  std::set<std::uint64_t> seen{to_mask(base)};
  std::vector<std::vector<std::uint8_t>> frontier{base};
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint8_t>> next;
    for (const auto& s : frontier)
      for (Element x = 0; x < n; ++x) {
        if (s[x]) continue;
        auto t = s;
        t[x] = 1;
        close_into(a, t, {x});
        if (seen.insert(to_mask(t)).second) {
          if (seen.size() > budget)
            throw BudgetExceeded("subuniverses: more than " + std::to_string(budget));
          next.push_back(std::move(t));
        }
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<Element>> out;
  for (std::uint64_t m : seen) {
    std::vector<Element> s;
    for (Element x = 0; x < n; ++x)
      if ((m >> x) & 1u) s.push_back(x);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<FiniteAlgebra, Map> subalgebra_of(const FiniteAlgebra& a, const std::vector<Element>& sub) {
  check_elements(a, sub);
  const std::size_t k = sub.size();
  std::vector<std::int64_t> pos(a.size(), -1);
  for (std::size_t i = 0; i < k; ++i) pos[sub[i]] = std::int64_t(i);
  auto at = [&](Element x) -> Element {
    if (pos[x] < 0) throw PreconditionError("not a subuniverse");
    return Element(pos[x]);
  };
  std::vector<Element> meet(k * k), join(k * k), box(k), diamond(k);
  for (std::size_t i = 0; i < k; ++i) {
    box[i] = at(a.box(sub[i]));
    diamond[i] = at(a.diamond(sub[i]));
    for (std::size_t j = 0; j < k; ++j) {
      meet[i * k + j] = at(a.meet(sub[i], sub[j]));
      join[i * k + j] = at(a.join(sub[i], sub[j]));
    }
  }
  if (k == 0 || pos[a.bottom()] < 0 || pos[a.top()] < 0) throw PreconditionError("not a subuniverse");
  return {FiniteAlgebra::from_tables(k, std::move(meet), std::move(join), std::move(box), std::move(diamond)),
          Map(sub.begin(), sub.end())};
}

std::pair<FiniteAlgebra, Map> subalgebra_generated(const FiniteAlgebra& a, const std::vector<Element>& gens) {
  return subalgebra_of(a, subuniverse_closure(a, gens));
}

std::pair<FiniteAlgebra, Map> quotient(const FiniteAlgebra& a, const Partition& p) {
  if (p.size() != a.size() || !is_congruence(a, p)) throw PreconditionError("partition is not a congruence");
  const std::size_t k = p.block_count();
  std::vector<Element> rep(k);
  for (Element x = a.size(); x-- > 0;) rep[p.block(x)] = x;
  std::vector<Element> meet(k * k), join(k * k), box(k), diamond(k);
  for (std::size_t i = 0; i < k; ++i) {
    box[i] = p.block(a.box(rep[i]));
    diamond[i] = p.block(a.diamond(rep[i]));
    for (std::size_t j = 0; j < k; ++j) {
      meet[i * k + j] = p.block(a.meet(rep[i], rep[j]));
      join[i * k + j] = p.block(a.join(rep[i], rep[j]));
    }
  }
  Map proj(a.size());
  for (Element x = 0; x < a.size(); ++x) proj[x] = p.block(x);
  return {FiniteAlgebra::from_tables(k, std::move(meet), std::move(join), std::move(box), std::move(diamond)),
          std::move(proj)};
}

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const Map& f) {
  if (f.size() != a.size()) return false;
  for (Element y : f)
    if (y >= b.size()) return false;
  if (f[a.bottom()] != b.bottom() || f[a.top()] != b.top()) return false;
  for (Element x = 0; x < a.size(); ++x) {
    if (f[a.box(x)] != b.box(f[x]) || f[a.diamond(x)] != b.diamond(f[x])) return false;
    for (Element y = 0; y < a.size(); ++y)
      if (f[a.meet(x, y)] != b.meet(f[x], f[y]) || f[a.join(x, y)] != b.join(f[x], f[y])) return false;
  }
  return true;
}

namespace {

constexpr Element kUnset = ~Element(0);

class HomSearch {
 public:
  HomSearch(const FiniteAlgebra& a, const FiniteAlgebra& b, const HomQuery& q)
      : a_(a), b_(b), q_(q), f_(a.size(), kUnset), used_(b.size(), 0) {
    for (Element x = 0; x < a.size(); ++x)
      if (x != a.bottom() && lower_covers(a, x).size() == 1) branch_.push_back(x);
  }

  std::vector<Map> run() {
    if (a_.size() == 0 || b_.size() == 0) return {};
    std::vector<Element> work;
    bool ok = assign(a_.bottom(), b_.bottom(), work) && assign(a_.top(), b_.top(), work);
    for (auto [x, y] : q_.fixed) {
      if (x >= a_.size() || y >= b_.size()) throw PreconditionError("fixed pair out of range");
      ok = ok && assign(x, y, work);
    }
    if (ok && propagate(work)) dfs(0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  bool assign(Element x, Element y, std::vector<Element>& work) {
    if (f_[x] != kUnset) return f_[x] == y;
    if (q_.injective && used_[y]) return false;
    f_[x] = y;
    ++used_[y];
    trail_.push_back(x);
    work.push_back(x);
    return true;
  }

  bool propagate(std::vector<Element>& work) {
    while (!work.empty()) {
      Element x = work.back();
      work.pop_back();
      const Element fx = f_[x];
      if (!assign(a_.box(x), b_.box(fx), work) || !assign(a_.diamond(x), b_.diamond(fx), work)) return false;
      for (Element y = 0; y < a_.size(); ++y) {
        if (f_[y] == kUnset) continue;
        if (!assign(a_.meet(x, y), b_.meet(fx, f_[y]), work) || !assign(a_.join(x, y), b_.join(fx, f_[y]), work))
          return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Element x = trail_.back();
      trail_.pop_back();
      --used_[f_[x]];
      f_[x] = kUnset;
    }
  }

  bool done() const { return q_.limit != 0 && out_.size() >= q_.limit; }

  void dfs(std::size_t i) {
    if (++nodes_ > q_.budget) throw BudgetExceeded("homomorphism search exceeded its node budget");
    while (i < branch_.size() && f_[branch_[i]] != kUnset) ++i;
    if (i == branch_.size()) {
      out_.push_back(f_);
      return;
    }
    const Element x = branch_[i];
    for (Element y = 0; y < b_.size() && !done(); ++y) {
      const std::size_t mark = trail_.size();
      std::vector<Element> work;
      if (assign(x, y, work) && propagate(work)) dfs(i + 1);
      undo(mark);
    }
  }

  const FiniteAlgebra& a_;
  const FiniteAlgebra& b_;
  const HomQuery& q_;
  Map f_;
  std::vector<std::uint32_t> used_;
  std::vector<Element> trail_;
  std::vector<Element> branch_;
  std::vector<Map> out_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::vector<Map> find_homs(const FiniteAlgebra& a, const FiniteAlgebra& b, const HomQuery& q) {
  return HomSearch(a, b, q).run();
}

std::vector<Map> homs(const FiniteAlgebra& a, const FiniteAlgebra& b) { return find_homs(a, b, {}); }

std::vector<Map> embeddings(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  HomQuery q;
  q.injective = true;
  return find_homs(a, b, q);
}

// ------------------------------------------------------------ canonical form

std::uint64_t CanonicalForm::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint8_t c : code) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

// Isomorphism-invariant colouring; colour ids follow sorted signatures.
std::vector<std::uint32_t> refine_colours(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  std::vector<std::uint32_t> colour(n);
  {
    std::vector<std::vector<std::uint32_t>> sig(n);
    for (Element x = 0; x < n; ++x) {
      std::uint32_t below = 0, above = 0;
      for (Element y = 0; y < n; ++y) {
        below += a.leq(y, x);
        above += a.leq(x, y);
      }
      sig[x] = {below, above, a.box(x) == x, a.diamond(x) == x};
    }
    std::vector<std::vector<std::uint32_t>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Element x = 0; x < n; ++x)
      colour[x] = std::uint32_t(std::lower_bound(sorted.begin(), sorted.end(), sig[x]) - sorted.begin());
  }
  std::size_t count = 0;
  for (;;) {
    std::size_t current = std::set<std::uint32_t>(colour.begin(), colour.end()).size();
    if (current == count) break;
    count = current;
    std::vector<std::vector<std::uint32_t>> sig(n);
    std::vector<std::vector<std::uint32_t>> box_pre(n), dia_pre(n);
    for (Element x = 0; x < n; ++x) {
      box_pre[a.box(x)].push_back(colour[x]);
      dia_pre[a.diamond(x)].push_back(colour[x]);
    }
    for (Element x = 0; x < n; ++x) {
      auto& s = sig[x];
      s = {colour[x], colour[a.box(x)], colour[a.diamond(x)]};
      std::vector<std::uint32_t> below, above;
      for (Element y = 0; y < n; ++y) {
        if (y == x) continue;
        if (a.leq(y, x)) below.push_back(colour[y]);
        if (a.leq(x, y)) above.push_back(colour[y]);
      }
      // Separators keep the concatenated lists unambiguous.
      for (auto* part : {&below, &above, &box_pre[x], &dia_pre[x]}) {
        std::sort(part->begin(), part->end());
        s.push_back(std::uint32_t(part->size()));
        s.insert(s.end(), part->begin(), part->end());
      }
    }
    std::vector<std::vector<std::uint32_t>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Element x = 0; x < n; ++x)
      colour[x] = std::uint32_t(std::lower_bound(sorted.begin(), sorted.end(), sig[x]) - sorted.begin());
  }
  return colour;
}

class Canonizer {
 public:
  Canonizer(const FiniteAlgebra& a, std::size_t budget) : a_(a), budget_(budget) {
    const std::size_t n = a.size();
    colour_ = refine_colours(a);
    std::vector<Element> order(n);
    for (Element x = 0; x < n; ++x) order[x] = x;
    std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) { return colour_[x] < colour_[y]; });
    for (Element x : order) cell_.push_back(colour_[x]);
    placed_.assign(n, 0);
    perm_.reserve(n);
  }

  std::vector<Element> run() {
    dfs(0, false);
    return best_perm_;
  }

 private:
  std::uint8_t pair_code(Element pk, Element pi) const {
    std::uint8_t c = 0;
    c |= std::uint8_t(a_.leq(pi, pk)) << 0;
    c |= std::uint8_t(a_.leq(pk, pi)) << 1;
    c |= std::uint8_t(a_.box(pk) == pi) << 2;
    c |= std::uint8_t(a_.box(pi) == pk) << 3;
    c |= std::uint8_t(a_.diamond(pk) == pi) << 4;
    c |= std::uint8_t(a_.diamond(pi) == pk) << 5;
    return c;
  }

  std::vector<std::uint8_t> local_code(Element candidate) const {
    std::vector<std::uint8_t> out;
    out.reserve(perm_.size() + 1);
    for (Element p : perm_) out.push_back(pair_code(candidate, p));
    out.push_back(pair_code(candidate, candidate));
    return out;
  }

  // `better`: the current prefix is already strictly below the best code.
  void dfs(std::size_t k, bool better) {
    if (++nodes_ > budget_) throw BudgetExceeded("canonical form exceeded its node budget");
    const std::size_t n = a_.size();
    if (k == n) {
      if (best_perm_.empty() || better) {
        best_perm_ = perm_;
        best_code_ = code_;
      }
      return;
    }
    std::vector<Element> candidates;
    std::vector<std::uint8_t> minimal;
    for (Element x = 0; x < n; ++x) {
      if (placed_[x] || colour_[x] != cell_[k]) continue;
      auto lc = local_code(x);
      if (candidates.empty() || lc < minimal) {
        minimal = std::move(lc);
        candidates = {x};
      } else if (lc == minimal) {
        candidates.push_back(x);
      }
    }
    const std::size_t offset = code_.size();
    bool next_better = better;
    if (!best_perm_.empty() && !better) {
      auto begin = best_code_.begin() + std::ptrdiff_t(offset);
      auto cmp = std::lexicographical_compare_three_way(minimal.begin(), minimal.end(), begin,
                                                        begin + std::ptrdiff_t(minimal.size()));
      if (cmp > 0) return;
      if (cmp < 0) next_better = true;
    }
    code_.insert(code_.end(), minimal.begin(), minimal.end());
    for (Element x : candidates) {
      placed_[x] = 1;
      perm_.push_back(x);
      // After the first full leaf, later equal branches cannot improve.
      dfs(k + 1, next_better);
      perm_.pop_back();
      placed_[x] = 0;
      if (next_better && best_code_.size() == n * (n + 1) / 2 &&
          std::equal(code_.begin(), code_.end(), best_code_.begin()))
        next_better = false;
    }
    code_.resize(offset);
  }

  const FiniteAlgebra& a_;
  std::size_t budget_;
  std::vector<std::uint32_t> colour_;
  std::vector<std::uint32_t> cell_;
  std::vector<std::uint8_t> placed_;
  std::vector<Element> perm_;
  std::vector<std::uint8_t> code_;
  std::vector<Element> best_perm_;
  std::vector<std::uint8_t> best_code_;
  std::size_t nodes_ = 0;
};

std::vector<std::uint8_t> code_for(const FiniteAlgebra& a, const std::vector<Element>& perm) {
  std::vector<std::uint8_t> out;
  const std::size_t n = a.size();
  out.reserve(4 + n * (n + 1) / 2);
  for (int s = 0; s < 4; ++s) out.push_back(std::uint8_t((n >> (8 * s)) & 0xff));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      const Element pk = perm[k], pi = perm[i];
      std::uint8_t c = 0;
      c |= std::uint8_t(a.leq(pi, pk)) << 0;
      c |= std::uint8_t(a.leq(pk, pi)) << 1;
      c |= std::uint8_t(a.box(pk) == pi) << 2;
      c |= std::uint8_t(a.box(pi) == pk) << 3;
      c |= std::uint8_t(a.diamond(pk) == pi) << 4;
      c |= std::uint8_t(a.diamond(pi) == pk) << 5;
      out.push_back(c);
    }
  return out;
}

}  // namespace

std::vector<Element> canonical_labeling(const FiniteAlgebra& a, std::size_t budget) {
  if (a.size() == 0) return {};
  return Canonizer(a, budget).run();
}

CanonicalForm canonical_form(const FiniteAlgebra& a) { return {code_for(a, canonical_labeling(a))}; }

FiniteAlgebra canonical_algebra(const FiniteAlgebra& a) { return canonicalize(a).first; }

std::pair<FiniteAlgebra, CanonicalForm> canonicalize(const FiniteAlgebra& a) {
  const auto perm = canonical_labeling(a);
  const std::size_t n = a.size();
  std::vector<Element> inv(n);
  for (Element k = 0; k < n; ++k) inv[perm[k]] = k;
  std::vector<Element> meet(n * n), join(n * n), box(n), diamond(n);
  for (Element i = 0; i < n; ++i) {
    box[i] = inv[a.box(perm[i])];
    diamond[i] = inv[a.diamond(perm[i])];
    for (Element j = 0; j < n; ++j) {
      meet[i * n + j] = inv[a.meet(perm[i], perm[j])];
      join[i * n + j] = inv[a.join(perm[i], perm[j])];
    }
  }
  return {FiniteAlgebra::from_tables(n, std::move(meet), std::move(join), std::move(box), std::move(diamond),
                                     a.name()),
          CanonicalForm{code_for(a, perm)}};
}

bool is_iso(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<FiniteAlgebra> dedup_iso(std::vector<FiniteAlgebra> algebras) {
  std::vector<std::pair<CanonicalForm, std::size_t>> keyed;
  std::set<CanonicalForm> seen;
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    auto f = canonical_form(algebras[i]);
    if (seen.insert(f).second) keyed.emplace_back(std::move(f), i);
  }
  std::sort(keyed.begin(), keyed.end(), [&](const auto& x, const auto& y) {
    const std::size_t sx = algebras[x.second].size(), sy = algebras[y.second].size();
    if (sx != sy) return sx < sy;
    return x.first < y.first;
  });
  std::vector<FiniteAlgebra> out;
  out.reserve(keyed.size());
  for (auto& [f, i] : keyed) out.push_back(std::move(algebras[i]));
  return out;
}

bool contains_iso(const std::vector<FiniteAlgebra>& list, const FiniteAlgebra& a) {
  const auto f = canonical_form(a);
  for (const auto& b : list)
    if (b.size() == a.size() && canonical_form(b) == f) return true;
  return false;
}

// Con A is distributive and each cover congruence is join-prime, so the
// largest congruence avoiding it is unique; greedy extension finds it.
std::vector<Partition> meet_irreducible_congruences(const FiniteAlgebra& a) {
  std::set<Partition> out;
  if (a.size() < 2) return {};
  const auto covers = cover_congruences(a);
  for (const auto& p : covers) {
    Partition theta = Partition::identity(a.size());
    for (const auto& q : covers) {
      if (q.refines(theta)) continue;
      Partition joined = join_congruences(a, theta, q);
      if (!p.refines(joined)) theta = std::move(joined);
    }
    out.insert(std::move(theta));
  }
  return {out.begin(), out.end()};
}

std::vector<FiniteAlgebra> si_quotients(const FiniteAlgebra& a) {
  std::vector<FiniteAlgebra> qs;
  for (const auto& theta : meet_irreducible_congruences(a)) qs.push_back(quotient(a, theta).first);
  return dedup_iso(std::move(qs));
}

std::vector<FiniteAlgebra> hs_si(const FiniteAlgebra& a, std::size_t budget) {
  std::vector<FiniteAlgebra> subs;
  for (const auto& s : subuniverses(a, budget)) subs.push_back(subalgebra_of(a, s).first);
  subs = dedup_iso(std::move(subs));
  std::vector<FiniteAlgebra> all;
  for (const auto& b : subs)
    for (auto& q : si_quotients(b)) all.push_back(std::move(q));
  return dedup_iso(std::move(all));
}

bool is_retract(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.size() > b.size()) return false;
  for (const auto& f : embeddings(a, b)) {
    HomQuery q;
    q.limit = 1;
    for (Element x = 0; x < a.size(); ++x) q.fixed.emplace_back(f[x], x);
    if (!find_homs(b, a, q).empty()) return true;
  }
  return false;
}

// ------------------------------------------------------------------ duality

FrameAlgebra::FrameAlgebra(std::size_t worlds, std::vector<WorldSet> successors)
    : worlds_(worlds), succ_(std::move(successors)) {
  if (worlds > 64) throw PreconditionError("frames are limited to 64 worlds");
  if (succ_.size() != worlds) throw StructuralError("successor list has wrong length");
  full_ = worlds == 64 ? ~WorldSet(0) : (WorldSet(1) << worlds) - 1;
  for (auto s : succ_)
    if (s & ~full_) throw StructuralError("successor outside the frame");
}

WorldSet FrameAlgebra::box(WorldSet v) const {
  WorldSet out = 0;
  for (std::size_t x = 0; x < worlds_; ++x)
    if ((succ_[x] & ~v) == 0) out |= WorldSet(1) << x;
  return out;
}

WorldSet FrameAlgebra::diamond(WorldSet v) const {
  WorldSet out = 0;
  for (std::size_t x = 0; x < worlds_; ++x)
    if (succ_[x] & v) out |= WorldSet(1) << x;
  return out;
}

bool FrameAlgebra::reflexive() const {
  for (std::size_t x = 0; x < worlds_; ++x)
    if (!related(x, x)) return false;
  return true;
}

bool FrameAlgebra::transitive() const {
  for (std::size_t x = 0; x < worlds_; ++x)
    for (std::size_t y = 0; y < worlds_; ++y)
      if (related(x, y) && (succ_[y] & ~succ_[x])) return false;
  return true;
}

FiniteAlgebra FrameAlgebra::to_finite(std::string name) const {
  if (worlds_ > 10) throw PreconditionError("frame too large to tabulate");
  return powerset_algebra(
      unsigned(worlds_), [this](Element v) { return Element(box(v)); },
      [this](Element v) { return Element(diamond(v)); }, std::move(name));
}

PowersetModalAlgebra::PowersetModalAlgebra(const FrameAlgebra& frame) {
  if (frame.worlds() > 20) throw PreconditionError("frame too large to tabulate");
  const std::size_t n = std::size_t(1) << frame.worlds();
  box_.resize(n);
  diamond_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    box_[v] = Element(frame.box(v));
    diamond_[v] = Element(frame.diamond(v));
  }
}

std::vector<Element> PowersetModalAlgebra::complement_table() const {
  std::vector<Element> out(size());
  for (Element x = 0; x < size(); ++x) out[x] = top() & ~x;
  return out;
}

FiniteAlgebra complex_algebra(std::size_t worlds, const std::vector<std::pair<std::size_t, std::size_t>>& relation,
                              std::string name) {
  std::vector<WorldSet> succ(worlds, 0);
  for (auto [x, y] : relation) {
    if (x >= worlds || y >= worlds) throw StructuralError("relation pair out of range");
    succ[x] |= WorldSet(1) << y;
  }
  return FrameAlgebra(worlds, std::move(succ)).to_finite(std::move(name));
}

std::vector<std::vector<Element>> prime_filters(const FiniteAlgebra& a) {
  std::vector<std::vector<Element>> out;
  for (Element j = 0; j < a.size(); ++j) {
    if (j == a.bottom() || lower_covers(a, j).size() != 1) continue;
    std::vector<Element> up;
    for (Element x = 0; x < a.size(); ++x)
      if (a.leq(j, x)) up.push_back(x);
    out.push_back(std::move(up));
  }
  return out;
}

DualSpace dual_space(const FiniteAlgebra& a) {
  DualSpace s;
  s.points = prime_filters(a);
  const std::size_t m = s.points.size(), n = a.size();
  std::vector<std::vector<std::uint8_t>> member(m, std::vector<std::uint8_t>(n, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (Element x : s.points[i]) member[i][x] = 1;
  s.leq.assign(m * m, 0);
  s.R.assign(m * m, 0);
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g) {
      bool sub = true;
      for (Element x = 0; x < n && sub; ++x)
        if (member[f][x] && !member[g][x]) sub = false;
      s.leq[f * m + g] = sub;
      bool rel = true;
      for (Element x = 0; x < n && rel; ++x) {
        if (member[f][a.box(x)] && !member[g][x]) rel = false;
        if (member[g][x] && !member[f][a.diamond(x)]) rel = false;
      }
      s.R[f * m + g] = rel;
    }
  return s;
}

bool satisfies_kplus(const DualSpace& s) {
  const std::size_t m = s.size();
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t z = 0; z < m; ++z) {
      bool below = false, above = false;
      for (std::size_t y = 0; y < m; ++y) {
        if (!s.rel(x, y)) continue;
        below = below || s.le(y, z);
        above = above || s.le(z, y);
      }
      if (s.rel(x, z) != (below && above)) return false;
    }
  return true;
}

namespace {

constexpr std::size_t kMaxUpsets = 1u << 12;

std::vector<WorldSet> upsets_of(const DualSpace& s) {
  const std::size_t m = s.size();
  if (m > 64) throw PreconditionError("dual space too large");
  std::vector<WorldSet> above(m, 0);  // strictly above
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (x != y && s.le(x, y)) above[x] |= WorldSet(1) << y;
  // Points with larger up-sets are decided later; the strict-above set of a
  // point is always decided first when points are sorted by |above|.
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](auto x, auto y) { return std::popcount(above[x]) < std::popcount(above[y]); });
  std::vector<WorldSet> out;
  std::vector<WorldSet> stack{0};
  std::vector<std::size_t> depth{0};
  while (!stack.empty()) {
    WorldSet u = stack.back();
    std::size_t d = depth.back();
    stack.pop_back();
    depth.pop_back();
    if (d == m) {
      out.push_back(u);
      if (out.size() > kMaxUpsets) throw BudgetExceeded("too many upsets");
      continue;
    }
    const std::size_t x = order[d];
    stack.push_back(u);
    depth.push_back(d + 1);
    if ((above[x] & ~u) == 0) {
      stack.push_back(u | (WorldSet(1) << x));
      depth.push_back(d + 1);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::pair<FiniteAlgebra, std::vector<WorldSet>> upset_algebra(const DualSpace& s) {
  for (std::size_t x = 0; x < s.size(); ++x)
    if (!s.le(x, x)) throw PreconditionError("dual space order is not reflexive");
  if (!satisfies_kplus(s)) throw PreconditionError("relation fails R = (R;<=) & (R;>=)");
  auto ups = upsets_of(s);
  std::vector<WorldSet> succ(s.size(), 0);
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      if (s.rel(x, y)) succ[x] |= WorldSet(1) << y;
  FrameAlgebra frame(s.size(), succ);
  std::unordered_map<WorldSet, Element> index;
  for (std::size_t i = 0; i < ups.size(); ++i) index.emplace(ups[i], Element(i));
  auto at = [&](WorldSet v) {
    auto it = index.find(v);
    if (it == index.end()) throw PreconditionError("upsets are not closed under the modal operators");
    return it->second;
  };
  const std::size_t n = ups.size();
  std::vector<Element> meet(n * n), join(n * n), box(n), diamond(n);
  for (std::size_t i = 0; i < n; ++i) {
    box[i] = at(frame.box(ups[i]));
    diamond[i] = at(frame.diamond(ups[i]));
    for (std::size_t j = 0; j < n; ++j) {
      meet[i * n + j] = at(ups[i] & ups[j]);
      join[i * n + j] = at(ups[i] | ups[j]);
    }
  }
  return {FiniteAlgebra::from_tables(n, std::move(meet), std::move(join), std::move(box), std::move(diamond)),
          std::move(ups)};
}

namespace {

std::vector<WorldSet> kappa_masks(const FiniteAlgebra& a, const DualSpace& s) {
  std::vector<WorldSet> out(a.size(), 0);
  for (std::size_t f = 0; f < s.size(); ++f)
    for (Element x : s.points[f]) out[x] |= WorldSet(1) << f;
  return out;
}

}  // namespace

Map kappa(const FiniteAlgebra& a) {
  const auto s = dual_space(a);
  if (s.size() > 64) throw PreconditionError("too many prime filters");
  const auto masks = kappa_masks(a, s);
  const auto ups = upset_algebra(s).second;
  Map out(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    auto it = std::lower_bound(ups.begin(), ups.end(), masks[x]);
    if (it == ups.end() || *it != masks[x]) throw Error("kappa value is not an upset");
    out[x] = Element(it - ups.begin());
  }
  return out;
}

bool is_p_morphism(const DualSpace& x, const DualSpace& y, const std::vector<std::size_t>& f) {
  if (f.size() != x.size()) return false;
  for (auto v : f)
    if (v >= y.size()) return false;
  for (std::size_t p = 0; p < x.size(); ++p)
    for (std::size_t q = 0; q < x.size(); ++q) {
      if (x.le(p, q) && !y.le(f[p], f[q])) return false;
      if (x.rel(p, q) && !y.rel(f[p], f[q])) return false;
    }
  for (std::size_t p = 0; p < x.size(); ++p)
    for (std::size_t w = 0; w < y.size(); ++w) {
      if (!y.rel(f[p], w)) continue;
      bool low = false, high = false;
      for (std::size_t z = 0; z < x.size(); ++z) {
        if (!x.rel(p, z)) continue;
        low = low || y.le(f[z], w);
        high = high || y.le(w, f[z]);
      }
      if (!low || !high) return false;
    }
  return true;
}

std::vector<std::size_t> dual_map(const FiniteAlgebra& a, const FiniteAlgebra& b, const Map& h) {
  if (!is_homomorphism(a, b, h)) throw PreconditionError("dual_map needs a homomorphism");
  const auto pa = prime_filters(a);
  const auto pb = prime_filters(b);
  std::map<std::vector<Element>, std::size_t> index;
  for (std::size_t i = 0; i < pa.size(); ++i) index.emplace(pa[i], i);
  std::vector<std::size_t> out;
  for (const auto& g : pb) {
    std::vector<std::uint8_t> in(b.size(), 0);
    for (Element y : g) in[y] = 1;
    std::vector<Element> pre;
    for (Element x = 0; x < a.size(); ++x)
      if (in[h[x]]) pre.push_back(x);
    auto it = index.find(pre);
    if (it == index.end()) throw Error("preimage of a prime filter is not prime");
    out.push_back(it->second);
  }
  return out;
}

BooleanEnvelope boolean_envelope(const FiniteAlgebra& a) {
  auto s = dual_space(a);
  if (s.size() > 64) throw PreconditionError("too many prime filters for an envelope");
  std::vector<WorldSet> succ(s.size(), 0);
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      if (s.rel(x, y)) succ[x] |= WorldSet(1) << y;
  auto masks = kappa_masks(a, s);
  FrameAlgebra frame(s.size(), std::move(succ));
  return {std::move(s), std::move(frame), std::move(masks)};
}

std::pair<FiniteAlgebra, std::vector<Element>> envelope_algebra(const BooleanEnvelope& env) {
  FiniteAlgebra m = env.frame.to_finite("M");
  std::vector<Element> complement(m.size());
  const Element full = Element(m.size() - 1);
  for (Element x = 0; x < m.size(); ++x) complement[x] = full & ~x;
  return {std::move(m), std::move(complement)};
}

namespace {

void check_boolean(const FiniteAlgebra& m, const std::vector<Element>& complement) {
  if (complement.size() != m.size()) throw PreconditionError("complement table has wrong length");
  for (Element x = 0; x < m.size(); ++x)
    if (complement[x] >= m.size() || m.meet(x, complement[x]) != m.bottom() ||
        m.join(x, complement[x]) != m.top())
      throw PreconditionError("algebra is not Boolean-complemented");
}

}  // namespace

std::vector<Element> open_filters(const FiniteAlgebra& m, const std::vector<Element>& complement) {
  check_boolean(m, complement);
  std::vector<Element> out;
  for (Element f = 0; f < m.size(); ++f)
    if (m.leq(f, m.box(f))) out.push_back(f);
  return out;
}

Partition filter_congruence(const FiniteAlgebra& m, const std::vector<Element>& complement, Element f) {
  check_boolean(m, complement);
  if (f >= m.size()) throw PreconditionError("element index out of range");
  std::map<Element, std::uint32_t> keys;
  std::vector<std::uint32_t> labels(m.size());
  for (Element x = 0; x < m.size(); ++x) {
    auto [it, fresh] = keys.emplace(m.meet(x, f), std::uint32_t(keys.size()));
    labels[x] = it->second;
  }
  return Partition(labels);
}

bool open_filter_congruence_iso_check(const FiniteAlgebra& m, const std::vector<Element>& complement) {
  const auto gens = open_filters(m, complement);
  const auto con = con_lattice(m);
  if (gens.size() != con.size()) return false;
  std::vector<Partition> thetas;
  std::set<Partition> distinct;
  for (Element f : gens) {
    Partition t = filter_congruence(m, complement, f);
    if (!is_congruence(m, t)) return false;
    distinct.insert(t);
    thetas.push_back(std::move(t));
  }
  if (distinct != std::set<Partition>(con.begin(), con.end())) return false;
  // Larger filter (smaller generator) gives the larger congruence.
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (m.leq(gens[j], gens[i]) != thetas[i].refines(thetas[j])) return false;
  return true;
}

}  // namespace poma
