#include "poma/enumerate.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "poma/congruence.hpp"
#include "poma/constructions.hpp"
#include "poma/errors.hpp"
#include "poma/io.hpp"

namespace poma {

std::string kind_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::PMA: return "PMA";
    case AlgebraKind::PK4: return "PK4";
    case AlgebraKind::PS4: return "PS4";
  }
  return "PMA";
}

AlgebraKind parse_kind(std::string_view name) {
  std::string up(name);
  for (char& c : up) c = char(std::toupper(static_cast<unsigned char>(c)));
  if (up == "PMA") return AlgebraKind::PMA;
  if (up == "PK4") return AlgebraKind::PK4;
  if (up == "PS4") return AlgebraKind::PS4;
  throw PreconditionError("unknown algebra kind: " + std::string(name));
}

bool satisfies_kind(const FiniteAlgebra& a, AlgebraKind k) {
  switch (k) {
    case AlgebraKind::PMA: return is_pma(a);
    case AlgebraKind::PK4: return is_pk4(a);
    case AlgebraKind::PS4: return is_ps4(a);
  }
  return false;
}

namespace {

using Mask = std::uint32_t;

std::vector<Mask> downsets(const Poset& p) {
  if (p.size > 20) throw PreconditionError("poset too large");
  std::vector<Mask> below(p.size, 0);
  for (std::size_t x = 0; x < p.size; ++x)
    for (std::size_t y = 0; y < p.size; ++y)
      if (p.le(y, x)) below[x] |= Mask(1) << y;
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask(1) << p.size); ++m) {
    bool ok = true;
    for (std::size_t x = 0; x < p.size && ok; ++x)
      if (((m >> x) & 1u) && (below[x] & ~m)) ok = false;
    if (ok) out.push_back(m);
  }
  return out;
}

Poset extend(const Poset& p, Mask below) {
  Poset q;
  q.size = p.size + 1;
  q.leq.assign(q.size * q.size, 0);
  for (std::size_t x = 0; x < p.size; ++x)
    for (std::size_t y = 0; y < p.size; ++y) q.leq[x * q.size + y] = p.leq[x * p.size + y];
  for (std::size_t y = 0; y < p.size; ++y)
    if ((below >> y) & 1u) q.leq[y * q.size + p.size] = 1;
  q.leq[p.size * q.size + p.size] = 1;
  return q;
}

// Posets grown one maximal point at a time. Every poset of size k arises by
// adding a maximal point to one of size k-1.
std::vector<std::vector<Poset>> grow_posets(std::size_t max_points, std::optional<std::size_t> max_downsets,
                                            std::size_t budget) {
  std::vector<std::vector<Poset>> levels(1, std::vector<Poset>{Poset{}});
  std::size_t work = 0;
  for (std::size_t k = 1; k <= max_points; ++k) {
    std::map<CanonicalForm, Poset> seen;
    for (const auto& p : levels.back())
      for (Mask d : downsets(p)) {
        if (++work > budget) throw BudgetExceeded("poset enumeration exceeded its budget");
        Poset q = extend(p, d);
        FiniteAlgebra lat = downset_lattice(q);
        if (max_downsets && lat.size() > *max_downsets) continue;
        seen.emplace(canonical_form(lat), std::move(q));
      }
    if (seen.empty()) break;
    std::vector<Poset> level;
    for (auto& [f, q] : seen) level.push_back(std::move(q));
    levels.push_back(std::move(level));
  }
  return levels;
}

}  // namespace

FiniteAlgebra downset_lattice(const Poset& p) {
  auto ds = downsets(p);
  const std::size_t n = ds.size();
  std::map<Mask, Element> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(ds[i], Element(i));
  std::vector<Element> meet(n * n), join(n * n), id(n);
  for (std::size_t i = 0; i < n; ++i) {
    id[i] = Element(i);
    for (std::size_t j = 0; j < n; ++j) {
      meet[i * n + j] = index.at(ds[i] & ds[j]);
      join[i * n + j] = index.at(ds[i] | ds[j]);
    }
  }
  return FiniteAlgebra::from_tables(n, std::move(meet), std::move(join), id, id);
}

std::vector<Poset> enum_posets(std::size_t k, std::size_t budget) {
  auto levels = grow_posets(k, std::nullopt, budget);
  if (levels.size() <= k) return {};
  return levels[k];
}

std::vector<FiniteAlgebra> enum_bdl(std::size_t max_size, std::size_t budget) {
  if (max_size < 1) return {};
  auto levels = grow_posets(max_size - 1, max_size, budget);
  std::vector<FiniteAlgebra> out;
  for (const auto& level : levels)
    for (const auto& p : level) out.push_back(canonical_algebra(downset_lattice(p)));
  return dedup_iso(std::move(out));
}

namespace {

std::vector<Element> upper_covers(const FiniteAlgebra& a, Element x) {
  std::vector<Element> out;
  for (Element y = 0; y < a.size(); ++y) {
    if (!a.less(x, y)) continue;
    bool cover = true;
    for (Element z = 0; z < a.size() && cover; ++z)
      if (a.less(x, z) && a.less(z, y)) cover = false;
    if (cover) out.push_back(y);
  }
  return out;
}

// Monotone maps from `points` (a subposet of L) into L with values allowed
// by `allowed(point, value)`.
void monotone_maps(const FiniteAlgebra& l, const std::vector<Element>& points,
                   const std::function<bool(Element, Element)>& allowed,
                   const std::function<void(const std::vector<Element>&)>& emit) {
  std::vector<Element> values(points.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == points.size()) {
      emit(values);
      return;
    }
    for (Element v = 0; v < l.size(); ++v) {
      if (!allowed(points[i], v)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (l.leq(points[j], points[i]) && !l.leq(values[j], v)) ok = false;
        if (l.leq(points[i], points[j]) && !l.leq(v, values[j])) ok = false;
      }
      if (!ok) continue;
      values[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

// Operators preserving top and meets are fixed by their values on
// meet-irreducibles, which are meet-prime in a distributive lattice.
std::vector<std::vector<Element>> box_candidates(const FiniteAlgebra& l, AlgebraKind kind) {
  std::vector<Element> mi;
  for (Element x = 0; x < l.size(); ++x)
    if (x != l.top() && upper_covers(l, x).size() == 1) mi.push_back(x);
  std::vector<std::vector<Element>> out;
  auto allowed = [&](Element m, Element v) { return kind != AlgebraKind::PS4 || l.leq(v, m); };
  monotone_maps(l, mi, allowed, [&](const std::vector<Element>& vals) {
    std::vector<Element> box(l.size(), l.top());
    for (Element x = 0; x < l.size(); ++x)
      for (std::size_t i = 0; i < mi.size(); ++i)
        if (l.leq(x, mi[i])) box[x] = l.meet(box[x], vals[i]);
    for (Element x = 0; x < l.size(); ++x) {
      if (kind == AlgebraKind::PS4 && (!l.leq(box[x], x) || box[box[x]] != box[x])) return;
      if (kind == AlgebraKind::PK4 && !l.leq(box[x], box[box[x]])) return;
    }
    out.push_back(std::move(box));
  });
  return out;
}

std::vector<std::vector<Element>> diamond_candidates(const FiniteAlgebra& l, AlgebraKind kind) {
  std::vector<Element> ji;
  for (Element x = 0; x < l.size(); ++x)
    if (x != l.bottom() && lower_covers(l, x).size() == 1) ji.push_back(x);
  std::vector<std::vector<Element>> out;
  auto allowed = [&](Element j, Element v) { return kind != AlgebraKind::PS4 || l.leq(j, v); };
  monotone_maps(l, ji, allowed, [&](const std::vector<Element>& vals) {
    std::vector<Element> dia(l.size(), l.bottom());
    for (Element x = 0; x < l.size(); ++x)
      for (std::size_t i = 0; i < ji.size(); ++i)
        if (l.leq(ji[i], x)) dia[x] = l.join(dia[x], vals[i]);
    for (Element x = 0; x < l.size(); ++x) {
      if (kind == AlgebraKind::PS4 && (!l.leq(x, dia[x]) || dia[dia[x]] != dia[x])) return;
      if (kind == AlgebraKind::PK4 && !l.leq(dia[dia[x]], dia[x])) return;
    }
    out.push_back(std::move(dia));
  });
  return out;
}

bool mixed_axioms(const FiniteAlgebra& l, const std::vector<Element>& box, const std::vector<Element>& dia) {
  const std::size_t n = l.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!l.leq(l.meet(box[a], dia[b]), dia[l.meet(a, b)])) return false;
      if (!l.leq(box[l.join(a, b)], l.join(box[a], dia[b]))) return false;
    }
  return true;
}

}  // namespace

bool passes_filters(const FiniteAlgebra& a, const EnumerationTask& task) {
  if (a.size() < task.min_size || a.size() > task.max_size) return false;
  if (task.si_only && !is_si(a)) return false;
  if (task.fsi_only && !is_fsi(a)) return false;
  if (!task.equations.empty() && !holds_all(a, task.equations)) return false;
  return true;
}

namespace {

std::vector<FiniteAlgebra> enumerate_unfiltered(std::size_t min_size, std::size_t max_size, AlgebraKind kind,
                                                std::size_t budget) {
  std::vector<std::pair<CanonicalForm, FiniteAlgebra>> all;
  std::size_t pairs = 0;
  for (const auto& l : enum_bdl(max_size, budget)) {
    if (l.size() < min_size) continue;
    auto boxes = box_candidates(l, kind);
    auto dias = diamond_candidates(l, kind);
    std::map<CanonicalForm, FiniteAlgebra> found;
    for (const auto& b : boxes)
      for (const auto& d : dias) {
        if (++pairs > budget) throw BudgetExceeded("enumeration exceeded its budget of operator pairs");
        if (!mixed_axioms(l, b, d)) continue;
        auto [alg, form] = canonicalize(l.with_operators(b, d));
        found.emplace(std::move(form), std::move(alg));
      }
    for (auto& [f, a] : found) all.emplace_back(f, std::move(a));
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    if (x.second.size() != y.second.size()) return x.second.size() < y.second.size();
    return x.first < y.first;
  });
  std::vector<FiniteAlgebra> out;
  std::size_t current = 0, index = 0;
  for (auto& [f, a] : all) {
    if (a.size() != current) {
      current = a.size();
      index = 0;
    }
    out.push_back(a.with_name(kind_name(kind) + ":" + std::to_string(current) + ":" + std::to_string(index++)));
  }
  return out;
}

}  // namespace

std::vector<FiniteAlgebra> enum_algebras(const EnumerationTask& task) {
  if (task.max_size < 1) throw PreconditionError("max_size must be at least 1");
  std::vector<FiniteAlgebra> out;
  for (auto& a : enumerate_unfiltered(task.min_size, task.max_size, task.kind, task.budget))
    if (passes_filters(a, task)) out.push_back(std::move(a));
  return out;
}

std::vector<FiniteAlgebra> enum_algebras_cached(const EnumerationTask& task, const std::string& dir, bool resume) {
  namespace fs = std::filesystem;
  if (task.max_size < 1) throw PreconditionError("max_size must be at least 1");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw PreconditionError("cache directory not writable: " + dir);
  std::vector<FiniteAlgebra> out;
  for (std::size_t size = std::max<std::size_t>(task.min_size, 1); size <= task.max_size; ++size) {
    const fs::path file = fs::path(dir) / (kind_name(task.kind) + "-" + std::to_string(size) + ".jsonl");
    std::vector<FiniteAlgebra> level;
    if (resume && fs::exists(file)) {
      std::ifstream in(file);
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) level.push_back(algebra_from_json(line));
    } else {
      level = enumerate_unfiltered(size, size, task.kind, task.budget);
      const fs::path tmp = file.string() + ".tmp";
      {
        std::ofstream os(tmp);
        if (!os) throw PreconditionError("cannot write cache file " + tmp.string());
        for (const auto& a : level) os << to_json(a) << '\n';
      }
      fs::rename(tmp, file);
    }
    for (auto& a : level)
      if (passes_filters(a, task)) out.push_back(std::move(a));
  }
  return out;
}

// ------------------------------------------------------------ naive oracle

std::vector<std::uint32_t> naive_canonical_code(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  std::vector<Element> perm(n);  // position -> element
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<std::uint32_t> best;
  std::vector<Element> inv(n);
  do {
    for (Element k = 0; k < n; ++k) inv[perm[k]] = k;
    std::vector<std::uint32_t> code;
    code.reserve(n * n + 2 * n);
    for (Element i = 0; i < n; ++i)
      for (Element j = 0; j < n; ++j) code.push_back(a.leq(perm[i], perm[j]));
    for (Element i = 0; i < n; ++i) code.push_back(inv[a.box(perm[i])]);
    for (Element i = 0; i < n; ++i) code.push_back(inv[a.diamond(perm[i])]);
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<FiniteAlgebra> naive_bdl(std::size_t max_size) {
  std::map<std::vector<std::uint32_t>, FiniteAlgebra> found;
  for (std::size_t n = 1; n <= max_size; ++n) {
    // Labels respect the order: i <= j only if i <= j numerically; 0 and
    // n-1 are the bounds.
    std::vector<std::pair<std::size_t, std::size_t>> free_pairs;
    for (std::size_t i = 1; i + 1 < n; ++i)
      for (std::size_t j = i + 1; j + 1 < n; ++j) free_pairs.emplace_back(i, j);
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << free_pairs.size()); ++bits) {
      std::vector<std::vector<int>> leq(n, std::vector<int>(n, 0));
      for (std::size_t i = 0; i < n; ++i) {
        leq[i][i] = 1;
        leq[0][i] = 1;
        leq[i][n - 1] = 1;
      }
      for (std::size_t p = 0; p < free_pairs.size(); ++p)
        if ((bits >> p) & 1u) leq[free_pairs[p].first][free_pairs[p].second] = 1;
      bool transitive = true;
      for (std::size_t i = 0; i < n && transitive; ++i)
        for (std::size_t j = 0; j < n && transitive; ++j)
          for (std::size_t k = 0; k < n && transitive; ++k)
            if (leq[i][j] && leq[j][k] && !leq[i][k]) transitive = false;
      if (!transitive) continue;
      AlgebraData d;
      d.size = n;
      d.leq = leq;
      for (std::size_t i = 0; i < n; ++i) {
        d.box.push_back(static_cast<long long>(i));
        d.diamond.push_back(static_cast<long long>(i));
      }
      auto r = validate(d);
      if (!r.is_bounded_lattice || !r.is_distributive) continue;
      FiniteAlgebra a = FiniteAlgebra::from_data(d);
      found.emplace(naive_canonical_code(a), a);
    }
  }
  std::vector<FiniteAlgebra> out;
  for (auto& [c, a] : found) out.push_back(a);
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return out;
}

std::vector<FiniteAlgebra> naive_algebras(std::size_t max_size, AlgebraKind kind) {
  std::map<std::vector<std::uint32_t>, FiniteAlgebra> found;
  for (const auto& l : naive_bdl(max_size)) {
    const std::size_t n = l.size();
    std::vector<std::vector<Element>> boxes, dias;
    std::vector<Element> t(n, 0);
    // Odometer over all tables.
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == n) {
        bool box_ok = t[l.top()] == l.top(), dia_ok = t[l.bottom()] == l.bottom();
        for (Element x = 0; x < n && (box_ok || dia_ok); ++x)
          for (Element y = 0; y < n; ++y) {
            if (t[l.meet(x, y)] != l.meet(t[x], t[y])) box_ok = false;
            if (t[l.join(x, y)] != l.join(t[x], t[y])) dia_ok = false;
          }
        if (box_ok) boxes.push_back(t);
        if (dia_ok) dias.push_back(t);
        return;
      }
      for (Element v = 0; v < n; ++v) {
        t[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    for (const auto& b : boxes)
      for (const auto& d : dias) {
        FiniteAlgebra a = l.with_operators(b, d);
        if (!satisfies_kind(a, kind)) continue;
        found.emplace(naive_canonical_code(a), a);
      }
  }
  std::vector<FiniteAlgebra> out;
  for (auto& [c, a] : found) out.push_back(a);
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return out;
}

}  // namespace poma
