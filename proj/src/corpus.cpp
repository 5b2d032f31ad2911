#include "poma/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "poma/constructions.hpp"
#include "poma/errors.hpp"

namespace poma {

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = char(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::uint8_t> order_from_covers(std::size_t n, const std::vector<Cover>& covers) {
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw StructuralError("cover index out of range");
    leq[lo * n + hi] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;
  return leq;
}

std::vector<Cover> chain_covers(std::size_t n) {
  std::vector<Cover> covers;
  for (Element i = 0; i + 1 < n; ++i) covers.push_back({i, i + 1});
  return covers;
}

const std::vector<Cover> kFigure1Covers = {
    {0, 1},   {1, 2},   {2, 3},   {2, 4},   {3, 5},   {3, 6},   {3, 7},   {4, 7},   {5, 8},
    {5, 9},   {6, 8},   {6, 10},  {7, 9},   {7, 10},  {7, 11},  {8, 12},  {8, 13},  {9, 13},
    {9, 14},  {10, 13}, {10, 15}, {11, 14}, {11, 15}, {12, 16}, {12, 17}, {13, 17}, {13, 18},
    {14, 18}, {14, 19}, {15, 18}, {15, 20}, {16, 21}, {17, 21}, {17, 22}, {18, 22}, {18, 23},
    {18, 24}, {19, 23}, {20, 24}, {21, 25}, {22, 25}, {22, 26}, {22, 27}, {23, 26}, {23, 28},
    {24, 27}, {24, 28}, {25, 29}, {25, 30}, {26, 29}, {26, 31}, {27, 30}, {27, 31}, {28, 31},
    {29, 32}, {30, 32}, {31, 32}, {31, 33}, {32, 34}, {33, 34}, {34, 35}, {35, 36}};
const std::vector<Element> kFigure1BoxFixed = {1, 4, 20};
const std::vector<Element> kFigure1DiamondFixed = {19, 33, 35};
constexpr Element kFigure1Generator = 16;

// Extreme operators: box is 0 off the top, diamond is 1 off the bottom.
FiniteAlgebra collapsing_boolean(unsigned atoms, std::string name) {
  const Element full = (Element(1) << atoms) - 1;
  return powerset_algebra(
      atoms, [full](Element x) { return x == full ? full : Element(0); },
      [full](Element x) { return x == 0 ? Element(0) : full; }, std::move(name));
}

FiniteAlgebra an_minus(unsigned n) {
  const Element full = (Element(1) << n) - 1;
  auto box = [full](Element x) -> Element {
    if (x == full) return full;
    if ((x & 1u) == 0) return 0;
    return 1;
  };
  auto diamond = [full, box](Element x) -> Element { return full & ~box(full & ~x); };
  return powerset_algebra(n, box, diamond, "AN_MINUS:" + std::to_string(n));
}

int require_parameter(std::optional<int> p, int lo, int hi, const std::string& name) {
  if (!p) throw NotFound(name + " needs a parameter");
  if (*p < lo || *p > hi)
    throw PreconditionError(name + " parameter must be in [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
  return *p;
}

}  // namespace

FiniteAlgebra from_covers(std::size_t n, const std::vector<Cover>& covers, std::vector<Element> box,
                          std::vector<Element> diamond, std::string name) {
  return FiniteAlgebra::from_order(n, order_from_covers(n, covers), std::move(box), std::move(diamond),
                                   std::move(name));
}

FiniteAlgebra from_fixed_points(std::size_t n, const std::vector<Cover>& covers,
                                std::vector<Element> box_fixed, std::vector<Element> diamond_fixed,
                                std::string name) {
  std::vector<Element> identity(n);
  for (Element i = 0; i < n; ++i) identity[i] = i;
  FiniteAlgebra lattice = from_covers(n, covers, identity, identity);
  box_fixed.push_back(lattice.bottom());
  box_fixed.push_back(lattice.top());
  diamond_fixed.push_back(lattice.bottom());
  diamond_fixed.push_back(lattice.top());
  std::vector<Element> box(n), diamond(n);
  for (Element x = 0; x < n; ++x) {
    Element b = lattice.bottom();
    for (Element f : box_fixed)
      if (lattice.leq(f, x)) b = lattice.join(b, f);
    Element d = lattice.top();
    for (Element f : diamond_fixed)
      if (lattice.leq(x, f)) d = lattice.meet(d, f);
    if (std::find(box_fixed.begin(), box_fixed.end(), b) == box_fixed.end() ||
        std::find(diamond_fixed.begin(), diamond_fixed.end(), d) == diamond_fixed.end())
      throw InvalidAlgebra("fixed points are not closed under the needed joins/meets");
    box[x] = b;
    diamond[x] = d;
  }
  return lattice.with_operators(std::move(box), std::move(diamond)).with_name(std::move(name));
}

FiniteAlgebra chain_algebra(std::size_t n, std::vector<Element> box_fixed,
                            std::vector<Element> diamond_fixed, std::string name) {
  return from_fixed_points(n, chain_covers(n), std::move(box_fixed), std::move(diamond_fixed),
                           std::move(name));
}

FiniteAlgebra powerset_algebra(unsigned atoms, const std::function<Element(Element)>& box,
                               const std::function<Element(Element)>& diamond, std::string name) {
  if (atoms > 10) throw PreconditionError("powerset_algebra: too many atoms");
  const std::size_t n = std::size_t(1) << atoms;
  std::vector<Element> meet(n * n), join(n * n), b(n), d(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      meet[x * n + y] = x & y;
      join[x * n + y] = x | y;
    }
    b[x] = box(x);
    d[x] = diamond(x);
    if (b[x] >= n || d[x] >= n) throw StructuralError("powerset operator out of range");
  }
  return FiniteAlgebra::from_tables(n, std::move(meet), std::move(join), std::move(b), std::move(d),
                                    std::move(name));
}

FiniteAlgebra trivial_algebra() {
  return FiniteAlgebra::from_tables(1, {0}, {0}, {0}, {0}, "TRIVIAL");
}

const std::vector<Cover>& figure1_covers() { return kFigure1Covers; }
Element figure1_generator() { return kFigure1Generator; }
Cover figure1_dropped_segment() { return {26, 30}; }

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {
      "TRIVIAL", "C2",  "B2",  "D3",  "C3a", "C3b", "D4",      "C4a",     "C4b",       "C5a",
      "C5b",     "C6a", "C6b", "A4",  "D5a", "D5b", "B4",      "EX44III", "EX44IV",    "EX46",
      "AN_MINUS", "AN_SIMPLE", "F1_PS4"};
  return names;
}

const std::vector<std::string>& figure2_names() {
  static const std::vector<std::string> names = {"C2",  "D3",  "C3a", "C3b", "D4", "C4a",
                                                 "C4b", "C5a", "C5b", "C6a", "C6b"};
  return names;
}

const std::vector<std::string>& figure3_names() {
  static const std::vector<std::string> names = {"A4", "D5a", "D5b", "B4"};
  return names;
}

FiniteAlgebra corpus(std::string_view name, std::optional<int> parameter) {
  const std::string key = upper(name);
  // Chains are indexed bottom to top.
  if (key == "TRIVIAL") return trivial_algebra();
  if (key == "C2") return chain_algebra(2, {}, {}, "C2");
  if (key == "B2") return from_covers(2, chain_covers(2), {1, 1}, {0, 0}, "B2");
  if (key == "D3") return chain_algebra(3, {}, {}, "D3");
  if (key == "C3A") return chain_algebra(3, {}, {1}, "C3a");
  if (key == "C3B") return chain_algebra(3, {1}, {}, "C3b");
  if (key == "D4") return chain_algebra(4, {1}, {2}, "D4");
  if (key == "C4A") return chain_algebra(4, {}, {2}, "C4a");
  if (key == "C4B") return chain_algebra(4, {1}, {}, "C4b");
  if (key == "C5A") return chain_algebra(5, {2}, {3}, "C5a");
  if (key == "C5B") return chain_algebra(5, {1}, {2}, "C5b");
  // 0 < w < {u, v} < t < 1 as 0 1 2 3 4 5.
  const std::vector<Cover> six = {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}};
  if (key == "C6A") return from_fixed_points(6, six, {3}, {4}, "C6a");
  if (key == "C6B") return from_fixed_points(6, six, {1}, {3}, "C6b");
  if (key == "A4") return from_fixed_points(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {}, {}, "A4");
  if (key == "D5A")
    return from_fixed_points(5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}}, {}, {}, "D5a");
  if (key == "D5B")
    return from_fixed_points(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}, {}, {}, "D5b");
  if (key == "B4") return chain_algebra(4, {}, {}, "B4");
  if (key == "EX44III") return from_covers(3, chain_covers(3), {0, 1, 2}, {0, 1, 2}, "EX44III");
  if (key == "EX44IV") return chain_algebra(5, {}, {}, "EX44IV");
  if (key == "EX46") {
    int k = require_parameter(parameter, 3, 6, "EX46");
    return collapsing_boolean(unsigned(k), "EX46:" + std::to_string(k));
  }
  if (key == "AN_SIMPLE") {
    int k = require_parameter(parameter, 2, 6, "AN_SIMPLE");
    return collapsing_boolean(unsigned(k), "AN_SIMPLE:" + std::to_string(k));
  }
  if (key == "AN_MINUS") return an_minus(unsigned(require_parameter(parameter, 1, 6, "AN_MINUS")));
  if (key == "F1_PS4")
    return from_fixed_points(37, kFigure1Covers, kFigure1BoxFixed, kFigure1DiamondFixed, "F1_PS4");
  throw NotFound("unknown corpus algebra: " + std::string(name));
}

FiniteAlgebra corpus_lookup(std::string_view spec) {
  std::string_view name = spec;
  std::optional<int> parameter;
  std::string_view digits;
  if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    name = spec.substr(0, colon);
    digits = spec.substr(colon + 1);
  } else if (auto paren = spec.find('('); paren != std::string_view::npos && spec.back() == ')') {
    name = spec.substr(0, paren);
    digits = spec.substr(paren + 1, spec.size() - paren - 2);
  }
  if (!digits.empty() || name.size() != spec.size()) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw NotFound("bad corpus parameter in " + std::string(spec));
    parameter = value;
  }
  return corpus(name, parameter);
}

std::string corpus_identify(const FiniteAlgebra& a) {
  static const auto forms = [] {
    const std::vector<std::string> names = {"TRIVIAL", "C2",  "B2",  "D3",  "C3a", "C3b", "D4",  "C4a", "C4b",
                                            "C5a",     "C5b", "C6a", "C6b", "A4",  "D5a", "D5b", "B4"};
    std::vector<std::pair<CanonicalForm, std::string>> out;
    for (const auto& n : names) {
      auto c = corpus(n);
      out.emplace_back(canonical_form(c), c.name());
    }
    return out;
  }();
  const auto f = canonical_form(a);
  for (const auto& [g, n] : forms)
    if (g == f) return n;
  return {};
}

}  // namespace poma
