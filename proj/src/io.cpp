#include "poma/io.hpp"

#include <cstdio>

#include "json.hpp"
#include "poma/errors.hpp"

namespace poma {

using json = nlohmann::ordered_json;

namespace {

long long as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw StructuralError(std::string(what) + " must be an integer");
  return v.get<long long>();
}

}  // namespace

AlgebraData algebra_data_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StructuralError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw StructuralError("algebra JSON must be an object");
  for (const char* key : {"size", "leq", "box", "diamond"})
    if (!j.contains(key)) throw StructuralError(std::string("missing key \"") + key + "\"");
  AlgebraData d;
  const long long n = as_int(j["size"], "size");
  if (n < 1) throw StructuralError("size must be positive");
  d.size = std::size_t(n);
  if (!j["leq"].is_array()) throw StructuralError("leq must be an array");
  for (const auto& row : j["leq"]) {
    if (!row.is_array()) throw StructuralError("leq rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) r.push_back(int(as_int(v, "leq entry")));
    d.leq.push_back(std::move(r));
  }
  for (const char* key : {"box", "diamond"}) {
    if (!j[key].is_array()) throw StructuralError(std::string(key) + " must be an array");
    auto& dst = std::string(key) == "box" ? d.box : d.diamond;
    for (const auto& v : j[key]) dst.push_back(as_int(v, key));
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw StructuralError("name must be a string");
    d.name = j["name"].get<std::string>();
  }
  return d;
}

FiniteAlgebra algebra_from_json(std::string_view text) {
  return FiniteAlgebra::from_data(algebra_data_from_json(text));
}

std::string to_json(const FiniteAlgebra& a, const std::vector<Element>& generators) {
  json j;
  const std::size_t n = a.size();
  j["size"] = n;
  json leq = json::array();
  for (Element x = 0; x < n; ++x) {
    json row = json::array();
    for (Element y = 0; y < n; ++y) row.push_back(a.leq(x, y) ? 1 : 0);
    leq.push_back(std::move(row));
  }
  j["leq"] = std::move(leq);
  j["box"] = a.box_table();
  j["diamond"] = a.diamond_table();
  if (!a.name().empty()) j["name"] = a.name();
  if (!generators.empty()) j["generators"] = generators;
  return j.dump();
}

std::string to_json(const Partition& p) { return p.to_string(); }

std::string to_json(const DualSpace& s) {
  const std::size_t m = s.size();
  json j;
  j["points"] = s.points;
  json leq = json::array(), r = json::array();
  for (std::size_t x = 0; x < m; ++x) {
    json lrow = json::array(), rrow = json::array();
    for (std::size_t y = 0; y < m; ++y) {
      lrow.push_back(s.le(x, y) ? 1 : 0);
      rrow.push_back(s.rel(x, y) ? 1 : 0);
    }
    leq.push_back(std::move(lrow));
    r.push_back(std::move(rrow));
  }
  j["leq"] = std::move(leq);
  j["R"] = std::move(r);
  return j.dump();
}

std::string to_json(const ValidationReport& r) {
  json j;
  j["is_bounded_lattice"] = r.is_bounded_lattice;
  j["is_distributive"] = r.is_distributive;
  j["is_pma"] = r.is_pma;
  j["is_pk4"] = r.is_pk4;
  j["is_ps4"] = r.is_ps4;
  json vs = json::array();
  for (const auto& v : r.violations) vs.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  j["violations"] = std::move(vs);
  return j.dump();
}

std::string hasse_dot(const FiniteAlgebra& a, bool with_operators) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Element x = 0; x < a.size(); ++x) {
    std::string label = std::to_string(x);
    if (with_operators && a.box(x) == x) label += " B";
    if (with_operators && a.diamond(x) == x) label += " D";
    out += "  n" + std::to_string(x) + " [label=\"" + label + "\"];\n";
  }
  for (Element x = 0; x < a.size(); ++x)
    for (Element y : lower_covers(a, x))
      out += "  n" + std::to_string(y) + " -> n" + std::to_string(x) + " [arrowhead=none];\n";
  return out + "}\n";
}

std::string dual_space_dot(const DualSpace& s) {
  std::string out = "digraph dual {\n  rankdir=BT;\n";
  const std::size_t m = s.size();
  for (std::size_t x = 0; x < m; ++x) out += "  p" + std::to_string(x) + ";\n";
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      if (x == y || !s.le(x, y)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < m && cover; ++z)
        if (z != x && z != y && s.le(x, z) && s.le(z, y)) cover = false;
      if (cover) out += "  p" + std::to_string(x) + " -> p" + std::to_string(y) + " [arrowhead=none];\n";
    }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (s.rel(x, y)) out += "  p" + std::to_string(x) + " -> p" + std::to_string(y) + " [style=dashed];\n";
  return out + "}\n";
}

std::string dot_node_id(const CanonicalForm& f) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "a%016llx", static_cast<unsigned long long>(f.hash()));
  return buf;
}

}  // namespace poma
