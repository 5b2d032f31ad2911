// Command-line front end. Talks to the library only through poma.h.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "poma/poma.h"

namespace {

using json = nlohmann::ordered_json;

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

struct Failure {
  int code;
  std::string message;
};

void check(poma_status s) {
  if (s == POMA_OK) return;
  const std::string msg = std::string(poma_status_name(s)) + ": " + poma_last_error();
  if (s == POMA_ERR_BUDGET) throw Failure{kBudget, msg};
  if (s == POMA_ERR_INTERNAL) throw Failure{kFail, msg};
  throw Failure{kUsage, msg};
}

[[noreturn]] void usage(const std::string& msg) { throw Failure{kUsage, msg}; }

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  poma_string_free(s);
  return out;
}

template <class F>
std::string text_of(F&& call) {
  char* out = nullptr;
  check(call(&out));
  return take(out);
}

template <class F>
json json_of(F&& call) {
  return json::parse(text_of(std::forward<F>(call)));
}

struct AlgebraFree {
  void operator()(poma_algebra* a) const { poma_algebra_free(a); }
};
struct VarietyFree {
  void operator()(poma_variety* v) const { poma_variety_free(v); }
};
using Algebra = std::unique_ptr<poma_algebra, AlgebraFree>;
using Variety = std::unique_ptr<poma_variety, VarietyFree>;

Algebra wrap(poma_algebra* a) { return Algebra(a); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) usage("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::vector<std::string> names;
  std::vector<std::string> files;
  std::size_t max_size = 0;
  std::size_t min_size = 1;
  std::size_t free_rank = 0;
  unsigned depth = 4;
  bool json = false;
  bool dot = false;
  std::string cache;
  bool resume = false;
};

std::string cache_dir(const Options& o) {
  if (const char* env = std::getenv("POMA_CACHE"); env != nullptr && *env != '\0') return env;
  return o.cache;
}

std::vector<Algebra> load(const Options& o) {
  std::vector<Algebra> out;
  for (const auto& n : o.names) {
    poma_algebra* a = nullptr;
    check(poma_algebra_corpus(n.c_str(), &a));
    out.push_back(wrap(a));
  }
  for (const auto& f : o.files) {
    poma_algebra* a = nullptr;
    check(poma_algebra_from_json(read_file(f).c_str(), &a));
    out.push_back(wrap(a));
  }
  return out;
}

Algebra load_one(const Options& o) {
  auto list = load(o);
  if (list.size() != 1) usage("exactly one algebra expected (--name or --file)");
  return std::move(list.front());
}

std::vector<const poma_algebra*> raw(const std::vector<Algebra>& list) {
  std::vector<const poma_algebra*> out;
  for (const auto& a : list) out.push_back(a.get());
  return out;
}

Variety make_variety(const std::vector<Algebra>& gens) {
  const auto r = raw(gens);
  poma_variety* v = nullptr;
  check(poma_variety_new(r.data(), r.size(), &v));
  return Variety(v);
}

Variety variety_from(const Options& o) {
  auto gens = load(o);
  if (gens.empty()) usage("at least one generator expected (--name or --file)");
  return make_variety(gens);
}

std::string blocks(const json& labels) {
  std::map<unsigned, std::vector<unsigned>> groups;
  for (std::size_t i = 0; i < labels.size(); ++i) groups[labels[i].get<unsigned>()].push_back(unsigned(i));
  std::string out;
  for (const auto& [id, members] : groups) {
    if (!out.empty()) out += " ";
    out += "{";
    for (std::size_t i = 0; i < members.size(); ++i) out += (i ? "," : "") + std::to_string(members[i]);
    out += "}";
  }
  return out;
}

const char* yes(bool b) { return b ? "true" : "false"; }

int predicate(const Options& o, const char* which) {
  auto a = load_one(o);
  int v = 0;
  check(poma_predicate(a.get(), which, &v));
  if (o.json)
    std::cout << json{{which, v != 0}}.dump() << "\n";
  else
    std::cout << which << ": " << yes(v != 0) << "\n";
  return v ? kPass : kFail;
}

// ---------------------------------------------------------------- commands

int cmd_validate(const Options& o) {
  std::string text;
  if (o.files.size() == 1 && o.names.empty()) {
    text = read_file(o.files.front());
  } else {
    auto a = load_one(o);
    text = text_of([&](char** out) { return poma_algebra_to_json(a.get(), out); });
  }
  const json r = json_of([&](char** out) { return poma_validate_json(text.c_str(), out); });
  if (o.json) {
    std::cout << r.dump() << "\n";
  } else {
    std::cout << "lattice: " << yes(r["is_bounded_lattice"]) << "\n"
              << "distributive: " << yes(r["is_distributive"]) << "\n"
              << "PMA: " << yes(r["is_pma"]) << "\n"
              << "PK4: " << yes(r["is_pk4"]) << "\n"
              << "PS4: " << yes(r["is_ps4"]) << "\n";
    for (const auto& v : r["violations"])
      std::cout << "violation: " << v["axiom"].get<std::string>() << " at " << v["witness"].dump() << "\n";
  }
  return r["is_pma"].get<bool>() ? kPass : kFail;
}

int cmd_show(const Options& o) {
  auto a = load_one(o);
  if (o.dot) {
    std::cout << text_of([&](char** out) { return poma_algebra_dot(a.get(), 1, out); });
    return kPass;
  }
  const json j = json_of([&](char** out) { return poma_algebra_to_json(a.get(), out); });
  if (o.json) {
    std::cout << j.dump() << "\n";
    return kPass;
  }
  std::uint64_t h = 0;
  check(poma_algebra_canonical_hash(a.get(), &h));
  char hex[20];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  std::cout << "name: " << j.value("name", "") << "\nsize: " << j["size"] << "\nbox: " << j["box"].dump()
            << "\ndia: " << j["diamond"].dump() << "\ncanonical: " << hex << "\n";
  for (const char* p : {"pma", "pk4", "ps4", "si", "simple", "wc"}) {
    int v = 0;
    check(poma_predicate(a.get(), p, &v));
    std::cout << p << ": " << yes(v != 0) << "\n";
  }
  return kPass;
}

int cmd_cg(const Options& o, const std::vector<std::string>& pairs) {
  auto a = load_one(o);
  std::vector<uint32_t> flat;
  for (const auto& p : pairs) {
    unsigned x = 0, y = 0;
    char sep = 0;
    std::istringstream in(p);
    if (!(in >> x >> sep >> y) || sep != ',') usage("pairs are written x,y");
    flat.push_back(x);
    flat.push_back(y);
  }
  const json p = json_of([&](char** out) { return poma_cg(a.get(), flat.data(), flat.size() / 2, out); });
  std::cout << (o.json ? p.dump() : blocks(p)) << "\n";
  return kPass;
}

int cmd_conlat(const Options& o) {
  auto a = load_one(o);
  const json r = json_of([&](char** out) { return poma_con_lattice(a.get(), out); });
  if (o.json) {
    std::cout << r.dump() << "\n";
  } else {
    std::cout << "congruences: " << r["count"] << "\n";
    for (const auto& c : r["congruences"]) std::cout << "  " << blocks(c) << "\n";
  }
  return kPass;
}

int cmd_si(const Options& o) {
  const int code = predicate(o, "si");
  if (code == kPass && !o.json) {
    auto a = load_one(o);
    const json m = json_of([&](char** out) { return poma_monolith(a.get(), out); });
    std::cout << "monolith: " << blocks(m) << "\n";
  }
  return code;
}

void print_algebra_list(const json& list, bool as_json) {
  if (as_json) {
    std::cout << list.dump() << "\n";
    return;
  }
  for (const auto& a : list) std::cout << a["size"] << " " << a.value("name", "") << "\n";
}

int cmd_hs(const Options& o) {
  auto a = load_one(o);
  const json r = json_of([&](char** out) { return poma_hs_si(a.get(), out); });
  if (!o.json) std::cout << "si members of HS: " << r.size() << "\n";
  print_algebra_list(r, o.json);
  return kPass;
}

int cmd_dual(const Options& o) {
  auto a = load_one(o);
  if (o.dot) {
    std::cout << text_of([&](char** out) { return poma_dual_space_dot(a.get(), out); });
    return kPass;
  }
  const json r = json_of([&](char** out) { return poma_dual_space(a.get(), out); });
  if (o.json) {
    std::cout << r.dump() << "\n";
    return kPass;
  }
  for (const auto& [k, v] : r.items()) std::cout << k << ": " << v.dump() << "\n";
  return kPass;
}

int cmd_envelope(const Options& o) {
  auto a = load_one(o);
  const json r = json_of([&](char** out) { return poma_envelope(a.get(), out); });
  if (o.json) {
    std::cout << r.dump() << "\n";
  } else {
    std::cout << "size: " << r["algebra"]["size"] << "\nkappa: " << r["kappa"].dump() << "\nfsi: " << yes(r["fsi"])
              << "\nsimple: " << yes(r["simple"]) << "\n";
  }
  return kPass;
}

int cmd_complex(const Options& o, std::size_t worlds, const std::vector<std::string>& edges) {
  std::vector<uint32_t> flat;
  for (const auto& e : edges) {
    unsigned x = 0, y = 0;
    char sep = 0;
    std::istringstream in(e);
    if (!(in >> x >> sep >> y) || sep != ',') usage("edges are written x,y");
    flat.push_back(x);
    flat.push_back(y);
  }
  poma_algebra* raw_a = nullptr;
  check(poma_complex_algebra(worlds, flat.data(), flat.size() / 2, &raw_a));
  auto a = wrap(raw_a);
  if (o.dot)
    std::cout << text_of([&](char** out) { return poma_algebra_dot(a.get(), 1, out); });
  else
    std::cout << text_of([&](char** out) { return poma_algebra_to_json(a.get(), out); }) << "\n";
  return kPass;
}

int cmd_free(const Options& o, bool zero) {
  auto gens = load(o);
  if (gens.empty()) usage("at least one generator expected (--name or --file)");
  const auto r = raw(gens);
  const std::size_t rank = zero ? 0 : (o.free_rank == 0 ? 1 : o.free_rank);
  std::vector<uint32_t> g(rank);
  poma_algebra* raw_f = nullptr;
  if (zero)
    check(poma_free_zero(r.data(), r.size(), &raw_f));
  else
    check(poma_free_over(r.data(), r.size(), rank, &raw_f, g.data()));
  auto f = wrap(raw_f);
  if (o.dot) {
    std::cout << text_of([&](char** out) { return poma_algebra_dot(f.get(), 1, out); });
    return kPass;
  }
  json j = json_of([&](char** out) { return poma_algebra_to_json(f.get(), out); });
  if (!zero) j["generators"] = g;
  if (o.json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "rank: " << rank << "\nsize: " << j["size"] << "\n";
    if (!zero) std::cout << "generators: " << j["generators"].dump() << "\n";
    std::cout << "box: " << j["box"].dump() << "\ndia: " << j["diamond"].dump() << "\n";
  }
  return kPass;
}

int cmd_figure1(const Options& o) {
  const std::size_t bound = o.max_size == 0 ? 6 : o.max_size;
  const json r = json_of([&](char** out) { return poma_figure1_verify(bound, out); });
  if (o.json) {
    std::cout << r.dump() << "\n";
  } else {
    std::cout << "bound: " << bound << "\n";
    for (const auto& s : r["stages"])
      std::cout << "stage " << s["stage"].get<std::string>() << ": " << (s["passed"].get<bool>() ? "pass" : "fail")
                << " (" << s["detail"].get<std::string>() << ")\n";
    std::cout << (r["passed"].get<bool>() ? "pass" : "fail") << "\n";
  }
  return r["passed"].get<bool>() ? kPass : kFail;
}

int cmd_enumerate(const Options& o, const std::string& kind, bool si, bool fsi) {
  const std::size_t bound = o.max_size == 0 ? 4 : o.max_size;
  const std::string dir = cache_dir(o);
  const json r = json_of([&](char** out) {
    return poma_enumerate(kind.c_str(), o.min_size, bound, si, fsi, dir.empty() ? nullptr : dir.c_str(), o.resume,
                          out);
  });
  if (o.json) {
    for (const auto& a : r) std::cout << a.dump() << "\n";
    return kPass;
  }
  std::map<std::size_t, std::size_t> by_size;
  for (const auto& a : r) ++by_size[a["size"].get<std::size_t>()];
  std::cout << "kind: " << kind << "\nbound: " << bound << "\n";
  for (const auto& [n, c] : by_size) std::cout << "size " << n << ": " << c << "\n";
  std::cout << "total: " << r.size() << "\n";
  return kPass;
}

// "A+B" joins several generators into one handle.
std::vector<Variety> handles_from(const std::vector<std::string>& specs) {
  std::vector<Variety> out;
  for (const auto& s : specs) {
    std::vector<Algebra> gens;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, '+')) {
      poma_algebra* a = nullptr;
      check(poma_algebra_corpus(part.c_str(), &a));
      gens.push_back(wrap(a));
    }
    out.push_back(make_variety(gens));
  }
  return out;
}

void print_covers(const json& r, bool as_json) {
  if (as_json) {
    std::cout << r.dump() << "\n";
    return;
  }
  const auto& nodes = r["nodes"];
  for (const auto& e : r["edges"])
    std::cout << nodes[e[0].get<std::size_t>()].get<std::string>() << " < "
              << nodes[e[1].get<std::size_t>()].get<std::string>() << "\n";
}

int cmd_variety_include(const Options& o, const std::vector<std::string>& sub) {
  auto v = variety_from(o);
  auto w = handles_from(sub);
  if (w.size() != 1) usage("exactly one --sub handle expected");
  int inc = 0;
  check(poma_variety_includes(v.get(), w.front().get(), &inc));
  if (o.json) {
    std::cout << json{{"includes", inc != 0}}.dump() << "\n";
  } else {
    const json a = json_of([&](char** out) { return poma_variety_to_json(v.get(), out); });
    const json b = json_of([&](char** out) { return poma_variety_to_json(w.front().get(), out); });
    std::cout << b["label"].get<std::string>() << (inc ? " is" : " is not") << " contained in "
              << a["label"].get<std::string>() << "\n";
  }
  return inc ? kPass : kFail;
}

int cmd_variety_covers(const Options& o) {
  if (o.names.empty()) usage("give handles with --name (A+B for several generators)");
  auto hs = handles_from(o.names);
  std::vector<const poma_variety*> r;
  for (const auto& h : hs) r.push_back(h.get());
  if (o.dot)
    std::cout << text_of([&](char** out) { return poma_variety_covers_dot(r.data(), r.size(), out); });
  else
    print_covers(json_of([&](char** out) { return poma_variety_covers(r.data(), r.size(), out); }), o.json);
  return kPass;
}

int cmd_figure4(const Options& o) {
  const json r = json_of([](char** out) { return poma_figure4(out); });
  if (o.dot) {
    std::cout << text_of([](char** out) { return poma_figure4_dot(out); });
  } else {
    print_covers(r, o.json);
    if (!o.json)
      std::cout << "covers: " << r["edges"].size() << "\nmatches figure: " << yes(r["matches"].get<bool>()) << "\n";
  }
  return r["matches"].get<bool>() ? kPass : kFail;
}

int cmd_split(const Options& o, std::vector<std::string> which) {
  auto a = load_one(o);
  if (which.empty()) {
    int ps4 = 0, pk4 = 0;
    check(poma_predicate(a.get(), "ps4", &ps4));
    check(poma_predicate(a.get(), "pk4", &pk4));
    if (ps4) which = {"c3a", "c3b"};
    if (pk4) which.push_back("d3");
    if (which.empty()) usage("splitting checks need a PK4 algebra");
  }
  bool ok = true;
  json all = json::object();
  for (const auto& w : which) {
    const json r = json_of([&](char** out) { return poma_splitting(a.get(), w.c_str(), out); });
    ok = ok && r["consistent"].get<bool>();
    all[w] = r;
    if (!o.json)
      std::cout << w << ": " << r["equation"].get<std::string>() << " holds=" << yes(r["equation_holds"])
                << " excluded=" << yes(r["excluded"]) << " consistent=" << yes(r["consistent"]) << "\n";
  }
  if (o.json) std::cout << all.dump() << "\n";
  return ok ? kPass : kFail;
}

std::size_t default_bound(const std::string& name) {
  static const std::map<std::string, std::size_t> bounds = {
      {"thm610", 8}, {"lemma92", 6}, {"thm42", 6},   {"fact52", 7},  {"split", 7},      {"lemma83", 7},
      {"lemma84", 7}, {"duality", 6}, {"cg_dl", 7}, {"cg_k4", 1024}, {"tau_rho", 1000}};
  return bounds.at(name);
}

int cmd_battery(const Options& o, const std::string& name) {
  const std::size_t bound = o.max_size == 0 ? default_bound(name) : o.max_size;
  const std::string dir = cache_dir(o);
  const json r = json_of([&](char** out) {
    return poma_battery_cached(name.c_str(), bound, dir.empty() ? nullptr : dir.c_str(), o.resume, out);
  });
  const bool pass = r["passed"].get<bool>();
  if (o.json) {
    std::cout << r.dump() << "\n";
  } else {
    std::string w = "{";
    for (std::size_t i = 0; i < r["witnesses"].size(); ++i)
      w += (i ? ", " : "") + r["witnesses"][i].get<std::string>();
    std::cout << (pass ? "pass: " : "fail: ") << w << "}\n"
              << "bound: " << bound << "\nchecked: " << r["checked"] << "\n"
              << "detail: " << r["detail"].get<std::string>() << "\n";
  }
  return pass ? kPass : kFail;
}

int cmd_complete(const Options& o, const std::string& which) {
  auto v = variety_from(o);
  const json label = json_of([&](char** out) { return poma_variety_to_json(v.get(), out); })["label"];
  if (which == "thm93") {
    const std::size_t bound = o.max_size == 0 ? 8 : o.max_size;
    const json r = json_of([&](char** out) { return poma_thm93(v.get(), bound, out); });
    if (o.json) {
      std::cout << r.dump() << "\n";
    } else {
      std::cout << label.get<std::string>() << ": ";
      if (r["b2_branch"].get<bool>())
        std::cout << "V(B2) branch";
      else
        std::cout << "n = " << r["n"] << ", m = " << r["m"];
      std::cout << " (bound " << bound << ")\n";
    }
    return r["holds"].get<bool>() ? kPass : kFail;
  }
  const json r = json_of([&](char** out) { return poma_complete(v.get(), which.c_str(), out); });
  const json machine{{"status", r["status"]}, {"bound", r["bound"]}, {"witness", r["witness"]}};
  std::cout << machine.dump() << "\n";
  if (!o.json) {
    std::cout << label.get<std::string>() << " " << which << ": " << r["status"].get<std::string>();
    if (!r["route"].get<std::string>().empty()) std::cout << " [" << r["route"].get<std::string>() << "]";
    std::cout << "\n";
    if (!r["witness"].is_null()) {
      const auto& w = r["witness"];
      std::cout << "witness: " << w["algebra"].get<std::string>() << "\n";
      if (!w["formula"].get<std::string>().empty()) std::cout << "formula: " << w["formula"].get<std::string>() << "\n";
      if (!w["assignment"].empty()) std::cout << "assignment: " << w["assignment"].dump() << "\n";
      if (!w["note"].get<std::string>().empty()) std::cout << "note: " << w["note"].get<std::string>() << "\n";
    }
  }
  return r["status"] == "Yes" ? kPass : kFail;
}

int cmd_asc_experiment(const Options& o) {
  const std::size_t bound = o.max_size == 0 ? 5 : o.max_size;
  const json r = json_of([&](char** out) { return poma_asc_experiment(bound, out); });
  if (o.json) {
    std::cout << r.dump() << "\n";
  } else {
    std::cout << "bound: " << bound << "\n";
    for (const auto& row : r["rows"])
      std::cout << row["algebra"].get<std::string>() << ": " << row["status"].get<std::string>() << " ("
                << row["reason"].get<std::string>() << ")\n";
    std::cout << "unknown: " << r["unknown"] << " of " << r["rows"].size() << "\n";
  }
  return kPass;
}

int cmd_quasi(const Options& o, const std::string& formula, bool admissible) {
  auto v = variety_from(o);
  const std::size_t rank = o.free_rank == 0 ? 2 : o.free_rank;
  const json r = json_of([&](char** out) { return poma_quasi_classify(v.get(), formula.c_str(), rank, out); });
  const std::string st = r["status"].get<std::string>();
  const bool refuted = st == "RefutedAdmissibilityAt";
  if (o.json) {
    std::cout << r.dump() << "\n";
  } else {
    std::cout << "status: " << st;
    if (refuted || st == "ActiveWitness") std::cout << " " << r["rank"];
    std::cout << "\nvalid: " << yes(r["valid"]) << "\nbound: " << r["bound"] << "\n";
    if (!r["substitution"].empty()) {
      std::cout << "substitution:";
      for (const auto& [k, t] : r["substitution"].items()) std::cout << " " << k << " := " << t.get<std::string>() << ";";
      std::cout << "\n";
    }
    if (admissible) std::cout << "admissible: " << (refuted ? "no" : "up to bound") << "\n";
  }
  return admissible && refuted ? kFail : kPass;
}

int cmd_eval(const Options& o, const std::string& term, const std::vector<std::string>& assign) {
  auto a = load_one(o);
  json asg = json::object();
  for (const auto& s : assign) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) usage("assignments are written var=element");
    try {
      asg[s.substr(0, eq)] = std::stoul(s.substr(eq + 1));
    } catch (const std::exception&) {
      usage("bad element in " + s);
    }
  }
  uint32_t value = 0;
  check(poma_eval(a.get(), term.c_str(), asg.dump().c_str(), &value));
  std::cout << value << "\n";
  return kPass;
}

int cmd_translate(const Options& o, const std::string& which, const std::string& input) {
  if (which == "tau") {
    std::cout << text_of([&](char** out) { return poma_translate_tau(input.c_str(), out); }) << "\n";
    return kPass;
  }
  const json r = json_of([&](char** out) { return poma_translate_rho(input.c_str(), out); });
  if (o.json)
    std::cout << r.dump() << "\n";
  else
    std::cout << r["first"].get<std::string>() << "\n" << r["second"].get<std::string>() << "\n";
  return kPass;
}

int cmd_separate(const Options& o) {
  auto list = load(o);
  if (list.size() != 2) usage("two algebras expected: the first must fail, the second satisfy");
  const json r = json_of(
      [&](char** out) { return poma_separating_equation(list[0].get(), list[1].get(), o.depth, out); });
  if (o.json) {
    std::cout << r.dump() << "\n";
  } else if (r["equation"].is_null()) {
    std::cout << "none up to depth " << o.depth << (r["truncated"].get<bool>() ? " (truncated)" : "") << "\n";
  } else {
    std::cout << r["equation"].get<std::string>() << "\n";
  }
  return r["equation"].is_null() ? kFail : kPass;
}

int cmd_growth(const Options& o, std::size_t worlds) {
  const json r = json_of([&](char** out) { return poma_growth(worlds, out); });
  if (o.json) {
    std::cout << r.dump() << "\n";
  } else {
    for (const auto& [k, v] : r.items()) std::cout << k << ": " << v << "\n";
  }
  return r["distinct"] == worlds ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"poma: finite positive modal algebras"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--name", o.names, "corpus algebra (NAME or NAME:n); repeatable")->allow_extra_args(false);
    c->add_option("--file", o.files, "algebra in JSON; repeatable")->allow_extra_args(false);
    c->add_option("--max-size", o.max_size, "enumeration or battery bound");
    c->add_option("--free-rank", o.free_rank, "free algebra rank");
    c->add_option("--depth", o.depth, "term depth");
    c->add_flag("--json", o.json, "machine-readable output");
    c->add_flag("--dot", o.dot, "Graphviz output");
    c->add_option("--cache", o.cache, "enumeration cache directory");
    c->add_flag("--resume", o.resume, "reuse cached enumerations");
  };

  std::map<std::string, std::function<int()>> run;
  auto simple = [&](const std::string& name, const std::string& help, std::function<int()> f) {
    auto* c = app.add_subcommand(name, help);
    common(c);
    run[name] = std::move(f);
    return c;
  };

  simple("validate", "check the lattice and modal axioms", [&] { return cmd_validate(o); });
  simple("show", "print an algebra", [&] { return cmd_show(o); });
  std::vector<std::string> pairs;
  simple("cg", "principal congruence", [&] { return cmd_cg(o, pairs); })->add_option("--pair", pairs, "x,y")->allow_extra_args(false)->required();
  simple("conlat", "congruence lattice", [&] { return cmd_conlat(o); });
  simple("si", "subdirect irreducibility", [&] { return cmd_si(o); });
  simple("simple", "simplicity", [&] { return predicate(o, "simple"); });
  simple("wc", "well-connectedness", [&] { return predicate(o, "wc"); });
  simple("hs", "si members of HS(A)", [&] { return cmd_hs(o); });
  simple("dual", "dual space", [&] { return cmd_dual(o); });
  simple("envelope", "Boolean envelope", [&] { return cmd_envelope(o); });
  std::size_t worlds = 0;
  std::vector<std::string> edges;
  {
    auto* c = simple("complex", "complex algebra of a frame", [&] { return cmd_complex(o, worlds, edges); });
    c->add_option("--worlds", worlds, "number of worlds")->required();
    c->add_option("--edge", edges, "relation pair x,y; repeatable")->allow_extra_args(false);
  }
  simple("free", "free algebra over the generators", [&] { return cmd_free(o, false); });
  simple("freezero", "free zero-generated algebra", [&] { return cmd_free(o, true); });
  simple("figure1-verify", "check the transcribed one-generated free PS4 algebra", [&] { return cmd_figure1(o); });
  std::string kind = "PS4";
  bool si_only = false, fsi_only = false;
  {
    auto* c = simple("enumerate", "algebras up to isomorphism", [&] { return cmd_enumerate(o, kind, si_only, fsi_only); });
    c->add_option("--kind", kind, "PMA, PK4 or PS4");
    c->add_option("--min-size", o.min_size, "smallest size");
    c->add_flag("--si", si_only, "si algebras only");
    c->add_flag("--fsi", fsi_only, "fsi algebras only");
  }

  auto* variety = app.add_subcommand("variety", "subvariety lattice");
  variety->require_subcommand(1);
  std::vector<std::string> sub;
  {
    auto* c = variety->add_subcommand("include", "is V(--sub) contained in V(--name ...)");
    common(c);
    c->add_option("--sub", sub, "candidate subvariety, A+B for several generators")->allow_extra_args(false)->required();
    run["variety include"] = [&] { return cmd_variety_include(o, sub); };
    c = variety->add_subcommand("covers", "Hasse diagram of the given handles");
    common(c);
    run["variety covers"] = [&] { return cmd_variety_covers(o); };
    c = variety->add_subcommand("figure4", "bottom of the subvariety lattice");
    common(c);
    run["variety figure4"] = [&] { return cmd_figure4(o); };
  }

  std::vector<std::string> which;
  simple("split", "splitting equations against hs_si", [&] { return cmd_split(o, which); })
      ->add_option("--which", which, "c3a, c3b or d3; repeatable")->allow_extra_args(false);

  auto* battery = app.add_subcommand("battery", "enumeration batteries");
  battery->require_subcommand(1);
  for (const char* b : {"thm610", "lemma92", "thm42", "fact52", "split", "lemma83", "lemma84", "duality", "cg_dl",
                        "cg_k4", "tau_rho"}) {
    common(battery->add_subcommand(b, std::string("battery ") + b));
    run[std::string("battery ") + b] = [&o, b] { return cmd_battery(o, b); };
  }

  auto* complete = app.add_subcommand("complete", "structural completeness of V(--name ...)");
  complete->require_subcommand(1);
  for (const char* w : {"sc", "hsc", "psc", "asc", "thm93"}) {
    common(complete->add_subcommand(w, w));
    run[std::string("complete ") + w] = [&o, w] { return cmd_complete(o, w); };
  }
  simple("asc-experiment", "bounded scan for ASC varieties that are not SC", [&] { return cmd_asc_experiment(o); });

  auto* quasi = app.add_subcommand("quasi", "quasi-equations over V(--name ...)");
  quasi->require_subcommand(1);
  std::string formula;
  for (const char* q : {"classify", "admissible"}) {
    auto* c = quasi->add_subcommand(q, q);
    common(c);
    c->add_option("formula", formula, "quasi-equation, e.g. \"x ~ dia x => x ~ 0\"")->required();
    const bool adm = std::string(q) == "admissible";
    run[std::string("quasi ") + q] = [&o, &formula, adm] { return cmd_quasi(o, formula, adm); };
  }

  std::string term;
  std::vector<std::string> assign;
  {
    auto* c = simple("eval", "evaluate a term", [&] { return cmd_eval(o, term, assign); });
    c->add_option("term", term, "term")->required();
    c->add_option("--assign", assign, "var=element; repeatable")->allow_extra_args(false);
  }

  auto* translate = app.add_subcommand("translate", "sequent/equation translations");
  translate->require_subcommand(1);
  std::string tr_input;
  {
    auto* c = translate->add_subcommand("tau", "sequent to equation");
    common(c);
    c->add_option("sequent", tr_input, "e.g. \"{x, y} |> z\"")->required();
    run["translate tau"] = [&] { return cmd_translate(o, "tau", tr_input); };
    c = translate->add_subcommand("rho", "equation to two sequents");
    common(c);
    c->add_option("equation", tr_input, "e.g. \"x ~ box x\"")->required();
    run["translate rho"] = [&] { return cmd_translate(o, "rho", tr_input); };
  }

  simple("separate", "equation valid in the second algebra, failing in the first", [&] { return cmd_separate(o); });
  std::size_t growth_worlds = 12;
  simple("growth", "distinct phi-terms on the N-world frame", [&] { return cmd_growth(o, growth_worlds); })
      ->add_option("--worlds", growth_worlds, "frame size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  std::string key;
  for (CLI::App* c = app.get_subcommands().front();; c = c->get_subcommands().front()) {
    key += (key.empty() ? "" : " ") + c->get_name();
    if (c->get_subcommands().empty()) break;
  }
  try {
    return run.at(key)();
  } catch (const Failure& f) {
    std::cerr << "poma: " << f.message << "\n";
    return f.code;
  } catch (const json::exception& e) {
    std::cerr << "poma: malformed report: " << e.what() << "\n";
    return kFail;
  }
}
