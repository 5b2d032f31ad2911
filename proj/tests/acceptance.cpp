// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "poma/batteries.hpp"
#include "poma/completeness.hpp"
#include "poma/congruence.hpp"
#include "poma/constructions.hpp"
#include "poma/corpus.hpp"
#include "poma/enumerate.hpp"
#include "poma/free.hpp"
#include "poma/varieties.hpp"

using namespace poma;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

bool is_chain(const FiniteAlgebra& a) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (!a.leq(x, y) && !a.leq(y, x)) return false;
  return true;
}

std::string battery_note(const BatteryReport& r) {
  std::string out = r.name + " bound " + std::to_string(r.bound) + " checked " + std::to_string(r.checked);
  if (r.name == "thm610") out += " (" + r.detail + ")";
  return out;
}

Outcome figure2_catalog() {
  Outcome o;
  const auto qs = si_quotients(corpus("F1_PS4"));
  o.require(qs.size() == 11, "found " + std::to_string(qs.size()) + " si quotients");
  std::vector<FiniteAlgebra> fig2;
  for (const auto& n : figure2_names()) fig2.push_back(corpus(n));
  o.require(fig2.size() == 11, "catalogue size");
  for (const auto& q : qs) o.require(contains_iso(fig2, q), "quotient outside the catalogue");
  for (const auto& a : fig2) o.require(contains_iso(qs, a), a.name() + " missing");
  if (o.ok) o.detail = "11 si quotients, all in the catalogue";
  return o;
}

Outcome figure1() {
  Outcome o;
  const auto r = verify_figure1(6);
  o.require(r.stages.size() == 5, "expected five stages");
  std::string passed;
  for (const auto& s : r.stages) {
    o.require(s.passed, s.stage + " " + s.detail);
    if (s.passed) passed += s.stage.substr(0, 1);
  }
  o.require(r.bound == 6, "bound");
  if (o.ok) o.detail = "stages " + passed + " pass, stage d up to size 6";
  return o;
}

Outcome figure4_lattice() {
  Outcome o;
  const auto& f = figure4();
  const auto edges = covers_poset(f.handles);
  o.require(edges == f.expected, "Hasse diagram differs from the drawn one");
  auto ups = [&](const std::string& label) {
    std::size_t idx = f.handles.size(), n = 0;
    for (std::size_t i = 0; i < f.handles.size(); ++i)
      if (f.handles[i].label == label) idx = i;
    for (const auto& e : edges) n += e.first == idx;
    return n;
  };
  o.require(ups("V(C2)") == 4, "V(C2) covers");
  o.require(ups("V(D4)") == 3, "V(D4) covers");
  o.require(ups("V(D3)") == 5, "V(D3) covers");
  o.require(ups("V(C3a)") == 4, "V(C3a) covers");
  o.require(ups("V(C3b)") == 4, "V(C3b) covers");
  if (o.ok) o.detail = std::to_string(edges.size()) + " covers match; C2:4 D4:3 D3:5 C3a:4 C3b:4";
  return o;
}

Outcome thm610() {
  Outcome o;
  const auto r = theorem610_battery(8);
  o.require(r.passed, r.detail);
  o.require(format_witnesses(r.witnesses) == "{C2, D4}", "witnesses " + format_witnesses(r.witnesses));
  if (o.ok) o.detail = format_witnesses(r.witnesses) + ", " + battery_note(r);
  return o;
}

Outcome splitting() {
  Outcome o;
  const auto r = splitting_battery(7, 6);
  o.require(r.passed, r.detail);
  if (o.ok) o.detail = battery_note(r);
  return o;
}

Outcome duality() {
  Outcome o;
  const auto d = duality_battery(6);
  const auto t = thm42_battery(6);
  o.require(d.passed, d.detail);
  o.require(t.passed, t.detail);
  if (o.ok) o.detail = battery_note(d) + ", " + battery_note(t);
  return o;
}

Outcome examples() {
  Outcome o;
  const auto m3 = envelope_algebra(boolean_envelope(corpus("EX44III"))).first;
  bool identity = m3.size() == 4;
  for (Element x = 0; x < m3.size() && identity; ++x) identity = m3.box(x) == x && m3.diamond(x) == x;
  o.require(identity, "EX44III envelope is not the 4-element identity algebra");
  o.require(!is_well_connected(m3), "EX44III envelope is well-connected");

  const auto ex4 = corpus("EX44IV");
  o.require(!is_fsi(ex4), "EX44IV is fsi");
  o.require(is_simple(envelope_algebra(boolean_envelope(ex4)).first), "EX44IV envelope not simple");

  const auto ex46 = corpus("EX46", 3);
  o.require(is_simple(ex46), "EX46(3) not simple");
  const auto cep = has_cep(ex46);
  o.require(!cep.holds, "EX46(3) has CEP");
  if (!cep.holds) {
    const auto sub = subalgebra_of(ex46, cep.subuniverse).first;
    o.require(sub.size() == 4 && is_chain(sub), "witness subalgebra is not a 4-chain");
    o.require(!is_simple(sub), "witness subalgebra is simple");
  }
  if (o.ok) o.detail = "EX44III, EX44IV, EX46(3) as described";
  return o;
}

Outcome free_algebras() {
  Outcome o;
  const auto f = free_over({corpus("D4")}, 1);
  const auto& a = f.algebra;
  o.require(a.size() == 5 && is_chain(a), "free D4 algebra is not a 5-chain");
  if (o.ok) {
    const Element b = f.generators[0], lo = a.box(b), hi = a.diamond(b);
    o.require(a.less(a.bottom(), lo) && a.less(lo, b) && a.less(b, hi) && a.less(hi, a.top()),
              "generator is not the middle element");
    o.require(a.box(hi) == lo && a.diamond(lo) == hi, "box c / dia a");
  }
  o.require(is_retract(corpus("D4"), a), "D4 is not a retract");

  std::size_t handles = 0;
  const auto c2 = corpus("C2");
  auto check_zero = [&](const FiniteAlgebra& g) {
    if (!is_ps4(g) || is_trivial(g)) return;
    ++handles;
    o.require(is_iso(free_zero({g}), c2), "free_zero of " + g.name());
  };
  for (const auto& n : corpus_names()) {
    if (n == "EX46") {
      for (int k = 3; k <= 6; ++k) check_zero(corpus(n, k));
    } else if (n == "AN_MINUS") {
      for (int k = 1; k <= 6; ++k) check_zero(corpus(n, k));
    } else if (n == "AN_SIMPLE") {
      for (int k = 2; k <= 6; ++k) check_zero(corpus(n, k));
    } else {
      check_zero(corpus(n));
    }
  }
  for (std::size_t n = 1; n <= 12; ++n)
    o.require(lemma53_growth(n).distinct == n, "growth at N=" + std::to_string(n));
  if (o.ok) o.detail = "5-chain with retract; free_zero = C2 on " + std::to_string(handles) + " PS4 handles; growth N for N<=12";
  return o;
}

Outcome completeness() {
  Outcome o;
  std::vector<std::string> names = figure2_names();
  for (const auto& n : figure3_names()) names.push_back(n);
  names.push_back("B2");
  std::string yes;
  for (const auto& n : names) {
    const auto v = variety_of_names({n});
    const bool sc = is_sc_pk4(v).status == Status::Yes;
    const bool hsc = is_hsc_pk4(v).status == Status::Yes;
    const bool expect = n == "B2" || n == "C2" || n == "D4";
    o.require(sc == expect && hsc == expect, "sc/hsc on " + n);
    if (sc) yes += (yes.empty() ? "" : ",") + n;
  }
  for (int n = 1; n <= 3; ++n) {
    const auto v = variety_of_names({"AN_MINUS:" + std::to_string(n)});
    o.require(is_psc(v).status == Status::Yes, "psc AN_MINUS(" + std::to_string(n) + ")");
    o.require(psc_route_free_zero(v) == psc_route_equations(v), "routes disagree on AN_MINUS");
  }
  for (int n = 2; n <= 3; ++n) {
    const auto v = variety_of_names({"AN_SIMPLE:" + std::to_string(n)});
    o.require(is_psc(v).status == Status::No, "psc AN_SIMPLE(" + std::to_string(n) + ")");
    o.require(psc_route_free_zero(v) == psc_route_equations(v), "routes disagree on AN_SIMPLE");
  }
  std::vector<VarietyHandle> an;
  for (int n = 1; n <= 4; ++n) an.push_back(variety_of_names({"AN_MINUS:" + std::to_string(n)}));
  for (std::size_t i = 0; i < an.size(); ++i)
    for (std::size_t j = i + 1; j < an.size(); ++j) o.require(!equals(an[i], an[j]), "AN_MINUS varieties coincide");
  if (o.ok) o.detail = "sc=hsc=Yes on {" + yes + "}; psc routes agree; AN_MINUS(1..4) distinct";
  return o;
}

Outcome oracles() {
  Outcome o;
  const auto dl = cg_dl_battery(7);
  const auto k4 = cg_k4_battery();
  const auto tr = tau_rho_battery(1000);
  o.require(dl.passed, dl.detail);
  o.require(k4.passed, k4.detail);
  o.require(tr.passed, tr.detail);
  if (o.ok) o.detail = battery_note(dl) + ", " + battery_note(k4) + ", " + battery_note(tr);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, 60, figure2_catalog}, {2, 600, figure1},     {3, 120, figure4_lattice}, {4, 600, thm610},
      {5, 600, splitting},      {6, 300, duality},     {7, 60, examples},         {8, 120, free_algebras},
      {9, 600, completeness},   {10, 300, oracles}};
  int failures = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(int(c.limit_s)) + " s limit)";
    }
    failures += !o.ok;
    std::printf("criterion %d: %s (%.2f s) %s\n", c.id, o.ok ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
