#include "poma/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace poma {

Term Term::var(std::string name) {
  Term t;
  t.kind = Kind::Var;
  t.name = std::move(name);
  return t;
}
Term Term::zero() { return Term{}; }
Term Term::one() {
  Term t;
  t.kind = Kind::One;
  return t;
}
Term Term::meet(Term l, Term r) {
  Term t;
  t.kind = Kind::Meet;
  t.args = {std::move(l), std::move(r)};
  return t;
}
Term Term::join(Term l, Term r) {
  Term t;
  t.kind = Kind::Join;
  t.args = {std::move(l), std::move(r)};
  return t;
}
Term Term::box(Term a) {
  Term t;
  t.kind = Kind::Box;
  t.args = {std::move(a)};
  return t;
}
Term Term::diamond(Term a) {
  Term t;
  t.kind = Kind::Diamond;
  t.args = {std::move(a)};
  return t;
}

Term iterate_box(Term t, unsigned n) {
  for (unsigned i = 0; i < n; ++i) t = Term::box(std::move(t));
  return t;
}

Term iterate_diamond(Term t, unsigned n) {
  for (unsigned i = 0; i < n; ++i) t = Term::diamond(std::move(t));
  return t;
}

Equation leq_equation(Term l, Term r) {
  Term lhs = Term::meet(l, std::move(r));
  return {std::move(lhs), std::move(l)};
}

// ---------------------------------------------------------------- printing

namespace {

// Precedence contexts: 0 accepts a join, 1 a meet, 2 only unary/atoms.
void print_term(const Term& t, int context, std::string& out) {
  switch (t.kind) {
    case Term::Kind::Var: out += t.name; return;
    case Term::Kind::Zero: out += '0'; return;
    case Term::Kind::One: out += '1'; return;
    case Term::Kind::Box:
    case Term::Kind::Diamond:
      out += t.kind == Term::Kind::Box ? "box " : "dia ";
      print_term(t.args[0], 2, out);
      return;
    case Term::Kind::Meet:
    case Term::Kind::Join: {
      const bool is_join = t.kind == Term::Kind::Join;
      const int own = is_join ? 0 : 1;
      const bool paren = context > own;
      if (paren) out += '(';
      print_term(t.args[0], own, out);
      out += is_join ? " \\/ " : " /\\ ";
      print_term(t.args[1], own + 1, out);
      if (paren) out += ')';
      return;
    }
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  print_term(t, 0, out);
  return out;
}

std::string to_string(const Equation& e) { return to_string(e.lhs) + " ~ " + to_string(e.rhs); }

std::string to_string(const QuasiEquation& q) {
  std::string out;
  for (std::size_t i = 0; i < q.premises.size(); ++i) {
    if (i > 0) out += " & ";
    out += to_string(q.premises[i]);
  }
  if (!q.premises.empty()) out += " => ";
  return out + to_string(q.conclusion);
}

std::string to_string(const PosExistSentence& s) {
  std::string out;
  if (!s.variables.empty()) {
    out += "E ";
    for (std::size_t i = 0; i < s.variables.size(); ++i) {
      if (i > 0) out += ", ";
      out += s.variables[i];
    }
    out += " . ";
  }
  for (std::size_t i = 0; i < s.matrix.size(); ++i) {
    if (i > 0) out += " & ";
    for (std::size_t j = 0; j < s.matrix[i].size(); ++j) {
      if (j > 0) out += " | ";
      out += to_string(s.matrix[i][j]);
    }
  }
  return out;
}

std::string to_string(const Sequent& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(s.antecedent[i]);
  }
  return out + "} |> " + to_string(s.succedent);
}

Sequent make_sequent(std::vector<Term> antecedent, Term succedent) {
  std::vector<std::pair<std::string, Term>> keyed;
  for (auto& t : antecedent) keyed.emplace_back(to_string(t), std::move(t));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  Sequent s;
  for (auto& [key, t] : keyed) s.antecedent.push_back(std::move(t));
  s.succedent = std::move(succedent);
  return s;
}

// ----------------------------------------------------------------- parsing

namespace {

enum class Tok {
  Ident, Zero, One, Box, Dia, And, Or, LParen, RParen, Tilde, Leq, Amp, Implies,
  LBrace, RBrace, Comma, Turnstile, Bar, Dot, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto two = [&](const char* lit) { return s.substr(i, 2) == lit; };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\''))
        ++i;
      std::string word(s.substr(start, i - start));
      Tok kind = word == "box" ? Tok::Box : word == "dia" ? Tok::Dia : Tok::Ident;
      out.push_back({kind, word, start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      std::string digits(s.substr(start, i - start));
      if (digits != "0" && digits != "1") throw ParseError("only the constants 0 and 1 are allowed", start);
      out.push_back({digits == "0" ? Tok::Zero : Tok::One, digits, start});
      continue;
    }
    if (two("/\\")) { out.push_back({Tok::And, "/\\", start}); i += 2; continue; }
    if (two("\\/")) { out.push_back({Tok::Or, "\\/", start}); i += 2; continue; }
    if (two("<=")) { out.push_back({Tok::Leq, "<=", start}); i += 2; continue; }
    if (two("=>")) { out.push_back({Tok::Implies, "=>", start}); i += 2; continue; }
    if (two("|>")) { out.push_back({Tok::Turnstile, "|>", start}); i += 2; continue; }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '~': kind = Tok::Tilde; break;
      case '&': kind = Tok::Amp; break;
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case ',': kind = Tok::Comma; break;
      case '|': kind = Tok::Bar; break;
      case '.': kind = Tok::Dot; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Term term() {
    Term t = meet();
    while (accept(Tok::Or)) t = Term::join(std::move(t), meet());
    return t;
  }

  Equation equation() {
    Term l = term();
    if (accept(Tok::Tilde)) return {std::move(l), term()};
    if (accept(Tok::Leq)) return leq_equation(std::move(l), term());
    fail("expected '~' or '<='");
  }

  QuasiEquation quasi() {
    std::vector<Equation> eqs{equation()};
    while (accept(Tok::Amp)) eqs.push_back(equation());
    if (accept(Tok::Implies)) return {std::move(eqs), equation()};
    if (eqs.size() != 1) fail("expected '=>'");
    return {{}, std::move(eqs.front())};
  }

  PosExistSentence pos_exist() {
    PosExistSentence s;
    if (peek().kind == Tok::Ident && peek().text == "E") {
      ++pos_;
      do {
        s.variables.push_back(expect(Tok::Ident, "expected a variable").text);
      } while (accept(Tok::Comma));
      expect(Tok::Dot, "expected '.'");
    }
    do {
      std::vector<Equation> clause{equation()};
      while (accept(Tok::Bar)) clause.push_back(equation());
      s.matrix.push_back(std::move(clause));
    } while (accept(Tok::Amp));
    return s;
  }

  Sequent sequent() {
    expect(Tok::LBrace, "expected '{'");
    std::vector<Term> ante;
    if (!accept(Tok::RBrace)) {
      ante.push_back(term());
      while (accept(Tok::Comma)) ante.push_back(term());
      expect(Tok::RBrace, "expected '}'");
    }
    expect(Tok::Turnstile, "expected '|>'");
    return make_sequent(std::move(ante), term());
  }

  void finish() {
    if (peek().kind != Tok::End) fail("unexpected trailing input");
  }

 private:
  Term meet() {
    Term t = unary();
    while (accept(Tok::And)) t = Term::meet(std::move(t), unary());
    return t;
  }

  Term unary() {
    if (accept(Tok::Box)) return Term::box(unary());
    if (accept(Tok::Dia)) return Term::diamond(unary());
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Zero: ++pos_; return Term::zero();
      case Tok::One: ++pos_; return Term::one();
      case Tok::Ident: ++pos_; return Term::var(t.text);
      case Tok::LParen: {
        ++pos_;
        Term inner = term();
        expect(Tok::RParen, "expected ')'");
        return inner;
      }
      default: fail("expected a term");
    }
  }

  const Token& peek() const { return toks_[pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, const char* message) {
    if (peek().kind != k) fail(message);
    return toks_[pos_++];
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, peek().pos); }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

template <class F>
auto parse_all(std::string_view text, F&& f) {
  Parser p(text);
  auto result = f(p);
  p.finish();
  return result;
}

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Var) out.insert(t.name);
  for (const auto& a : t.args) collect_vars(a, out);
}

}  // namespace

Term parse_term(std::string_view text) {
  return parse_all(text, [](Parser& p) { return p.term(); });
}
Equation parse_equation(std::string_view text) {
  return parse_all(text, [](Parser& p) { return p.equation(); });
}
QuasiEquation parse_quasi(std::string_view text) {
  return parse_all(text, [](Parser& p) { return p.quasi(); });
}
Sequent parse_sequent(std::string_view text) {
  return parse_all(text, [](Parser& p) { return p.sequent(); });
}
PosExistSentence parse_pos_exist(std::string_view text) {
  PosExistSentence s = parse_all(text, [](Parser& p) { return p.pos_exist(); });
  std::set<std::string> bound(s.variables.begin(), s.variables.end()), used;
  for (const auto& clause : s.matrix)
    for (const auto& e : clause) {
      collect_vars(e.lhs, used);
      collect_vars(e.rhs, used);
    }
  for (const auto& v : used)
    if (!bound.count(v)) throw ParseError("free variable " + v + " in sentence", 0);
  return s;
}

std::vector<std::string> variables(const Term& t) {
  std::set<std::string> vs;
  collect_vars(t, vs);
  return {vs.begin(), vs.end()};
}

std::vector<std::string> variables(const Equation& e) {
  std::set<std::string> vs;
  collect_vars(e.lhs, vs);
  collect_vars(e.rhs, vs);
  return {vs.begin(), vs.end()};
}

std::vector<std::string> variables(const QuasiEquation& q) {
  std::set<std::string> vs;
  for (const auto& e : q.premises) {
    collect_vars(e.lhs, vs);
    collect_vars(e.rhs, vs);
  }
  collect_vars(q.conclusion.lhs, vs);
  collect_vars(q.conclusion.rhs, vs);
  return {vs.begin(), vs.end()};
}

// -------------------------------------------------------------- evaluation

namespace {

// Postfix program with variables resolved to slots.
struct Program {
  struct Op {
    Term::Kind kind;
    std::uint32_t slot;
  };
  std::vector<Op> ops;
};

void compile_into(const Term& t, const std::vector<std::string>& vars, Program& p) {
  for (const auto& a : t.args) compile_into(a, vars, p);
  std::uint32_t slot = 0;
  if (t.kind == Term::Kind::Var) {
    auto it = std::lower_bound(vars.begin(), vars.end(), t.name);
    if (it == vars.end() || *it != t.name) throw PreconditionError("unassigned variable " + t.name);
    slot = std::uint32_t(it - vars.begin());
  }
  p.ops.push_back({t.kind, slot});
}

Program compile(const Term& t, const std::vector<std::string>& sorted_vars) {
  Program p;
  compile_into(t, sorted_vars, p);
  return p;
}

Element run(const FiniteAlgebra& a, const Program& p, const std::vector<Element>& values,
            std::vector<Element>& stack) {
  stack.clear();
  for (const auto& op : p.ops) {
    switch (op.kind) {
      case Term::Kind::Var: stack.push_back(values[op.slot]); break;
      case Term::Kind::Zero: stack.push_back(a.bottom()); break;
      case Term::Kind::One: stack.push_back(a.top()); break;
      case Term::Kind::Box: stack.back() = a.box(stack.back()); break;
      case Term::Kind::Diamond: stack.back() = a.diamond(stack.back()); break;
      case Term::Kind::Meet:
      case Term::Kind::Join: {
        Element r = stack.back();
        stack.pop_back();
        stack.back() = op.kind == Term::Kind::Meet ? a.meet(stack.back(), r) : a.join(stack.back(), r);
        break;
      }
    }
  }
  return stack.back();
}

// Odometer over assignments, first variable most significant.
bool next_assignment(std::vector<Element>& values, std::size_t n) {
  for (std::size_t i = values.size(); i-- > 0;) {
    if (++values[i] < n) return true;
    values[i] = 0;
  }
  return false;
}

Assignment to_assignment(const std::vector<std::string>& vars, const std::vector<Element>& values) {
  Assignment asg;
  for (std::size_t i = 0; i < vars.size(); ++i) asg[vars[i]] = values[i];
  return asg;
}

struct CompiledEquation {
  Program lhs, rhs;
};

CompiledEquation compile(const Equation& e, const std::vector<std::string>& vars) {
  return {compile(e.lhs, vars), compile(e.rhs, vars)};
}

bool run(const FiniteAlgebra& a, const CompiledEquation& e, const std::vector<Element>& values,
         std::vector<Element>& stack) {
  return run(a, e.lhs, values, stack) == run(a, e.rhs, values, stack);
}

}  // namespace

Element eval(const FiniteAlgebra& a, const Term& t, const Assignment& asg) {
  return eval_in<FiniteAlgebra>(a, t, [&](const std::string& name) -> Element {
    auto it = asg.find(name);
    if (it == asg.end()) throw PreconditionError("unassigned variable " + name);
    if (it->second >= a.size()) throw PreconditionError("assigned element out of range for " + name);
    return it->second;
  });
}

HoldsResult holds_eq(const FiniteAlgebra& a, const Equation& e) {
  return holds_quasi(a, QuasiEquation{{}, e});
}

HoldsResult holds_quasi(const FiniteAlgebra& a, const QuasiEquation& q) {
  const auto vars = variables(q);
  std::vector<CompiledEquation> premises;
  for (const auto& p : q.premises) premises.push_back(compile(p, vars));
  const CompiledEquation conclusion = compile(q.conclusion, vars);
  std::vector<Element> values(vars.size(), 0), stack;
  do {
    bool premises_hold = true;
    for (const auto& p : premises)
      if (!run(a, p, values, stack)) {
        premises_hold = false;
        break;
      }
    if (premises_hold && !run(a, conclusion, values, stack))
      return {false, to_assignment(vars, values)};
  } while (next_assignment(values, a.size()));
  return {};
}

bool holds_all(const FiniteAlgebra& a, const std::vector<Equation>& es) {
  for (const auto& e : es)
    if (!holds_eq(a, e).holds) return false;
  return true;
}

std::optional<Assignment> solve_all(const FiniteAlgebra& a, const std::vector<Equation>& es,
                                    const std::vector<std::string>& vars) {
  std::vector<CompiledEquation> compiled;
  for (const auto& e : es) compiled.push_back(compile(e, vars));
  std::vector<Element> values(vars.size(), 0), stack;
  do {
    bool all = true;
    for (const auto& e : compiled)
      if (!run(a, e, values, stack)) {
        all = false;
        break;
      }
    if (all) return to_assignment(vars, values);
  } while (next_assignment(values, a.size()));
  return std::nullopt;
}

bool holds_pos_exist(const FiniteAlgebra& a, const PosExistSentence& s) {
  std::vector<std::string> vars = s.variables;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::vector<std::vector<CompiledEquation>> matrix;
  for (const auto& clause : s.matrix) {
    matrix.emplace_back();
    for (const auto& e : clause) matrix.back().push_back(compile(e, vars));
  }
  std::vector<Element> values(vars.size(), 0), stack;
  do {
    bool all = true;
    for (const auto& clause : matrix) {
      bool any = false;
      for (const auto& e : clause)
        if (run(a, e, values, stack)) {
          any = true;
          break;
        }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  } while (next_assignment(values, a.size()));
  return false;
}

std::vector<Element> term_table(const FiniteAlgebra& a, const Term& t,
                                const std::vector<std::string>& vars) {
  std::vector<std::string> sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != vars) throw PreconditionError("term_table expects sorted variables");
  const Program p = compile(t, vars);
  std::vector<Element> values(vars.size(), 0), stack, out;
  do {
    out.push_back(run(a, p, values, stack));
  } while (next_assignment(values, a.size()));
  return out;
}

Equation tau(const Sequent& s) {
  Term gamma = Term::one();
  for (std::size_t i = 0; i < s.antecedent.size(); ++i)
    gamma = i == 0 ? s.antecedent[0] : Term::meet(std::move(gamma), s.antecedent[i]);
  return leq_equation(std::move(gamma), s.succedent);
}

std::pair<Sequent, Sequent> rho(const Equation& e) {
  return {make_sequent({e.lhs}, e.rhs), make_sequent({e.rhs}, e.lhs)};
}

}  // namespace poma
