#include "bilat/term.hpp"

#include <algorithm>
#include <cctype>

namespace bilat {

namespace {
TermPtr mk(Op op, TermPtr l = nullptr, TermPtr r = nullptr, std::string name = {}) {
  auto t = std::make_shared<Term>();
  t->op = op;
  t->name = std::move(name);
  t->l = std::move(l);
  t->r = std::move(r);
  return t;
}
}  // namespace

TermPtr mkvar(std::string name) { return mk(Op::Var, nullptr, nullptr, std::move(name)); }
TermPtr mknot(TermPtr a) { return mk(Op::Not, std::move(a)); }
TermPtr mkconf(TermPtr a) { return mk(Op::Conf, std::move(a)); }
TermPtr mkand(TermPtr a, TermPtr b) { return mk(Op::And, std::move(a), std::move(b)); }
TermPtr mkor(TermPtr a, TermPtr b) { return mk(Op::Or, std::move(a), std::move(b)); }
TermPtr mkkand(TermPtr a, TermPtr b) { return mk(Op::KAnd, std::move(a), std::move(b)); }
TermPtr mkkor(TermPtr a, TermPtr b) { return mk(Op::KOr, std::move(a), std::move(b)); }
TermPtr mkimp(TermPtr a, TermPtr b) { return mk(Op::Imp, std::move(a), std::move(b)); }
TermPtr mktop() { return mk(Op::Top); }

TermPtr mk_arrow(TermPtr a, TermPtr b) {
  return mkand(mkimp(a, b), mkimp(mknot(b), mknot(a)));
}
TermPtr mk_iff(TermPtr a, TermPtr b) { return mkand(mk_arrow(a, b), mk_arrow(b, a)); }
TermPtr mk_equiv(TermPtr a, TermPtr b) { return mkand(mkimp(a, b), mkimp(b, a)); }
TermPtr mk_star(TermPtr a, TermPtr b) { return mknot(mk_arrow(a, mknot(b))); }

bool term_eq(const TermPtr& a, const TermPtr& b) { return term_cmp(a, b) == 0; }

int term_cmp(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return 0;
  if ((int)a->op != (int)b->op) return (int)a->op < (int)b->op ? -1 : 1;
  switch (a->op) {
    case Op::Var:
      return a->name.compare(b->name) < 0 ? -1 : (a->name == b->name ? 0 : 1);
    case Op::Top:
      return 0;
    case Op::Not:
    case Op::Conf:
      return term_cmp(a->l, b->l);
    default: {
      int c = term_cmp(a->l, b->l);
      return c != 0 ? c : term_cmp(a->r, b->r);
    }
  }
}

int term_size(const TermPtr& t) {
  switch (t->op) {
    case Op::Var:
    case Op::Top:
      return 1;
    case Op::Not:
    case Op::Conf:
      return 1 + term_size(t->l);
    default:
      return 1 + term_size(t->l) + term_size(t->r);
  }
}

void collect_vars(const TermPtr& t, std::vector<std::string>& out) {
  switch (t->op) {
    case Op::Var:
      out.push_back(t->name);
      break;
    case Op::Top:
      break;
    case Op::Not:
    case Op::Conf:
      collect_vars(t->l, out);
      break;
    default:
      collect_vars(t->l, out);
      collect_vars(t->r, out);
  }
}

std::vector<std::string> term_vars(const TermPtr& t) {
  std::vector<std::string> v;
  collect_vars(t, v);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// ---------------------------------------------------------------- parsing

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  bool allow_imp;

  explicit Parser(const std::string& str, bool imp) : s(str), allow_imp(imp) {}

  void skip() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw error(errc::syntax_error, what + " at position " + std::to_string(pos));
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  TermPtr atom() {
    skip();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      TermPtr t = imp_level();
      if (!eat(')')) fail("expected ')'");
      return t;
    }
    if (c == '~') {
      ++pos;
      return mknot(atom());
    }
    if (c >= 'a' && c <= 'z') {
      size_t start = pos;
      ++pos;
      while (pos < s.size() &&
             ((s[pos] >= 'a' && s[pos] <= 'z') || (s[pos] >= '0' && s[pos] <= '9') ||
              s[pos] == '_'))
        ++pos;
      return mkvar(s.substr(start, pos - start));
    }
    fail("unexpected character");
  }

  TermPtr mul_level() {  // & and *
    TermPtr t = atom();
    for (;;) {
      char c = peek();
      if (c == '&') { ++pos; t = mkand(t, atom()); }
      else if (c == '*') { ++pos; t = mkkand(t, atom()); }
      else return t;
    }
  }

  TermPtr add_level() {  // | and +
    TermPtr t = mul_level();
    for (;;) {
      char c = peek();
      if (c == '|') {
        // don't swallow the sequent separator "|-"
        if (pos + 1 < s.size() && s[pos + 1] == '-') return t;
        ++pos;
        t = mkor(t, mul_level());
      } else if (c == '+') {
        ++pos;
        t = mkkor(t, mul_level());
      } else
        return t;
    }
  }

  TermPtr imp_level() {  // > right-assoc, lowest
    TermPtr t = add_level();
    if (peek() == '>') {
      if (!allow_imp) fail("'>' not allowed in this language");
      ++pos;
      return mkimp(t, imp_level());
    }
    return t;
  }

  std::vector<TermPtr> formula_list() {
    std::vector<TermPtr> out;
    out.push_back(imp_level());
    while (eat(',')) out.push_back(imp_level());
    return out;
  }
};

}  // namespace

TermPtr parse_formula(const std::string& text, bool allow_imp) {
  Parser p(text, allow_imp);
  TermPtr t = p.imp_level();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return t;
}

Sequent make_sequent(std::vector<TermPtr> left, std::vector<TermPtr> right) {
  auto canon = [](std::vector<TermPtr>& v) {
    std::sort(v.begin(), v.end(),
              [](const TermPtr& a, const TermPtr& b) { return term_cmp(a, b) < 0; });
    v.erase(std::unique(v.begin(), v.end(),
                        [](const TermPtr& a, const TermPtr& b) { return term_eq(a, b); }),
            v.end());
  };
  canon(left);
  canon(right);
  return Sequent{std::move(left), std::move(right)};
}

Sequent parse_sequent(const std::string& text, bool allow_imp, bool allow_empty_left) {
  size_t sep = text.find("|-");
  if (sep == std::string::npos)
    throw error(errc::syntax_error, "sequent must contain '|-'");
  std::string lhs = text.substr(0, sep), rhs = text.substr(sep + 2);
  std::vector<TermPtr> left, right;
  {
    Parser p(lhs, allow_imp);
    p.skip();
    if (p.pos != lhs.size())
      left = p.formula_list();
    else if (!allow_empty_left)
      throw error(errc::syntax_error, "empty left-hand side");
    p.skip();
    if (p.pos != lhs.size()) p.fail("trailing input before '|-'");
  }
  {
    Parser p(rhs, allow_imp);
    right = p.formula_list();
    p.skip();
    if (p.pos != rhs.size()) p.fail("trailing input");
  }
  return make_sequent(std::move(left), std::move(right));
}

bool sequent_eq(const Sequent& a, const Sequent& b) {
  if (a.left.size() != b.left.size() || a.right.size() != b.right.size()) return false;
  for (size_t i = 0; i < a.left.size(); ++i)
    if (!term_eq(a.left[i], b.left[i])) return false;
  for (size_t i = 0; i < a.right.size(); ++i)
    if (!term_eq(a.right[i], b.right[i])) return false;
  return true;
}

Equation parse_equation(const std::string& text, bool allow_imp) {
  size_t sep = text.find('=');
  if (sep == std::string::npos)
    throw error(errc::syntax_error, "equation must contain '='");
  return Equation{parse_formula(text.substr(0, sep), allow_imp),
                  parse_formula(text.substr(sep + 1), allow_imp)};
}

// --------------------------------------------------------------- printing

namespace {

// precedence levels: 0 '>' (lowest), 1 '|','+', 2 '&','*', 3 atoms/'~'
int prec(Op op) {
  switch (op) {
    case Op::Imp: return 0;
    case Op::Or:
    case Op::KOr: return 1;
    case Op::And:
    case Op::KAnd: return 2;
    default: return 3;
  }
}

void print_rec(const TermPtr& t, int min_prec, std::string& out) {
  int p = prec(t->op);
  bool paren = p < min_prec;
  if (paren) out += '(';
  switch (t->op) {
    case Op::Var: out += t->name; break;
    case Op::Top: out += "top()"; break;  // not in the input grammar; debug only
    case Op::Not:
      out += '~';
      print_rec(t->l, 3, out);
      break;
    case Op::Conf:
      out += '-';
      print_rec(t->l, 3, out);
      break;
    case Op::Imp:
      print_rec(t->l, 1, out);
      out += " > ";
      print_rec(t->r, 0, out);
      break;
    default: {
      const char* sym = t->op == Op::And ? " & " : t->op == Op::KAnd ? " * "
                        : t->op == Op::Or ? " | " : " + ";
      print_rec(t->l, p, out);
      out += sym;
      print_rec(t->r, p + 1, out);
    }
  }
  if (paren) out += ')';
}

}  // namespace

std::string print_term(const TermPtr& t) {
  std::string out;
  print_rec(t, 0, out);
  return out;
}

std::string print_sequent(const Sequent& s) {
  std::string out;
  for (size_t i = 0; i < s.left.size(); ++i) {
    if (i) out += ", ";
    out += print_term(s.left[i]);
  }
  out += s.left.empty() ? "|- " : " |- ";
  for (size_t i = 0; i < s.right.size(); ++i) {
    if (i) out += ", ";
    out += print_term(s.right[i]);
  }
  return out;
}

std::string print_equation(const Equation& e) {
  return print_term(e.lhs) + " = " + print_term(e.rhs);
}

// ------------------------------------------------------------- evaluation

int eval_term(const AlgebraView& A, const TermPtr& t,
              const std::vector<std::string>& vars, const std::vector<int>& asg) {
  switch (t->op) {
    case Op::Var: {
      for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == t->name) return asg[i];
      throw error(errc::invalid_input, "unbound variable " + t->name);
    }
    case Op::Top:
      if (A.top_const < 0) throw error(errc::signature_mismatch, "no top constant");
      return A.top_const;
    case Op::Not: {
      if (!A.neg) throw error(errc::signature_mismatch, "no negation");
      return (*A.neg)[eval_term(A, t->l, vars, asg)];
    }
    case Op::Conf: {
      if (!A.conf) throw error(errc::signature_mismatch, "no conflation");
      return (*A.conf)[eval_term(A, t->l, vars, asg)];
    }
    case Op::Imp: {
      if (!A.imp) throw error(errc::signature_mismatch, "no implication");
      int a = eval_term(A, t->l, vars, asg), b = eval_term(A, t->r, vars, asg);
      return (*A.imp)[a * A.n + b];
    }
    case Op::And:
    case Op::Or: {
      if (!A.tlat) throw error(errc::signature_mismatch, "no truth lattice");
      int a = eval_term(A, t->l, vars, asg), b = eval_term(A, t->r, vars, asg);
      return t->op == Op::And ? A.tlat->meet(a, b) : A.tlat->join(a, b);
    }
    default: {  // KAnd, KOr
      if (!A.klat) throw error(errc::signature_mismatch, "no knowledge lattice");
      int a = eval_term(A, t->l, vars, asg), b = eval_term(A, t->r, vars, asg);
      return t->op == Op::KAnd ? A.klat->meet(a, b) : A.klat->join(a, b);
    }
  }
}

std::optional<std::vector<int>> identity_counterexample(const AlgebraView& A,
                                                        const Equation& eq) {
  std::vector<std::string> vars;
  collect_vars(eq.lhs, vars);
  collect_vars(eq.rhs, vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars.size() > 4) throw error(errc::too_many_variables, "identity checker caps at 4");
  std::vector<int> asg(vars.size(), 0);
  for (;;) {
    if (eval_term(A, eq.lhs, vars, asg) != eval_term(A, eq.rhs, vars, asg)) return asg;
    size_t i = 0;
    for (; i < asg.size(); ++i) {
      if (++asg[i] < A.n) break;
      asg[i] = 0;
    }
    if (i == asg.size()) return std::nullopt;
    if (vars.empty()) return std::nullopt;
  }
}

bool check_identity(const AlgebraView& A, const Equation& eq) {
  return !identity_counterexample(A, eq).has_value();
}

}  // namespace bilat
