#include "bilat/logic_lb.hpp"

#include <algorithm>

#include "bilat/randgen.hpp"

namespace bilat {

// --------------------------------------------------------------- semantics

namespace {

// FOUR as pairs ⟨for, against⟩ over the 2-chain; index = 2*for + against.
inline int f_of(int a) { return a >> 1; }
inline int a_of(int a) { return a & 1; }
inline int mk4(int f, int a) { return 2 * f + a; }

int eval4(const TermPtr& t, const std::vector<std::string>& vars,
          const std::vector<int>& asg) {
  switch (t->op) {
    case Op::Var:
      for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == t->name) return asg[i];
      throw error(errc::invalid_input, "unbound variable " + t->name);
    case Op::Not: {
      int v = eval4(t->l, vars, asg);
      return mk4(a_of(v), f_of(v));
    }
    case Op::And: {
      int x = eval4(t->l, vars, asg), y = eval4(t->r, vars, asg);
      return mk4(f_of(x) & f_of(y), a_of(x) | a_of(y));
    }
    case Op::Or: {
      int x = eval4(t->l, vars, asg), y = eval4(t->r, vars, asg);
      return mk4(f_of(x) | f_of(y), a_of(x) & a_of(y));
    }
    case Op::KAnd: {
      int x = eval4(t->l, vars, asg), y = eval4(t->r, vars, asg);
      return x & y;
    }
    case Op::KOr: {
      int x = eval4(t->l, vars, asg), y = eval4(t->r, vars, asg);
      return x | y;
    }
    case Op::Imp: {
      int x = eval4(t->l, vars, asg);
      return f_of(x) == 0 ? FOUR_T : eval4(t->r, vars, asg);
    }
    default:
      throw error(errc::signature_mismatch, "connective not in the LB language");
  }
}

std::vector<std::string> gather_vars(const std::vector<TermPtr>& gamma, const TermPtr& phi,
                                     size_t cap) {
  std::vector<std::string> vars;
  for (const auto& g : gamma) collect_vars(g, vars);
  collect_vars(phi, vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars.size() > cap)
    throw error(errc::too_many_variables, std::to_string(vars.size()) + " > " + std::to_string(cap));
  return vars;
}

bool designated4(int v) { return f_of(v) == 1; }  // Tr = {t, ⊤}

bool consequence_four(const std::vector<TermPtr>& gamma, const TermPtr& phi) {
  std::vector<std::string> vars = gather_vars(gamma, phi, 12);
  size_t total = 1;
  for (size_t i = 0; i < vars.size(); ++i) total *= 4;
  std::vector<int> asg(vars.size(), 0);
  for (size_t it = 0; it < total; ++it) {
    size_t x = it;
    for (size_t i = 0; i < vars.size(); ++i) { asg[i] = x & 3; x >>= 2; }
    bool prem = true;
    for (const auto& g : gamma)
      if (!designated4(eval4(g, vars, asg))) { prem = false; break; }
    if (prem && !designated4(eval4(phi, vars, asg))) return false;
  }
  return true;
}

}  // namespace

int eval_four(const TermPtr& phi, const std::vector<std::string>& vars,
              const std::vector<int>& asg) {
  return eval4(phi, vars, asg);
}

bool consequence_lb(const std::vector<TermPtr>& gamma, const TermPtr& phi) {
  return consequence_four(gamma, phi);
}

bool consequence_lbs(const std::vector<TermPtr>& gamma, const TermPtr& phi) {
  return consequence_four(gamma, phi);
}

bool consequence_matrix(const AlgebraView& A, Subset F, const std::vector<TermPtr>& gamma,
                        const TermPtr& phi) {
  if (A.n > 16) throw error(errc::carrier_too_large, "consequence_matrix caps at 16");
  std::vector<std::string> vars = gather_vars(gamma, phi, 6);
  size_t total = 1;
  for (size_t i = 0; i < vars.size(); ++i) total *= A.n;
  std::vector<int> asg(vars.size(), 0);
  for (size_t it = 0; it < total; ++it) {
    size_t x = it;
    for (size_t i = 0; i < vars.size(); ++i) { asg[i] = (int)(x % A.n); x /= A.n; }
    bool prem = true;
    for (const auto& g : gamma)
      if (!((F >> eval_term(A, g, vars, asg)) & 1u)) { prem = false; break; }
    if (prem && !((F >> eval_term(A, phi, vars, asg)) & 1u)) return false;
  }
  return true;
}

bool sequent_valid_four(const Sequent& s) {
  std::vector<std::string> vars;
  for (const auto& g : s.left) collect_vars(g, vars);
  for (const auto& d : s.right) collect_vars(d, vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars.size() > 12) throw error(errc::too_many_variables, "sequent validity caps at 12");
  size_t total = 1;
  for (size_t i = 0; i < vars.size(); ++i) total *= 4;
  std::vector<int> asg(vars.size(), 0);
  for (size_t it = 0; it < total; ++it) {
    size_t x = it;
    for (size_t i = 0; i < vars.size(); ++i) { asg[i] = x & 3; x >>= 2; }
    bool prem = true;
    for (const auto& g : s.left)
      if (!designated4(eval4(g, vars, asg))) { prem = false; break; }
    if (!prem) continue;
    bool concl = false;
    for (const auto& d : s.right)
      if (designated4(eval4(d, vars, asg))) { concl = true; break; }
    if (!concl) return false;
  }
  return true;
}

// ------------------------------------------------------------- normal form

namespace {

void canon_clause(Clause& c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
}

NormalForm canon_nf(NormalForm nf) {
  for (auto& c : nf) canon_clause(c);
  std::sort(nf.begin(), nf.end());
  nf.erase(std::unique(nf.begin(), nf.end()), nf.end());
  return nf;
}

NormalForm nf_union(NormalForm a, const NormalForm& b) {
  a.insert(a.end(), b.begin(), b.end());
  return canon_nf(std::move(a));
}

NormalForm nf_pairwise(const NormalForm& a, const NormalForm& b) {
  NormalForm out;
  for (const auto& ca : a)
    for (const auto& cb : b) {
      Clause c = ca;
      c.insert(c.end(), cb.begin(), cb.end());
      out.push_back(std::move(c));
    }
  return canon_nf(std::move(out));
}

// `neg` = formula occurs under an (odd) negation
NormalForm nf_rec(const TermPtr& phi, bool neg) {
  switch (phi->op) {
    case Op::Var:
      return {{Literal{phi->name, neg}}};
    case Op::Not:
      return nf_rec(phi->l, !neg);
    case Op::And:   // ¬(φ∧ψ) behaves as ¬φ∨¬ψ
      return neg ? nf_pairwise(nf_rec(phi->l, true), nf_rec(phi->r, true))
                 : nf_union(nf_rec(phi->l, false), nf_rec(phi->r, false));
    case Op::Or:    // ¬(φ∨ψ) behaves as ¬φ∧¬ψ
      return neg ? nf_union(nf_rec(phi->l, true), nf_rec(phi->r, true))
                 : nf_pairwise(nf_rec(phi->l, false), nf_rec(phi->r, false));
    case Op::KAnd:  // ⊗ as ∧ (R16/R17); ¬(φ⊗ψ) as ¬φ⊗¬ψ (R20/R21)
      return nf_union(nf_rec(phi->l, neg), nf_rec(phi->r, neg));
    case Op::KOr:   // ⊕ as ∨ (R18/R19); ¬(φ⊕ψ) as ¬φ⊕¬ψ (R22/R23)
      return nf_pairwise(nf_rec(phi->l, neg), nf_rec(phi->r, neg));
    default:
      throw error(errc::signature_mismatch, "normal form is for the {∧,∨,⊗,⊕,¬} language");
  }
}

}  // namespace

NormalForm normal_form(const TermPtr& phi) { return nf_rec(phi, false); }

TermPtr clause_to_term(const Clause& c) {
  TermPtr t;
  for (const auto& lit : c) {
    TermPtr u = lit.negated ? mknot(mkvar(lit.var)) : mkvar(lit.var);
    t = t ? mkor(t, u) : u;
  }
  return t;
}

TermPtr normal_form_to_term(const NormalForm& nf) {
  TermPtr t;
  for (const auto& c : nf) {
    TermPtr u = clause_to_term(c);
    t = t ? mkand(t, u) : u;
  }
  return t;
}

bool decide_nf(const std::vector<TermPtr>& gamma, const TermPtr& phi) {
  NormalForm goal = normal_form(phi);
  NormalForm pool;
  for (const auto& g : gamma) {
    NormalForm n = normal_form(g);
    pool.insert(pool.end(), n.begin(), n.end());
  }
  for (const auto& c : goal) {
    bool found = false;
    for (const auto& g : pool) {
      if (std::includes(c.begin(), c.end(), g.begin(), g.end())) { found = true; break; }
    }
    if (!found) return false;
  }
  return !gamma.empty() || goal.empty();
}

// --------------------------------------------------------- Hilbert calculus

namespace {

std::vector<RuleSchema> build_lb_rules() {
  TermPtr p = mkvar("p"), q = mkvar("q"), r = mkvar("r");
  std::vector<RuleSchema> rules;
  auto add = [&rules](std::string name, std::vector<TermPtr> prem, TermPtr concl) {
    rules.push_back({std::move(name), std::move(prem), std::move(concl)});
  };
  add("R1", {mkand(p, q)}, p);
  add("R2", {mkand(p, q)}, q);
  add("R3", {p, q}, mkand(p, q));
  add("R4", {p}, mkor(p, q));
  add("R5", {mkor(p, q)}, mkor(q, p));
  add("R6", {mkor(p, p)}, p);
  add("R7", {mkor(p, mkor(q, r))}, mkor(mkor(p, q), r));
  add("R8", {mkor(p, mkand(q, r))}, mkand(mkor(p, q), mkor(p, r)));
  add("R9", {mkand(mkor(p, q), mkor(p, r))}, mkor(p, mkand(q, r)));
  add("R10", {mkor(p, r)}, mkor(mknot(mknot(p)), r));
  add("R11", {mkor(mknot(mknot(p)), r)}, mkor(p, r));
  add("R12", {mkor(mknot(mkor(p, q)), r)}, mkor(mkand(mknot(p), mknot(q)), r));
  add("R13", {mkor(mkand(mknot(p), mknot(q)), r)}, mkor(mknot(mkor(p, q)), r));
  add("R14", {mkor(mknot(mkand(p, q)), r)}, mkor(mkor(mknot(p), mknot(q)), r));
  add("R15", {mkor(mkor(mknot(p), mknot(q)), r)}, mkor(mknot(mkand(p, q)), r));
  add("R16", {mkor(mkkand(p, q), r)}, mkor(mkand(p, q), r));
  add("R17", {mkor(mkand(p, q), r)}, mkor(mkkand(p, q), r));
  add("R18", {mkor(mkkor(p, q), r)}, mkor(mkor(p, q), r));
  add("R19", {mkor(mkor(p, q), r)}, mkor(mkkor(p, q), r));
  add("R20", {mkor(mkkand(mknot(p), mknot(q)), r)}, mkor(mknot(mkkand(p, q)), r));
  add("R21", {mkor(mknot(mkkand(p, q)), r)}, mkor(mkkand(mknot(p), mknot(q)), r));
  add("R22", {mkor(mkkor(mknot(p), mknot(q)), r)}, mkor(mknot(mkkor(p, q)), r));
  add("R23", {mkor(mknot(mkkor(p, q)), r)}, mkor(mkkor(mknot(p), mknot(q)), r));
  return rules;
}

}  // namespace

const std::vector<RuleSchema>& lb_rules() {
  static const std::vector<RuleSchema> rules = build_lb_rules();
  return rules;
}

bool match_pattern(const TermPtr& pattern, const TermPtr& subject,
                   std::map<std::string, TermPtr>& binding) {
  if (pattern->op == Op::Var) {
    auto it = binding.find(pattern->name);
    if (it == binding.end()) {
      binding.emplace(pattern->name, subject);
      return true;
    }
    return term_eq(it->second, subject);
  }
  if (pattern->op != subject->op) return false;
  switch (pattern->op) {
    case Op::Top: return true;
    case Op::Not:
    case Op::Conf:
      return match_pattern(pattern->l, subject->l, binding);
    default:
      return match_pattern(pattern->l, subject->l, binding) &&
             match_pattern(pattern->r, subject->r, binding);
  }
}

TermPtr substitute(const TermPtr& pattern, const std::map<std::string, TermPtr>& binding) {
  switch (pattern->op) {
    case Op::Var: {
      auto it = binding.find(pattern->name);
      if (it == binding.end()) throw error(errc::invalid_input, "unbound metavariable");
      return it->second;
    }
    case Op::Top:
      return pattern;
    case Op::Not:
      return mknot(substitute(pattern->l, binding));
    case Op::Conf:
      return mkconf(substitute(pattern->l, binding));
    default: {
      TermPtr l = substitute(pattern->l, binding), r = substitute(pattern->r, binding);
      auto t = std::make_shared<Term>();
      t->op = pattern->op;
      t->l = std::move(l);
      t->r = std::move(r);
      return t;
    }
  }
}

bool check_hilbert_lb(const std::vector<HilbertStep>& steps,
                      const std::vector<TermPtr>& gamma, const TermPtr& phi) {
  if (steps.empty()) throw error(errc::bad_step, "empty derivation");
  for (size_t i = 0; i < steps.size(); ++i) {
    const HilbertStep& s = steps[i];
    if (s.rule == "premise") {
      bool found = false;
      for (const auto& g : gamma)
        if (term_eq(g, s.formula)) { found = true; break; }
      if (!found)
        throw error(errc::bad_step, "step " + std::to_string(i) + ": not a premise");
      continue;
    }
    const RuleSchema* rule = nullptr;
    for (const auto& r : lb_rules())
      if (r.name == s.rule) { rule = &r; break; }
    if (!rule) throw error(errc::bad_step, "step " + std::to_string(i) + ": unknown rule " + s.rule);
    if (s.from.size() != rule->premises.size())
      throw error(errc::bad_step, "step " + std::to_string(i) + ": wrong premise count");
    std::map<std::string, TermPtr> binding;
    if (!match_pattern(rule->conclusion, s.formula, binding))
      throw error(errc::bad_step, "step " + std::to_string(i) + ": conclusion mismatch for " + s.rule);
    for (size_t k = 0; k < s.from.size(); ++k) {
      int j = s.from[k];
      if (j < 0 || j >= (int)i)
        throw error(errc::bad_step, "step " + std::to_string(i) + ": bad reference");
      if (!match_pattern(rule->premises[k], steps[j].formula, binding))
        throw error(errc::bad_step, "step " + std::to_string(i) + ": premise mismatch for " + s.rule);
    }
  }
  return term_eq(steps.back().formula, phi);
}

// --------------------------------------------------- algebraizability (G_LB)

namespace {
TermPtr fold_op(const std::vector<TermPtr>& v, TermPtr (*f)(TermPtr, TermPtr)) {
  TermPtr t;
  for (const auto& x : v) t = t ? f(t, x) : x;
  return t;
}
}

Equation tau_gentzen(const Sequent& s) {
  if (s.left.empty() || s.right.empty())
    throw error(errc::invalid_input, "tau needs nonempty sides");
  TermPtr g = fold_op(s.left, mkand);
  TermPtr d = fold_op(s.right, mkor);
  return Equation{mkand(g, mkkand(g, d)), g};
}

std::vector<Sequent> rho_gentzen(const Equation& e) {
  return {
      make_sequent({e.lhs}, {e.rhs}),
      make_sequent({mknot(e.lhs)}, {mknot(e.rhs)}),
      make_sequent({e.rhs}, {e.lhs}),
      make_sequent({mknot(e.rhs)}, {mknot(e.lhs)}),
  };
}

// ------------------------------------------------------- Tarski properties

TarskiReport tarski_properties(unsigned seed, int rounds) {
  std::mt19937 rng(seed);
  std::vector<std::string> vars{"p", "q", "r"};
  auto inter = [](const std::vector<TermPtr>& g, const TermPtr& x) {
    return consequence_lb(g, x);
  };
  auto mutual = [&inter](std::vector<TermPtr> g1, std::vector<TermPtr> g2) {
    for (const auto& x : g2)
      if (!inter(g1, x)) return false;
    for (const auto& x : g1)
      if (!inter(g2, x)) return false;
    return true;
  };
  TarskiReport rep;
  rep.pc = rep.pdi = rep.pdn = rep.pdm = true;
  for (int i = 0; i < rounds; ++i) {
    TermPtr a = random_formula(rng, 1 + (int)(rng() % 5), vars, false);
    TermPtr b = random_formula(rng, 1 + (int)(rng() % 5), vars, false);
    TermPtr g = random_formula(rng, 1 + (int)(rng() % 4), vars, false);
    TermPtr chi = random_formula(rng, 1 + (int)(rng() % 5), vars, false);
    if (!mutual({mkand(a, b)}, {mkkand(a, b)}) || !mutual({mkand(a, b)}, {a, b}))
      rep.pc = false;
    bool lhs = inter({g, mkor(a, b)}, chi);
    bool mid = inter({g, a}, chi) && inter({g, b}, chi);
    bool rhs = inter({g, mkkor(a, b)}, chi);
    if (lhs != mid || lhs != rhs) rep.pdi = false;
    if (!mutual({a}, {mknot(mknot(a))})) rep.pdn = false;
    if (!mutual({mknot(mkand(a, b))}, {mkor(mknot(a), mknot(b))}) ||
        !mutual({mknot(mkor(a, b))}, {mkand(mknot(a), mknot(b))}) ||
        !mutual({mknot(mkkand(a, b))}, {mkkand(mknot(a), mknot(b))}) ||
        !mutual({mknot(mkkor(a, b))}, {mkkor(mknot(a), mknot(b))}))
      rep.pdm = false;
  }
  return rep;
}

}  // namespace bilat
