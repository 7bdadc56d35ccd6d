#pragma once
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bilat/error.hpp"
#include "bilat/lattice.hpp"

namespace bilat {

// One AST serves both as algebraic term (identity checking, full signature
// including conflation and the derived top constant) and as logical formula
// (the {∧,∨,⊗,⊕,¬} / {...,⊃} fragments).
enum class Op { Var, Not, Conf, And, Or, KAnd, KOr, Imp, Top };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  Op op;
  std::string name;  // Var only
  TermPtr l, r;      // Not/Conf use l only
};

TermPtr mkvar(std::string name);
TermPtr mknot(TermPtr a);
TermPtr mkconf(TermPtr a);
TermPtr mkand(TermPtr a, TermPtr b);
TermPtr mkor(TermPtr a, TermPtr b);
TermPtr mkkand(TermPtr a, TermPtr b);
TermPtr mkkor(TermPtr a, TermPtr b);
TermPtr mkimp(TermPtr a, TermPtr b);
TermPtr mktop();

// Derived connectives, macro-expanded into {⊃,∧,¬}:
TermPtr mk_arrow(TermPtr a, TermPtr b);  // (a⊃b) ∧ (¬b⊃¬a)
TermPtr mk_iff(TermPtr a, TermPtr b);    // (a→b) ∧ (b→a)
TermPtr mk_equiv(TermPtr a, TermPtr b);  // (a⊃b) ∧ (b⊃a)
TermPtr mk_star(TermPtr a, TermPtr b);   // ¬(a → ¬b)

bool term_eq(const TermPtr& a, const TermPtr& b);
int term_cmp(const TermPtr& a, const TermPtr& b);  // total order, for canonical sets
int term_size(const TermPtr& t);                   // AST node count
std::vector<std::string> term_vars(const TermPtr& t);  // sorted, unique
void collect_vars(const TermPtr& t, std::vector<std::string>& out);

// Grammar: variables /[a-z][a-z0-9_]*/; "~" ¬, "&" ∧, "|" ∨, "*" ⊗, "+" ⊕,
// ">" ⊃; precedence ~ > {&,*} > {|,+} > ">"; binary left-assoc except ">"
// (right-assoc, lowest).  parse/print round-trip exactly.
TermPtr parse_formula(const std::string& text, bool allow_imp = true);
std::string print_term(const TermPtr& t);

struct Sequent {
  std::vector<TermPtr> left, right;  // canonical: sorted by term_cmp, deduped
};
Sequent make_sequent(std::vector<TermPtr> left, std::vector<TermPtr> right);
// "φ, ψ |- χ, ξ"; left side may be empty only if allow_empty_left.
Sequent parse_sequent(const std::string& text, bool allow_imp = true,
                      bool allow_empty_left = false);
std::string print_sequent(const Sequent& s);
bool sequent_eq(const Sequent& a, const Sequent& b);

struct Equation {
  TermPtr lhs, rhs;
};
Equation parse_equation(const std::string& text, bool allow_imp = true);
std::string print_equation(const Equation& e);

// Evaluation view over whatever operation tables an algebra has.
struct AlgebraView {
  int n = 0;
  const FiniteLattice* tlat = nullptr;       // ∧, ∨
  const FiniteLattice* klat = nullptr;       // ⊗, ⊕
  const std::vector<int>* neg = nullptr;     // ¬
  const std::vector<int>* conf = nullptr;    // −
  const std::vector<uint8_t>* imp = nullptr; // ⊃, n*n
  int top_const = -1;                        // derived ⊤ (implicative algebras)
};

// Evaluate with variables bound positionally: vars[i] -> asg[i].
int eval_term(const AlgebraView& A, const TermPtr& t,
              const std::vector<std::string>& vars, const std::vector<int>& asg);

// Exhaustive over all assignments; at most 4 variables.
bool check_identity(const AlgebraView& A, const Equation& eq);
// Counterexample assignment (parallel to term_vars of the equation), if any.
std::optional<std::vector<int>> identity_counterexample(const AlgebraView& A, const Equation& eq);

}  // namespace bilat
