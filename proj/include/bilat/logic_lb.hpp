#pragma once
#include <optional>
#include <string>
#include <vector>

#include "bilat/bilattice.hpp"
#include "bilat/filters.hpp"
#include "bilat/term.hpp"

namespace bilat {

// ---- four-valued semantics (FOUR indices: 0 ⊥, 1 f, 2 t, 3 ⊤; Tr = {t,⊤}) ----
int eval_four(const TermPtr& phi, const std::vector<std::string>& vars,
              const std::vector<int>& asg);
bool consequence_lb(const std::vector<TermPtr>& gamma, const TermPtr& phi);   // vars <= 12
bool consequence_lbs(const std::vector<TermPtr>& gamma, const TermPtr& phi);  // with ⊃
// Γ ⊨ φ over an arbitrary matrix ⟨A,F⟩ by brute force (carrier <= 16, vars <= 6).
bool consequence_matrix(const AlgebraView& A, Subset F, const std::vector<TermPtr>& gamma,
                        const TermPtr& phi);
// sequent validity: every h with h[Γ] ⊆ Tr has h(δ) ∈ Tr for some δ ∈ Δ
bool sequent_valid_four(const Sequent& s);

// ---- clause normal form ----
struct Literal {
  std::string var;
  bool negated = false;
  auto operator<=>(const Literal&) const = default;
};
using Clause = std::vector<Literal>;      // sorted, deduped
using NormalForm = std::vector<Clause>;   // sorted, deduped

NormalForm normal_form(const TermPtr& phi);  // {∧,∨,⊗,⊕,¬} formulas only
TermPtr clause_to_term(const Clause& c);
TermPtr normal_form_to_term(const NormalForm& nf);  // ⋀Γ_φ as a right-nested term
bool decide_nf(const std::vector<TermPtr>& gamma, const TermPtr& phi);

// ---- Hilbert calculus for LB: rules R1..R23, no axioms ----
struct RuleSchema {
  std::string name;
  std::vector<TermPtr> premises;  // patterns over metavariables p,q,r
  TermPtr conclusion;
};
const std::vector<RuleSchema>& lb_rules();

struct HilbertStep {
  TermPtr formula;
  std::string rule;       // "premise" or "R1".."R23"
  std::vector<int> from;  // 0-based indices of earlier steps
};
// Throws BadStep on the first invalid step; returns final-formula match.
bool check_hilbert_lb(const std::vector<HilbertStep>& steps,
                      const std::vector<TermPtr>& gamma, const TermPtr& phi);

// first-order pattern matching on ASTs (metavariables are Var nodes)
bool match_pattern(const TermPtr& pattern, const TermPtr& subject,
                   std::map<std::string, TermPtr>& binding);
TermPtr substitute(const TermPtr& pattern, const std::map<std::string, TermPtr>& binding);

// ---- Gentzen calculus G_LB ----
struct GentzenRule {
  std::string name;
  bool left;            // side of the principal formula
  Op shape;             // principal = shape(φ,ψ) or ¬shape / ¬¬
  bool negated;         // principal is ¬(φ shape ψ); shape==Op::Not means ¬¬φ
  bool branching;       // two premises
};
const std::vector<GentzenRule>& gentzen_rules();  // the 18 logical rules

struct GentzenProof {
  Sequent seq;
  std::string rule;  // "ax", "cut", or a logical rule name
  TermPtr cut_formula;
  std::vector<GentzenProof> premises;
};

// Validates every node (Cut allowed); throws BadStep on failure.
bool check_gentzen(const GentzenProof& proof, const Sequent& goal);

enum class ProofSearch { Proved, Refuted, DepthExceeded };
struct GentzenResult {
  ProofSearch status;
  std::optional<GentzenProof> proof;
};
// Backward cut-free search; right side before left, non-branching rules first.
GentzenResult prove_gentzen(const Sequent& s, int depth_limit);

// ---- algebraizability translations for G_LB ----
Equation tau_gentzen(const Sequent& s);             // ⋀Γ ∧ (⋀Γ ⊗ ⋁Δ) ≈ ⋀Γ
std::vector<Sequent> rho_gentzen(const Equation& e);  // {φ▷ψ, ¬φ▷¬ψ, ψ▷φ, ¬ψ▷¬φ}

// ---- Tarski-style closure properties, checked via mutual derivability ----
struct TarskiReport {
  bool pc = false;   // C(φ∧ψ) = C(φ⊗ψ) = C({φ,ψ})
  bool pdi = false;  // C(Γ,φ∨ψ) = C(Γ,φ) ∩ C(Γ,ψ) = C(Γ,φ⊕ψ)
  bool pdn = false;  // C(φ) = C(¬¬φ)
  bool pdm = false;  // the four De Morgan closure equalities
  bool ok() const { return pc && pdi && pdn && pdm; }
};
TarskiReport tarski_properties(unsigned seed, int rounds);

}  // namespace bilat
