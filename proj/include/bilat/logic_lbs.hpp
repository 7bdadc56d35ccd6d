#pragma once
#include <string>
#include <vector>

#include "bilat/bilattice.hpp"
#include "bilat/filters.hpp"
#include "bilat/logic_lb.hpp"
#include "bilat/term.hpp"

namespace bilat {

// ⊃ defined per-matrix: a ⊃ b = t when a ∉ F, else b.  Needs a ≤t-maximum and
// a prime bifilter.  The implication may violate the IB axioms on some logical
// bilattices; violations are reported, not rejected.
struct ImpOnMatrixResult {
  Bilattice base;
  std::vector<uint8_t> imp;
  std::vector<std::string> ib_violations;  // empty iff IB1–IB6 all hold
  std::optional<ImplicativeBilattice> algebra;  // present iff no violations
};
ImpOnMatrixResult imp_on_matrix(const Bilattice& B, Subset F);

// ---- Hilbert calculus H⊃: 17 axiom schemata + modus ponens ----
struct AxiomSchema {
  std::string name;
  std::vector<TermPtr> forms;  // alternative instances of the schema
};
const std::vector<AxiomSchema>& hlbs_axioms();

struct HilbertStepImp {
  TermPtr formula;
  std::string rule;       // "premise", "axiom:<name>", "mp"
  std::vector<int> from;  // mp: {i, j} with step j = step i ⊃ current
};
bool check_hilbert_lbs(const std::vector<HilbertStepImp>& steps,
                       const std::vector<TermPtr>& gamma, const TermPtr& phi);

// Deduction theorem transformation: from a derivation of psi over Γ ∪ {phi},
// produce a derivation of phi ⊃ psi over Γ (Kalmár-style, via ⊃1/⊃2 and MP).
std::vector<HilbertStepImp> ddt_forward(const std::vector<TermPtr>& gamma, const TermPtr& phi,
                                        const TermPtr& psi,
                                        const std::vector<HilbertStepImp>& d);

// ---- algebraizability translations ----
Equation tau_lbs(const TermPtr& phi);  // φ ≈ φ⊃φ
struct RhoResult {
  TermPtr iff;                   // φ ↔ ψ (macro-expanded)
  std::vector<TermPtr> imp_set;  // {φ⊃ψ, ψ⊃φ, ¬φ⊃¬ψ, ¬ψ⊃¬φ}
};
RhoResult rho_lbs(const Equation& e);

// {a : a ≥t ⊤} ⊆ F and closure under modus ponens.
bool check_deductive_filter(const ImplicativeBilattice& A, Subset F);

}  // namespace bilat
