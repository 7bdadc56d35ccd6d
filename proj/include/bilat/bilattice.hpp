#pragma once
#include <optional>
#include <string>
#include <vector>

#include "bilat/lattice.hpp"
#include "bilat/term.hpp"

namespace bilat {

// Two lattice structures over one shared index space.  Element names (f, t,
// bot, top, a, b, ...) are optional labels for printing only.
struct PreBilattice {
  int n = 0;
  FiniteLattice tlat;  // ∧, ∨, ≤t
  FiniteLattice klat;  // ⊗, ⊕, ≤k
  std::vector<std::string> labels;

  bool leq_t(int a, int b) const { return tlat.leq(a, b); }
  bool leq_k(int a, int b) const { return klat.leq(a, b); }
  int meet_t(int a, int b) const { return tlat.meet(a, b); }   // ∧
  int join_t(int a, int b) const { return tlat.join(a, b); }   // ∨
  int meet_k(int a, int b) const { return klat.meet(a, b); }   // ⊗
  int join_k(int a, int b) const { return klat.join(a, b); }   // ⊕
  std::string label(int a) const {
    return a < (int)labels.size() && !labels[a].empty() ? labels[a] : std::to_string(a);
  }
  AlgebraView view() const { return AlgebraView{n, &tlat, &klat}; }
};

struct Bilattice {
  PreBilattice pre;
  std::vector<int> neg;
  AlgebraView view() const {
    AlgebraView v = pre.view();
    v.neg = &neg;
    return v;
  }
};

struct ConflatedBilattice {
  Bilattice base;
  std::vector<int> conf;
  bool commutative = false;  // ¬−a = −¬a for all a (derived at construction)
  AlgebraView view() const {
    AlgebraView v = base.view();
    v.conf = &conf;
    return v;
  }
};

struct ImplicativeBilattice {
  Bilattice base;
  std::vector<uint8_t> imp;  // n*n
  int top = -1;              // derived constant ⊤ = (a⊃a) ⊕ ¬(a⊃a)
  int imp_at(int a, int b) const { return imp[a * base.pre.n + b]; }
  AlgebraView view() const {
    AlgebraView v = base.view();
    v.imp = &imp;
    v.top_const = top;
    return v;
  }
};

// ---- product constructions (index of ⟨i,j⟩ is i*n2 + j) ----
PreBilattice product_pre(const FiniteLattice& L1, const FiniteLattice& L2);
Bilattice product_bilattice(const FiniteLattice& L);
ConflatedBilattice product_conflated(const InvolutiveLattice& L);
ImplicativeBilattice product_implicative(const ClassicalImplicativeLattice& L);

// ---- predicates ----
bool is_interlaced(const PreBilattice& B);
bool is_distributive_pb(const PreBilattice& B);  // all twelve distributive laws

// ---- validating constructors ----
PreBilattice check_pre_bilattice(FiniteLattice tlat, FiniteLattice klat,
                                 std::vector<std::string> labels = {});
Bilattice check_bilattice(PreBilattice pre, std::vector<int> neg);         // neg1–neg3
ConflatedBilattice check_conflation(Bilattice b, std::vector<int> conf);   // con1–con3
// IB1–IB6 exhaustively; throws AxiomViolation naming the first failing IBk.
ImplicativeBilattice check_implicative(Bilattice b, std::vector<uint8_t> imp);
// The same check without throwing: list of violated axiom names ("IB1".."IB6").
std::vector<std::string> implicative_violations(const Bilattice& b,
                                                const std::vector<uint8_t>& imp);
int derive_top(const Bilattice& b, const std::vector<uint8_t>& imp);  // -1 if not constant

// ---- named algebras ----
// FOUR, FOUR_IMP, FIVE, SEVEN, NINE.  FOUR/NINE come from products of chains,
// FIVE/SEVEN from explicit order tables transcribed from the diagrams.
struct AnyAlgebra {
  PreBilattice pre;
  std::optional<std::vector<int>> neg;
  std::optional<std::vector<int>> conf;
  std::optional<std::vector<uint8_t>> imp;
  AlgebraView view() const;
  int label_index(const std::string& label) const;  // -1 if unknown
};
AnyAlgebra named_algebra(const std::string& name);

// FOUR indexing convention used throughout: 0 = ⊥, 1 = f, 2 = t, 3 = ⊤.
inline constexpr int FOUR_BOT = 0, FOUR_F = 1, FOUR_T = 2, FOUR_TOP = 3;
inline constexpr uint64_t FOUR_TR = (uint64_t(1) << FOUR_T) | (uint64_t(1) << FOUR_TOP);

}  // namespace bilat
