#pragma once
#include <vector>

#include "bilat/bilattice.hpp"

namespace bilat {

// Partition of a carrier; cls[a] = least element of a's class.
struct Congruence {
  int n = 0;
  std::vector<int> cls;
  bool same(int a, int b) const { return cls[a] == cls[b]; }
  int num_classes() const;
  bool is_identity() const;
  bool is_total() const { return num_classes() == 1; }
  void normalize();  // re-point every class at its least member
  bool operator==(const Congruence& o) const { return cls == o.cls; }
  bool operator<(const Congruence& o) const { return cls < o.cls; }
};

// ∼₁ (a∨b = a⊗b) and ∼₂ (a∧b = a⊗b); verified to be congruences.
// Throw NotInterlaced when B is not interlaced.
Congruence sim1(const PreBilattice& B);
Congruence sim2(const PreBilattice& B);

struct Decomposition {
  std::vector<FiniteLattice> factors;            // 1 or 2
  std::optional<std::vector<int>> factor_inv;    // conflated case: involution on the factor
  std::optional<std::vector<uint8_t>> factor_relcomp;  // implicative case: a\b on the factor
  std::vector<std::pair<int, int>> iso;          // element -> factor coordinates
  std::vector<int> inverse;                      // i*n2+j -> element
};

// B ≅ (B/∼₁) ⊙ (B/∼₂) with a ↦ ⟨[a]₁, [a]₂⟩; full homomorphism check.
Decomposition decompose_pre(const PreBilattice& B);

// reg(a) = (a ∨ (a ⊗ ¬a)) ⊕ ¬(a ∨ (a ⊗ ¬a)); the set of fixed points of ¬.
int reg_elem(const Bilattice& B, int a);
uint64_t regular_set(const Bilattice& B);

// B ≅ L⊙L for L = ⟨Reg(B),⊗,⊕⟩ via f(a) = ⟨reg(a), reg(¬a)⟩; the inverse
// f⁻¹⟨x,y⟩ = (x⊗(x∨y)) ⊕ (y⊗(x∧y)) is verified pointwise.
Decomposition decompose_bilattice(const Bilattice& B);

// Adds the restricted conflation as involution on the factor; requires the
// conflation to commute with negation (NotCommutative otherwise).
Decomposition decompose_conflated(const ConflatedBilattice& B);

// Factor ⟨Reg(B),⊗,⊕,\⟩ with a\b = reg(a⊃b), a classical implicative lattice;
// the iso additionally preserves ⊃ against the product implication.
Decomposition decompose_implicative(const ImplicativeBilattice& B);

}  // namespace bilat
