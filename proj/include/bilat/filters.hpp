#pragma once
#include <vector>

#include "bilat/bilattice.hpp"
#include "bilat/representation.hpp"

namespace bilat {

using Subset = uint64_t;  // bitmask over the carrier

// ---- lattice filters ----
bool is_filter(const FiniteLattice& L, Subset F);        // nonempty, ⊓-closed, upward
bool is_prime_filter(const FiniteLattice& L, Subset F);  // proper + ⊔-splitting
std::vector<Subset> enumerate_filters(const FiniteLattice& L);  // n <= 16, sorted

// ---- bifilters ----
bool is_bifilter(const PreBilattice& B, Subset F);
// Least bifilter containing X; FF(∅) = ∅.  Throws NotInterlaced.
Subset ff_closure(const PreBilattice& B, Subset X);
// Dual closure (least bi-ideal containing X), by dualizing both orders.
Subset ff_closure_dual(const PreBilattice& B, Subset X);
std::vector<Subset> enumerate_bifilters(const PreBilattice& B);  // n <= 16, sorted
bool is_prime_bifilter(const PreBilattice& B, Subset F);

// π_F: the unique epimorphism onto FOUR determined by a prime bifilter of a
// bilattice: a ↦ ⊤/t/f/⊥ by membership of a, ¬a in F.  Verified to be a
// homomorphism with F = π⁻¹[Tr]; throws NotPrimeBifilter.
std::vector<int> pi_F(const Bilattice& B, Subset F);

// ---- congruences of an arbitrary finite algebra (carrier <= 32) ----
Congruence principal_congruence(const AlgebraView& A, int a, int b);
Congruence congruence_join(const AlgebraView& A, const Congruence& x, const Congruence& y);
Congruence congruence_meet(const Congruence& x, const Congruence& y);
std::vector<Congruence> enumerate_congruences(const AlgebraView& A);  // sorted
bool is_subdirectly_irreducible(const AlgebraView& A);

// Largest congruence compatible with F (classes do not straddle F).
Congruence leibniz_congruence(const AlgebraView& A, Subset F);
bool is_reduced(const AlgebraView& A, Subset F);

// Reduced models of the four-valued logic: requires a distributive bilattice
// (NotDistributive otherwise); computes both the separation characterization
// and the Leibniz route and checks they agree.
bool is_reduced_lb_model(const Bilattice& B, Subset F);

// ⟨c,d⟩ ∈ Θ(a,b) vs p(a,b,c) = p(a,b,d) for the quaternary EDPC term
// p(x,y,z) = (x⊃y)⊃((y⊃x)⊃((¬x⊃¬y)⊃((¬y⊃¬x)⊃z))).  Requires ⊃,¬.
std::pair<bool, bool> edpc_principal(const AlgebraView& A, int a, int b, int c, int d);

}  // namespace bilat
