#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "bilat/error.hpp"

namespace bilat {

// Finite lattice on carrier {0, ..., n-1}, n <= 64.  The order relation is kept
// as per-element bitmask rows; meet/join tables are derived at construction and
// validated against the order.
struct FiniteLattice {
  int n = 0;
  std::vector<uint64_t> dn;  // dn[a] = { x : x <= a }
  std::vector<uint64_t> up;  // up[a] = { x : a <= x }
  std::vector<uint8_t> meet_tab, join_tab;  // n*n

  bool leq(int a, int b) const { return (up[a] >> b) & 1u; }
  int meet(int a, int b) const { return meet_tab[a * n + b]; }
  int join(int a, int b) const { return join_tab[a * n + b]; }
  int bottom() const;
  int top() const;

  // Validates the order and derives meet/join; throws NotAPoset / NotALattice.
  static FiniteLattice from_order(int n, const std::vector<std::vector<bool>>& leq);
  static FiniteLattice from_rows(int n, std::vector<uint64_t> up_rows);
  static FiniteLattice chain(int n);
  static FiniteLattice boolean(int num_atoms);  // 2^k subsets under inclusion
  static FiniteLattice diamond_m3();            // 0 < a,b,c < 1
  FiniteLattice dual() const;
};

bool is_distributive(const FiniteLattice& L);

// a\b: the unique c with a ⊓ c = a ⊓ b and a ⊔ c = 1 (top).  Throws NoComplement.
int relative_complement(const FiniteLattice& L, int a, int b);
bool is_relatively_complemented(const FiniteLattice& L);

// For every a < b there is c with a ⊔ c != 1 and b ⊔ c = 1.
bool is_dual_disjunctive(const FiniteLattice& L);

struct InvolutiveLattice {
  FiniteLattice base;
  std::vector<int> inv;
};

struct InvolutionClass {
  bool de_morgan = false;  // distributive base
  bool kleene = false;     // plus (x ⊓ x') ⊓ (y ⊔ y') = x ⊓ x'
  bool boolean_ = false;   // plus x ⊓ (y ⊔ y') = x
};

// Validates inv1 (involution) / inv2 (antitone); throws NotInvolutive / NotAntitone.
InvolutiveLattice check_involution(const FiniteLattice& L, std::vector<int> inv);
InvolutionClass classify_involution(const InvolutiveLattice& L);

struct ClassicalImplicativeLattice {
  FiniteLattice base;             // distributive, with top
  std::vector<uint8_t> relcomp;   // a\b table
  int rc(int a, int b) const { return relcomp[a * base.n + b]; }
};

// Derives the a\b table; throws NoComplement / NotDistributive.
ClassicalImplicativeLattice make_classical_implicative(const FiniteLattice& L);
ClassicalImplicativeLattice check_classical_implicative(const FiniteLattice& L,
                                                        std::vector<uint8_t> relcomp);

// Order isomorphism L1 -> L2; if inv tables are supplied the map must also
// commute with them.  Deterministic (candidates tried in index order).
std::optional<std::vector<int>> lattice_iso(const FiniteLattice& L1, const FiniteLattice& L2,
                                            const std::vector<int>* inv1 = nullptr,
                                            const std::vector<int>* inv2 = nullptr);

// All lattices with 1..max_n elements, up to isomorphism (max_n <= 6).
std::vector<FiniteLattice> enumerate_lattices(int max_n);

}  // namespace bilat
