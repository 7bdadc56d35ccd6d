#include "bilat/lattice.hpp"

#include <algorithm>
#include <bit>

namespace bilat {

namespace {

int popcnt(uint64_t x) { return std::popcount(x); }

// Unique maximum of the set `s` under the order given by `up` rows, or -1.
int max_of(const std::vector<uint64_t>& up, uint64_t s) {
  int best = -1;
  for (int a = 0; a < (int)up.size(); ++a) {
    if (!((s >> a) & 1u)) continue;
    if ((up[a] & s) == (uint64_t(1) << a)) {  // nothing in s strictly above a
      if (best != -1) return -1;  // two maximal elements
      best = a;
    }
  }
  return best;
}

}  // namespace

int FiniteLattice::bottom() const {
  int b = 0;
  for (int a = 1; a < n; ++a) b = meet(b, a);
  return b;
}

int FiniteLattice::top() const {
  int t = 0;
  for (int a = 1; a < n; ++a) t = join(t, a);
  return t;
}

FiniteLattice FiniteLattice::from_rows(int n, std::vector<uint64_t> up_rows) {
  if (n < 1 || n > 64) throw error(errc::carrier_too_large, "carrier size " + std::to_string(n));
  FiniteLattice L;
  L.n = n;
  L.up = std::move(up_rows);
  L.dn.assign(n, 0);
  const uint64_t all = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
  for (int a = 0; a < n; ++a) {
    L.up[a] &= all;
    if (!((L.up[a] >> a) & 1u)) throw error(errc::not_a_poset, "not reflexive at " + std::to_string(a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((L.up[a] >> b) & 1u) L.dn[b] |= uint64_t(1) << a;
  // antisymmetry + transitivity
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && L.leq(a, b) && L.leq(b, a))
        throw error(errc::not_a_poset, "not antisymmetric");
      if (L.leq(a, b) && (L.up[b] & ~L.up[a]))
        throw error(errc::not_a_poset, "not transitive");
    }
  L.meet_tab.assign(size_t(n) * n, 0);
  L.join_tab.assign(size_t(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      uint64_t lb = L.dn[a] & L.dn[b];
      int m = max_of(L.up, lb);
      if (m < 0)
        throw error(errc::not_a_lattice,
                    "no infimum for (" + std::to_string(a) + "," + std::to_string(b) + ")");
      L.meet_tab[a * n + b] = (uint8_t)m;
      uint64_t ub = L.up[a] & L.up[b];
      // unique minimum of ub
      int j = -1;
      for (int c = 0; c < n; ++c) {
        if (!((ub >> c) & 1u)) continue;
        if ((L.dn[c] & ub) == (uint64_t(1) << c)) {
          if (j != -1) { j = -2; break; }
          j = c;
        }
      }
      if (j < 0)
        throw error(errc::not_a_lattice,
                    "no supremum for (" + std::to_string(a) + "," + std::to_string(b) + ")");
      L.join_tab[a * n + b] = (uint8_t)j;
    }
  return L;
}

FiniteLattice FiniteLattice::from_order(int n, const std::vector<std::vector<bool>>& leq) {
  if (n < 1 || n > 64) throw error(errc::carrier_too_large, "carrier size " + std::to_string(n));
  if ((int)leq.size() != n) throw error(errc::invalid_input, "leq matrix size mismatch");
  std::vector<uint64_t> rows(n, 0);
  for (int a = 0; a < n; ++a) {
    if ((int)leq[a].size() != n) throw error(errc::invalid_input, "leq row size mismatch");
    for (int b = 0; b < n; ++b)
      if (leq[a][b]) rows[a] |= uint64_t(1) << b;
  }
  return from_rows(n, std::move(rows));
}

FiniteLattice FiniteLattice::chain(int n) {
  std::vector<uint64_t> rows(n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) rows[a] |= uint64_t(1) << b;
  return from_rows(n, std::move(rows));
}

FiniteLattice FiniteLattice::boolean(int k) {
  int n = 1 << k;
  std::vector<uint64_t> rows(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((a & b) == a) rows[a] |= uint64_t(1) << b;
  return from_rows(n, std::move(rows));
}

FiniteLattice FiniteLattice::diamond_m3() {
  // 0 = bottom, 1,2,3 atoms, 4 = top
  std::vector<uint64_t> rows(5, 0);
  for (int a = 0; a < 5; ++a) rows[a] |= uint64_t(1) << a;
  for (int a = 1; a <= 3; ++a) { rows[0] |= uint64_t(1) << a; rows[a] |= uint64_t(1) << 4; }
  rows[0] |= uint64_t(1) << 4;
  return from_rows(5, std::move(rows));
}

FiniteLattice FiniteLattice::dual() const {
  return from_rows(n, dn);
}

bool is_distributive(const FiniteLattice& L) {
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y)
      for (int z = 0; z < L.n; ++z) {
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return false;
        if (L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), L.join(x, z))) return false;
      }
  return true;
}

int relative_complement(const FiniteLattice& L, int a, int b) {
  int one = L.top();
  int found = -1;
  for (int c = 0; c < L.n; ++c) {
    if (L.meet(a, c) == L.meet(a, b) && L.join(a, c) == one) {
      if (found != -1)
        throw error(errc::no_complement, "relative complement not unique");
      found = c;
    }
  }
  if (found < 0)
    throw error(errc::no_complement,
                "(" + std::to_string(a) + "," + std::to_string(b) + ")");
  return found;
}

bool is_relatively_complemented(const FiniteLattice& L) {
  int one = L.top();
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b) {
      bool ok = false;
      for (int c = 0; c < L.n && !ok; ++c)
        ok = L.meet(a, c) == L.meet(a, b) && L.join(a, c) == one;
      if (!ok) return false;
    }
  return true;
}

bool is_dual_disjunctive(const FiniteLattice& L) {
  int one = L.top();
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b) {
      if (a == b || !L.leq(a, b)) continue;  // need a < b
      bool ok = false;
      for (int c = 0; c < L.n && !ok; ++c)
        ok = L.join(a, c) != one && L.join(b, c) == one;
      if (!ok) return false;
    }
  return true;
}

InvolutiveLattice check_involution(const FiniteLattice& L, std::vector<int> inv) {
  if ((int)inv.size() != L.n) throw error(errc::invalid_input, "inv table size");
  for (int a = 0; a < L.n; ++a) {
    if (inv[a] < 0 || inv[a] >= L.n) throw error(errc::invalid_input, "inv out of range");
    if (inv[inv[a]] != a) throw error(errc::not_involutive, "at " + std::to_string(a));
  }
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b)
      if (L.leq(a, b) && !L.leq(inv[b], inv[a]))
        throw error(errc::not_antitone,
                    "(" + std::to_string(a) + "," + std::to_string(b) + ")");
  return InvolutiveLattice{L, std::move(inv)};
}

InvolutionClass classify_involution(const InvolutiveLattice& M) {
  const FiniteLattice& L = M.base;
  InvolutionClass c;
  c.de_morgan = is_distributive(L);
  if (!c.de_morgan) return c;
  c.kleene = true;
  for (int x = 0; x < L.n && c.kleene; ++x)
    for (int y = 0; y < L.n && c.kleene; ++y)
      if (L.meet(L.meet(x, M.inv[x]), L.join(y, M.inv[y])) != L.meet(x, M.inv[x]))
        c.kleene = false;
  if (!c.kleene) return c;
  c.boolean_ = true;
  for (int x = 0; x < L.n && c.boolean_; ++x)
    for (int y = 0; y < L.n && c.boolean_; ++y)
      if (L.meet(x, L.join(y, M.inv[y])) != x) c.boolean_ = false;
  return c;
}

ClassicalImplicativeLattice make_classical_implicative(const FiniteLattice& L) {
  if (!is_distributive(L)) throw error(errc::not_distributive, "base lattice");
  ClassicalImplicativeLattice C;
  C.base = L;
  C.relcomp.assign(size_t(L.n) * L.n, 0);
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b)
      C.relcomp[a * L.n + b] = (uint8_t)relative_complement(L, a, b);
  return C;
}

ClassicalImplicativeLattice check_classical_implicative(const FiniteLattice& L,
                                                        std::vector<uint8_t> relcomp) {
  if (!is_distributive(L)) throw error(errc::not_distributive, "base lattice");
  if (relcomp.size() != size_t(L.n) * L.n) throw error(errc::invalid_input, "relcomp size");
  int one = L.top();
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b) {
      int c = relcomp[a * L.n + b];
      if (c >= L.n || L.meet(a, c) != L.meet(a, b) || L.join(a, c) != one)
        throw error(errc::no_complement,
                    "bad relcomp entry (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  return ClassicalImplicativeLattice{L, std::move(relcomp)};
}

namespace {

bool iso_backtrack(const FiniteLattice& L1, const FiniteLattice& L2,
                   const std::vector<int>* inv1, const std::vector<int>* inv2,
                   std::vector<int>& map, std::vector<bool>& used, int next) {
  int n = L1.n;
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (popcnt(L1.dn[next]) != popcnt(L2.dn[cand]) ||
        popcnt(L1.up[next]) != popcnt(L2.up[cand]))
      continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      if (L1.leq(prev, next) != L2.leq(map[prev], cand)) ok = false;
      if (L1.leq(next, prev) != L2.leq(cand, map[prev])) ok = false;
    }
    if (ok && inv1) {
      // check involution compatibility on the pairs decided so far
      map[next] = cand;
      for (int x = 0; x <= next && ok; ++x) {
        int ix = (*inv1)[x];
        if (ix <= next && (*inv2)[map[x]] != map[ix]) ok = false;
      }
    }
    if (!ok) continue;
    map[next] = cand;
    used[cand] = true;
    if (iso_backtrack(L1, L2, inv1, inv2, map, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> lattice_iso(const FiniteLattice& L1, const FiniteLattice& L2,
                                            const std::vector<int>* inv1,
                                            const std::vector<int>* inv2) {
  if (L1.n != L2.n) return std::nullopt;
  if ((inv1 == nullptr) != (inv2 == nullptr)) throw error(errc::invalid_input, "iso: inv tables");
  std::vector<int> map(L1.n, -1);
  std::vector<bool> used(L1.n, false);
  if (!iso_backtrack(L1, L2, inv1, inv2, map, used, 0)) return std::nullopt;
  return map;
}

std::vector<FiniteLattice> enumerate_lattices(int max_n) {
  if (max_n > 6) throw error(errc::carrier_too_large, "lattice enumeration capped at 6");
  std::vector<FiniteLattice> out;
  for (int n = 1; n <= max_n; ++n) {
    // Strict pairs i<j (numeric); every finite poset has a linear extension, so
    // restricting edges to increasing pairs still reaches every lattice up to iso.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    for (uint32_t bits = 0; bits < (uint32_t(1) << pairs.size()); ++bits) {
      std::vector<uint64_t> rows(n);
      for (int a = 0; a < n; ++a) rows[a] = uint64_t(1) << a;
      for (size_t k = 0; k < pairs.size(); ++k)
        if ((bits >> k) & 1u) rows[pairs[k].first] |= uint64_t(1) << pairs[k].second;
      // transitive closure
      for (int it = 0; it < n; ++it)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            if ((rows[a] >> b) & 1u) rows[a] |= rows[b];
      // only accept relations whose closure equals the chosen edge set, to avoid
      // rebuilding the same poset many times
      bool minimal = true;
      for (size_t k = 0; k < pairs.size() && minimal; ++k)
        if (!((bits >> k) & 1u) && ((rows[pairs[k].first] >> pairs[k].second) & 1u))
          minimal = false;
      if (!minimal) continue;
      FiniteLattice L;
      try {
        L = FiniteLattice::from_rows(n, rows);
      } catch (const error&) {
        continue;
      }
      bool fresh = true;
      for (const auto& K : out)
        if (K.n == n && lattice_iso(K, L)) { fresh = false; break; }
      if (fresh) out.push_back(std::move(L));
    }
  }
  return out;
}

}  // namespace bilat
