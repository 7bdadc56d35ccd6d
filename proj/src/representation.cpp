#include "bilat/representation.hpp"

#include <algorithm>

namespace bilat {

int Congruence::num_classes() const {
  int k = 0;
  for (int a = 0; a < n; ++a)
    if (cls[a] == a) ++k;
  return k;
}

bool Congruence::is_identity() const {
  for (int a = 0; a < n; ++a)
    if (cls[a] != a) return false;
  return true;
}

void Congruence::normalize() {
  std::vector<int> least(n, -1);
  for (int a = 0; a < n; ++a) {
    int& m = least[cls[a]];
    if (m < 0 || a < m) m = a;
  }
  for (int a = 0; a < n; ++a) cls[a] = least[cls[a]];
}

namespace {

Congruence partition_by(const PreBilattice& B, bool (*rel)(const PreBilattice&, int, int)) {
  Congruence c;
  c.n = B.n;
  c.cls.assign(B.n, -1);
  for (int a = 0; a < B.n; ++a) {
    if (c.cls[a] != -1) continue;
    c.cls[a] = a;
    for (int b = a + 1; b < B.n; ++b)
      if (c.cls[b] == -1 && rel(B, a, b)) c.cls[b] = a;
  }
  return c;
}

void verify_congruence_pb(const PreBilattice& B, const Congruence& c, const char* name) {
  // equivalence-ness is by construction; compatibility must be verified
  for (int a = 0; a < B.n; ++a)
    for (int b = 0; b < B.n; ++b) {
      if (!c.same(a, b)) continue;
      for (int x = 0; x < B.n; ++x) {
        if (!c.same(B.meet_t(a, x), B.meet_t(b, x)) ||
            !c.same(B.join_t(a, x), B.join_t(b, x)) ||
            !c.same(B.meet_k(a, x), B.meet_k(b, x)) ||
            !c.same(B.join_k(a, x), B.join_k(b, x)))
          throw error(errc::not_interlaced, std::string(name) + " is not a congruence");
      }
    }
}

}  // namespace

Congruence sim1(const PreBilattice& B) {
  if (!is_interlaced(B)) throw error(errc::not_interlaced, "sim1");
  Congruence c = partition_by(B, [](const PreBilattice& b, int x, int y) {
    return b.join_t(x, y) == b.meet_k(x, y);
  });
  verify_congruence_pb(B, c, "sim1");
  return c;
}

Congruence sim2(const PreBilattice& B) {
  if (!is_interlaced(B)) throw error(errc::not_interlaced, "sim2");
  Congruence c = partition_by(B, [](const PreBilattice& b, int x, int y) {
    return b.meet_t(x, y) == b.meet_k(x, y);
  });
  verify_congruence_pb(B, c, "sim2");
  return c;
}

namespace {

// Lattice on the classes of `c`, ordered via the ⊗ reduct on representatives.
FiniteLattice quotient_lattice(const PreBilattice& B, const Congruence& c,
                               std::vector<int>& reps, std::vector<int>& elem_to_factor) {
  reps.clear();
  for (int a = 0; a < B.n; ++a)
    if (c.cls[a] == a) reps.push_back(a);
  int m = (int)reps.size();
  std::vector<uint64_t> rows(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (c.same(B.meet_k(reps[i], reps[j]), reps[i])) rows[i] |= uint64_t(1) << j;
  elem_to_factor.assign(B.n, -1);
  for (int a = 0; a < B.n; ++a)
    elem_to_factor[a] =
        (int)(std::lower_bound(reps.begin(), reps.end(), c.cls[a]) - reps.begin());
  return FiniteLattice::from_rows(m, rows);
}

void verify_iso(const AlgebraView& src, const AlgebraView& dst,
                const std::vector<int>& h) {
  int n = src.n;
  if (dst.n != n) throw error(errc::invalid_input, "decomposition is not a bijection");
  std::vector<bool> hit(n, false);
  for (int a = 0; a < n; ++a) {
    if (hit[h[a]]) throw error(errc::invalid_input, "decomposition is not a bijection");
    hit[h[a]] = true;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (h[src.tlat->meet(a, b)] != dst.tlat->meet(h[a], h[b]) ||
          h[src.tlat->join(a, b)] != dst.tlat->join(h[a], h[b]) ||
          h[src.klat->meet(a, b)] != dst.klat->meet(h[a], h[b]) ||
          h[src.klat->join(a, b)] != dst.klat->join(h[a], h[b]))
        throw error(errc::invalid_input, "decomposition map is not a lattice homomorphism");
      if (src.imp && h[(*src.imp)[a * n + b]] != (*dst.imp)[h[a] * n + h[b]])
        throw error(errc::invalid_input, "decomposition map does not preserve implication");
    }
  for (int a = 0; a < n; ++a) {
    if (src.neg && h[(*src.neg)[a]] != (*dst.neg)[h[a]])
      throw error(errc::invalid_input, "decomposition map does not preserve negation");
    if (src.conf && h[(*src.conf)[a]] != (*dst.conf)[h[a]])
      throw error(errc::invalid_input, "decomposition map does not preserve conflation");
  }
}

}  // namespace

Decomposition decompose_pre(const PreBilattice& B) {
  Congruence c1 = sim1(B), c2 = sim2(B);
  Decomposition D;
  std::vector<int> reps1, reps2, f1, f2;
  FiniteLattice F1 = quotient_lattice(B, c1, reps1, f1);
  FiniteLattice F2 = quotient_lattice(B, c2, reps2, f2);
  PreBilattice P = product_pre(F1, F2);
  int n2 = F2.n;
  std::vector<int> h(B.n);
  D.iso.resize(B.n);
  for (int a = 0; a < B.n; ++a) {
    D.iso[a] = {f1[a], f2[a]};
    h[a] = f1[a] * n2 + f2[a];
  }
  verify_iso(B.view(), P.view(), h);
  D.inverse.assign(B.n, -1);
  for (int a = 0; a < B.n; ++a) D.inverse[h[a]] = a;
  D.factors = {std::move(F1), std::move(F2)};
  return D;
}

int reg_elem(const Bilattice& B, int a) {
  const PreBilattice& p = B.pre;
  int u = p.join_t(a, p.meet_k(a, B.neg[a]));
  return p.join_k(u, B.neg[u]);
}

uint64_t regular_set(const Bilattice& B) {
  uint64_t s = 0;
  for (int a = 0; a < B.pre.n; ++a)
    if (B.neg[a] == a) s |= uint64_t(1) << a;
  return s;
}

namespace {

struct RegFactor {
  std::vector<int> elems;          // regular elements, ascending index
  std::vector<int> idx;            // carrier -> factor index (or -1)
  FiniteLattice L;                 // ≤k restricted to Reg(B)
};

RegFactor regular_factor(const Bilattice& B) {
  if (!is_interlaced(B.pre)) throw error(errc::not_interlaced, "decompose");
  RegFactor R;
  uint64_t s = regular_set(B);
  R.idx.assign(B.pre.n, -1);
  for (int a = 0; a < B.pre.n; ++a)
    if ((s >> a) & 1u) {
      R.idx[a] = (int)R.elems.size();
      R.elems.push_back(a);
    }
  int m = (int)R.elems.size();
  std::vector<uint64_t> rows(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (B.pre.leq_k(R.elems[i], R.elems[j])) rows[i] |= uint64_t(1) << j;
  R.L = FiniteLattice::from_rows(m, rows);
  return R;
}

Decomposition decompose_via_reg(const Bilattice& B, const std::vector<int>* conf,
                                const std::vector<uint8_t>* imp, int imp_top) {
  RegFactor R = regular_factor(B);
  int m = R.L.n;
  if (m * m != B.pre.n)
    throw error(errc::invalid_input, "regular factor has wrong size");

  Decomposition D;
  std::vector<int> h(B.pre.n);
  D.iso.resize(B.pre.n);
  for (int a = 0; a < B.pre.n; ++a) {
    int x = R.idx[reg_elem(B, a)], y = R.idx[reg_elem(B, B.neg[a])];
    if (x < 0 || y < 0) throw error(errc::invalid_input, "reg left the regular set");
    D.iso[a] = {x, y};
    h[a] = x * m + y;
  }

  Bilattice P = product_bilattice(R.L);
  AlgebraView src = B.view(), dst = P.view();

  std::optional<std::vector<int>> pconf_store;
  ConflatedBilattice PC;
  if (conf) {
    // conflation restricted to Reg(B) is the factor involution
    std::vector<int> inv(m);
    for (int i = 0; i < m; ++i) {
      int c = (*conf)[R.elems[i]];
      if (R.idx[c] < 0)
        throw error(errc::not_commutative, "conflation does not preserve regular elements");
      inv[i] = R.idx[c];
    }
    InvolutiveLattice IL = check_involution(R.L, inv);
    PC = product_conflated(IL);
    src.conf = conf;
    dst = PC.view();
    D.factor_inv = std::move(IL.inv);
  }

  ImplicativeBilattice PI;
  if (imp) {
    std::vector<uint8_t> rc(size_t(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        int v = (*imp)[R.elems[i] * B.pre.n + R.elems[j]];
        int rv = reg_elem(B, v);
        if (R.idx[rv] < 0) throw error(errc::invalid_input, "reg(a imp b) not regular");
        rc[i * m + j] = (uint8_t)R.idx[rv];
      }
    ClassicalImplicativeLattice CL = check_classical_implicative(R.L, rc);
    PI = product_implicative(CL);
    src.imp = imp;
    src.top_const = imp_top;
    dst = PI.view();
    D.factor_relcomp = std::move(CL.relcomp);
  }

  verify_iso(src, dst, h);

  // the paper's explicit inverse formula, checked pointwise
  for (int a = 0; a < B.pre.n; ++a) {
    int x = R.elems[D.iso[a].first], y = R.elems[D.iso[a].second];
    int back = B.pre.join_k(B.pre.meet_k(x, B.pre.join_t(x, y)),
                            B.pre.meet_k(y, B.pre.meet_t(x, y)));
    if (back != a) throw error(errc::invalid_input, "inverse formula failed");
  }
  D.inverse.assign(B.pre.n, -1);
  for (int a = 0; a < B.pre.n; ++a) D.inverse[h[a]] = a;
  D.factors = {std::move(R.L)};
  return D;
}

}  // namespace

Decomposition decompose_bilattice(const Bilattice& B) {
  return decompose_via_reg(B, nullptr, nullptr, -1);
}

Decomposition decompose_conflated(const ConflatedBilattice& B) {
  if (!is_interlaced(B.base.pre)) throw error(errc::not_interlaced, "decompose_conflated");
  if (!B.commutative) throw error(errc::not_commutative, "conflation does not commute with negation");
  return decompose_via_reg(B.base, &B.conf, nullptr, -1);
}

Decomposition decompose_implicative(const ImplicativeBilattice& B) {
  auto bad = implicative_violations(B.base, B.imp);
  if (!bad.empty()) throw error(errc::axiom_violation, bad.front());
  return decompose_via_reg(B.base, nullptr, &B.imp, B.top);
}

}  // namespace bilat
