#include "bilat/bilattice.hpp"

#include <algorithm>

namespace bilat {

namespace {

// Product order rows for carrier L1 x L2, index(i,j) = i*n2 + j.
std::vector<uint64_t> product_rows(const FiniteLattice& L1, const FiniteLattice& L2,
                                   bool second_reversed) {
  int n1 = L1.n, n2 = L2.n, n = n1 * n2;
  if (n > 64) throw error(errc::carrier_too_large, "product carrier " + std::to_string(n));
  std::vector<uint64_t> rows(n, 0);
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2) {
          bool le2 = second_reversed ? L2.leq(b2, a2) : L2.leq(a2, b2);
          if (L1.leq(a1, b1) && le2)
            rows[a1 * n2 + a2] |= uint64_t(1) << (b1 * n2 + b2);
        }
  return rows;
}

}  // namespace

PreBilattice product_pre(const FiniteLattice& L1, const FiniteLattice& L2) {
  PreBilattice B;
  B.n = L1.n * L2.n;
  B.tlat = FiniteLattice::from_rows(B.n, product_rows(L1, L2, true));
  B.klat = FiniteLattice::from_rows(B.n, product_rows(L1, L2, false));
  return B;
}

Bilattice product_bilattice(const FiniteLattice& L) {
  Bilattice B;
  B.pre = product_pre(L, L);
  B.neg.resize(B.pre.n);
  for (int a1 = 0; a1 < L.n; ++a1)
    for (int a2 = 0; a2 < L.n; ++a2) B.neg[a1 * L.n + a2] = a2 * L.n + a1;
  return B;
}

ConflatedBilattice product_conflated(const InvolutiveLattice& L) {
  ConflatedBilattice C;
  C.base = product_bilattice(L.base);
  int n2 = L.base.n;
  C.conf.resize(C.base.pre.n);
  for (int a1 = 0; a1 < n2; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      C.conf[a1 * n2 + a2] = L.inv[a2] * n2 + L.inv[a1];
  C.commutative = true;
  for (int a = 0; a < C.base.pre.n; ++a)
    if (C.base.neg[C.conf[a]] != C.conf[C.base.neg[a]]) C.commutative = false;
  return C;
}

ImplicativeBilattice product_implicative(const ClassicalImplicativeLattice& L) {
  ImplicativeBilattice I;
  I.base = product_bilattice(L.base);
  int n2 = L.base.n, n = I.base.pre.n;
  I.imp.assign(size_t(n) * n, 0);
  for (int a1 = 0; a1 < n2; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      for (int b1 = 0; b1 < n2; ++b1)
        for (int b2 = 0; b2 < n2; ++b2)
          I.imp[(a1 * n2 + a2) * n + (b1 * n2 + b2)] =
              (uint8_t)(L.rc(a1, b1) * n2 + L.base.meet(a1, b2));
  I.top = derive_top(I.base, I.imp);
  if (I.top < 0) throw error(errc::axiom_violation, "product implication has no top constant");
  return I;
}

bool is_interlaced(const PreBilattice& B) {
  // every lattice operation monotone with respect to both orders
  for (int a = 0; a < B.n; ++a)
    for (int b = 0; b < B.n; ++b) {
      if (B.leq_t(a, b)) {
        for (int c = 0; c < B.n; ++c) {
          if (!B.leq_t(B.meet_k(a, c), B.meet_k(b, c))) return false;
          if (!B.leq_t(B.join_k(a, c), B.join_k(b, c))) return false;
        }
      }
      if (B.leq_k(a, b)) {
        for (int c = 0; c < B.n; ++c) {
          if (!B.leq_k(B.meet_t(a, c), B.meet_t(b, c))) return false;
          if (!B.leq_k(B.join_t(a, c), B.join_t(b, c))) return false;
        }
      }
    }
  return true;
}

bool is_distributive_pb(const PreBilattice& B) {
  auto op = [&B](int which, int a, int b) {
    switch (which) {
      case 0: return B.meet_t(a, b);
      case 1: return B.join_t(a, b);
      case 2: return B.meet_k(a, b);
      default: return B.join_k(a, b);
    }
  };
  for (int o1 = 0; o1 < 4; ++o1)
    for (int o2 = 0; o2 < 4; ++o2) {
      if (o1 == o2) continue;
      for (int x = 0; x < B.n; ++x)
        for (int y = 0; y < B.n; ++y)
          for (int z = 0; z < B.n; ++z)
            if (op(o1, x, op(o2, y, z)) != op(o2, op(o1, x, y), op(o1, x, z)))
              return false;
    }
  return true;
}

PreBilattice check_pre_bilattice(FiniteLattice tlat, FiniteLattice klat,
                                 std::vector<std::string> labels) {
  if (tlat.n != klat.n) throw error(errc::invalid_input, "carrier mismatch");
  PreBilattice B;
  B.n = tlat.n;
  B.tlat = std::move(tlat);
  B.klat = std::move(klat);
  B.labels = std::move(labels);
  return B;
}

Bilattice check_bilattice(PreBilattice pre, std::vector<int> neg) {
  if ((int)neg.size() != pre.n) throw error(errc::invalid_input, "neg table size");
  for (int a = 0; a < pre.n; ++a) {
    if (neg[a] < 0 || neg[a] >= pre.n) throw error(errc::invalid_input, "neg out of range");
    if (neg[neg[a]] != a) throw error(errc::not_involutive, "neg3 fails at " + pre.label(a));
  }
  for (int a = 0; a < pre.n; ++a)
    for (int b = 0; b < pre.n; ++b) {
      if (pre.leq_t(a, b) && !pre.leq_t(neg[b], neg[a]))
        throw error(errc::not_antitone, "neg1 fails at (" + pre.label(a) + "," + pre.label(b) + ")");
      if (pre.leq_k(a, b) && !pre.leq_k(neg[a], neg[b]))
        throw error(errc::axiom_violation,
                    "neg2 fails at (" + pre.label(a) + "," + pre.label(b) + ")");
    }
  return Bilattice{std::move(pre), std::move(neg)};
}

ConflatedBilattice check_conflation(Bilattice b, std::vector<int> conf) {
  const PreBilattice& pre = b.pre;
  if ((int)conf.size() != pre.n) throw error(errc::invalid_input, "conf table size");
  for (int a = 0; a < pre.n; ++a) {
    if (conf[a] < 0 || conf[a] >= pre.n) throw error(errc::invalid_input, "conf out of range");
    if (conf[conf[a]] != a) throw error(errc::not_involutive, "con3 fails at " + pre.label(a));
  }
  for (int x = 0; x < pre.n; ++x)
    for (int y = 0; y < pre.n; ++y) {
      if (pre.leq_k(x, y) && !pre.leq_k(conf[y], conf[x]))
        throw error(errc::not_antitone, "con1 fails at (" + pre.label(x) + "," + pre.label(y) + ")");
      if (pre.leq_t(x, y) && !pre.leq_t(conf[x], conf[y]))
        throw error(errc::axiom_violation,
                    "con2 fails at (" + pre.label(x) + "," + pre.label(y) + ")");
    }
  ConflatedBilattice C;
  C.commutative = true;
  for (int a = 0; a < pre.n; ++a)
    if (b.neg[conf[a]] != conf[b.neg[a]]) C.commutative = false;
  C.base = std::move(b);
  C.conf = std::move(conf);
  return C;
}

int derive_top(const Bilattice& b, const std::vector<uint8_t>& imp) {
  int n = b.pre.n, t = -1;
  for (int a = 0; a < n; ++a) {
    int aa = imp[a * n + a];
    int v = b.pre.join_k(aa, b.neg[aa]);
    if (t == -1) t = v;
    else if (t != v) return -1;
  }
  return t;
}

std::vector<std::string> implicative_violations(const Bilattice& b,
                                                const std::vector<uint8_t>& imp) {
  AlgebraView A = b.view();
  A.imp = &imp;
  auto x = mkvar("x"), y = mkvar("y"), z = mkvar("z");
  auto holds = [&A](const TermPtr& l, const TermPtr& r) {
    return check_identity(A, Equation{l, r});
  };
  std::vector<std::string> bad;
  if (!holds(mkimp(mkimp(x, x), y), y)) bad.push_back("IB1");
  if (!holds(mkimp(x, mkimp(y, z)), mkimp(mkand(x, y), z)) ||
      !holds(mkimp(x, mkimp(y, z)), mkimp(mkkand(x, y), z)))
    bad.push_back("IB2");
  if (!holds(mkimp(mkimp(mkimp(x, y), x), x), mkimp(x, x))) bad.push_back("IB3");
  if (!holds(mkimp(mkor(x, y), z), mkand(mkimp(x, z), mkimp(y, z))) ||
      !holds(mkimp(mkor(x, y), z), mkimp(mkkor(x, y), z)))
    bad.push_back("IB4");
  if (!holds(mkand(x, mkimp(mkimp(x, y), mkkand(x, y))), x)) bad.push_back("IB5");
  if (!holds(mkimp(mknot(mkimp(x, y)), z), mkimp(mkand(x, mknot(y)), z))) bad.push_back("IB6");
  return bad;
}

ImplicativeBilattice check_implicative(Bilattice b, std::vector<uint8_t> imp) {
  if (imp.size() != size_t(b.pre.n) * b.pre.n) throw error(errc::invalid_input, "imp table size");
  auto bad = implicative_violations(b, imp);
  if (!bad.empty()) throw error(errc::axiom_violation, bad.front());
  ImplicativeBilattice I;
  I.top = derive_top(b, imp);
  if (I.top < 0) throw error(errc::axiom_violation, "top constant not well defined");
  I.base = std::move(b);
  I.imp = std::move(imp);
  return I;
}

AlgebraView AnyAlgebra::view() const {
  AlgebraView v = pre.view();
  if (neg) v.neg = &*neg;
  if (conf) v.conf = &*conf;
  if (imp) {
    v.imp = &*imp;
    if (neg) {
      Bilattice tmp;  // derive_top only reads pre/neg
      tmp.pre = pre;
      tmp.neg = *neg;
      v.top_const = derive_top(tmp, *imp);
    }
  }
  return v;
}

int AnyAlgebra::label_index(const std::string& label) const {
  for (int i = 0; i < (int)pre.labels.size(); ++i)
    if (pre.labels[i] == label) return i;
  return -1;
}

namespace {

FiniteLattice order_from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  std::vector<uint64_t> rows(n);
  for (int a = 0; a < n; ++a) rows[a] = uint64_t(1) << a;
  for (auto [a, b] : covers) rows[a] |= uint64_t(1) << b;
  for (int it = 0; it < n; ++it)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if ((rows[a] >> b) & 1u) rows[a] |= rows[b];
  return FiniteLattice::from_rows(n, rows);
}

AnyAlgebra make_four() {
  AnyAlgebra A;
  Bilattice B = product_bilattice(FiniteLattice::chain(2));
  A.pre = std::move(B.pre);
  A.pre.labels = {"bot", "f", "t", "top"};
  A.neg = std::move(B.neg);
  return A;
}

AnyAlgebra make_four_imp() {
  AnyAlgebra A = make_four();
  ImplicativeBilattice I =
      product_implicative(make_classical_implicative(FiniteLattice::chain(2)));
  A.imp = std::move(I.imp);
  return A;
}

AnyAlgebra make_nine() {
  AnyAlgebra A;
  Bilattice B = product_bilattice(FiniteLattice::chain(3));
  A.pre = std::move(B.pre);
  // coordinates (i,j) at index i*3+j
  A.pre.labels = {"bot", "a", "f", "b", "c", "d", "t", "e", "top"};
  A.neg = std::move(B.neg);
  return A;
}

AnyAlgebra make_five() {
  // bot=0 a=1 f=2 t=3 top=4; transcribed from the double Hasse diagram
  int n = 5;
  FiniteLattice k = order_from_covers(n, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
  FiniteLattice t = order_from_covers(n, {{2, 0}, {2, 1}, {2, 4}, {0, 3}, {1, 3}, {4, 3}});
  AnyAlgebra A;
  A.pre = check_pre_bilattice(std::move(t), std::move(k), {"bot", "a", "f", "t", "top"});
  A.neg = std::vector<int>{0, 1, 3, 2, 4};
  check_bilattice(A.pre, *A.neg);  // validate
  return A;
}

AnyAlgebra make_seven() {
  // bot=0 a=1 b=2 c=3 f=4 t=5 top=6; transcribed from the double Hasse diagram
  int n = 7;
  FiniteLattice k = order_from_covers(
      n, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 6}, {5, 6}});
  FiniteLattice t = order_from_covers(
      n, {{4, 1}, {4, 6}, {4, 3}, {1, 0}, {1, 3}, {0, 2}, {3, 2}, {3, 5}, {6, 5}, {2, 5}});
  AnyAlgebra A;
  A.pre = check_pre_bilattice(std::move(t), std::move(k),
                              {"bot", "a", "b", "c", "f", "t", "top"});
  A.neg = std::vector<int>{0, 2, 1, 3, 5, 4, 6};
  check_bilattice(A.pre, *A.neg);
  return A;
}

}  // namespace

AnyAlgebra named_algebra(const std::string& name) {
  if (name == "FOUR") return make_four();
  if (name == "FOUR_IMP") return make_four_imp();
  if (name == "FIVE") return make_five();
  if (name == "SEVEN") return make_seven();
  if (name == "NINE") return make_nine();
  throw error(errc::invalid_input, "unknown algebra name " + name);
}

}  // namespace bilat
