#include "bilat/filters.hpp"

#include <algorithm>
#include <functional>

namespace bilat {

namespace {
bool bit(Subset s, int a) { return (s >> a) & 1u; }
}

bool is_filter(const FiniteLattice& L, Subset F) {
  if (!F) return false;
  for (int a = 0; a < L.n; ++a) {
    if (!bit(F, a)) continue;
    for (int b = 0; b < L.n; ++b) {
      if (bit(F, b) && !bit(F, L.meet(a, b))) return false;
      if (L.leq(a, b) && !bit(F, b)) return false;
    }
  }
  return true;
}

bool is_prime_filter(const FiniteLattice& L, Subset F) {
  if (!is_filter(L, F)) return false;
  const Subset all = (L.n == 64) ? ~Subset(0) : ((Subset(1) << L.n) - 1);
  if (F == all) return false;
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b)
      if (bit(F, L.join(a, b)) && !bit(F, a) && !bit(F, b)) return false;
  return true;
}

std::vector<Subset> enumerate_filters(const FiniteLattice& L) {
  if (L.n > 16) throw error(errc::carrier_too_large, "filter enumeration caps at 16");
  std::vector<Subset> out;
  for (Subset F = 1; F < (Subset(1) << L.n); ++F)
    if (is_filter(L, F)) out.push_back(F);
  return out;
}

bool is_bifilter(const PreBilattice& B, Subset F) {
  if (!F) return false;
  return is_filter(B.tlat, F) && is_filter(B.klat, F);
}

Subset ff_closure(const PreBilattice& B, Subset X) {
  if (!is_interlaced(B)) throw error(errc::not_interlaced, "ff_closure");
  if (!X) return 0;
  Subset F = X;
  for (;;) {
    Subset next = F;
    for (int a = 0; a < B.n; ++a) {
      if (!bit(F, a)) continue;
      next |= B.tlat.up[a] | B.klat.up[a];
      for (int b = 0; b < B.n; ++b)
        if (bit(F, b)) {
          next |= Subset(1) << B.meet_t(a, b);
          next |= Subset(1) << B.meet_k(a, b);
        }
    }
    if (next == F) return F;
    F = next;
  }
}

Subset ff_closure_dual(const PreBilattice& B, Subset X) {
  PreBilattice D;
  D.n = B.n;
  D.tlat = B.tlat.dual();
  D.klat = B.klat.dual();
  return ff_closure(D, X);
}

std::vector<Subset> enumerate_bifilters(const PreBilattice& B) {
  if (B.n > 16) throw error(errc::carrier_too_large, "bifilter enumeration caps at 16");
  std::vector<Subset> out;
  for (Subset F = 1; F < (Subset(1) << B.n); ++F)
    if (is_bifilter(B, F)) out.push_back(F);
  return out;
}

bool is_prime_bifilter(const PreBilattice& B, Subset F) {
  if (!is_bifilter(B, F)) return false;
  const Subset all = (B.n == 64) ? ~Subset(0) : ((Subset(1) << B.n) - 1);
  if (F == all) return false;
  for (int a = 0; a < B.n; ++a)
    for (int b = 0; b < B.n; ++b) {
      if (bit(F, B.join_t(a, b)) && !bit(F, a) && !bit(F, b)) return false;
      if (bit(F, B.join_k(a, b)) && !bit(F, a) && !bit(F, b)) return false;
    }
  return true;
}

std::vector<int> pi_F(const Bilattice& B, Subset F) {
  if (!is_prime_bifilter(B.pre, F)) throw error(errc::not_prime_bifilter, "pi_F");
  std::vector<int> h(B.pre.n);
  for (int a = 0; a < B.pre.n; ++a) {
    bool in = bit(F, a), nin = bit(F, B.neg[a]);
    h[a] = in ? (nin ? FOUR_TOP : FOUR_T) : (nin ? FOUR_F : FOUR_BOT);
  }
  AnyAlgebra four = named_algebra("FOUR");
  for (int a = 0; a < B.pre.n; ++a)
    for (int b = 0; b < B.pre.n; ++b) {
      if (h[B.pre.meet_t(a, b)] != four.pre.meet_t(h[a], h[b]) ||
          h[B.pre.join_t(a, b)] != four.pre.join_t(h[a], h[b]) ||
          h[B.pre.meet_k(a, b)] != four.pre.meet_k(h[a], h[b]) ||
          h[B.pre.join_k(a, b)] != four.pre.join_k(h[a], h[b]))
        throw error(errc::not_prime_bifilter, "pi_F is not a homomorphism");
    }
  for (int a = 0; a < B.pre.n; ++a)
    if (h[B.neg[a]] != (*four.neg)[h[a]])
      throw error(errc::not_prime_bifilter, "pi_F does not preserve negation");
  return h;
}

// -------------------------------------------------------------- congruences

namespace {

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { for (int i = 0; i < n; ++i) p[i] = i; }
  int find(int a) { return p[a] == a ? a : p[a] = find(p[a]); }
  bool unite(int a, int b) {
    a = find(a); b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    p[b] = a;
    return true;
  }
};

struct Ops {
  std::vector<const std::vector<int>*> unary;
  std::vector<std::function<int(int, int)>> binary;
};

Ops collect_ops(const AlgebraView& A) {
  Ops o;
  if (A.neg) o.unary.push_back(A.neg);
  if (A.conf) o.unary.push_back(A.conf);
  if (A.tlat) {
    o.binary.push_back([&A](int a, int b) { return A.tlat->meet(a, b); });
    o.binary.push_back([&A](int a, int b) { return A.tlat->join(a, b); });
  }
  if (A.klat) {
    o.binary.push_back([&A](int a, int b) { return A.klat->meet(a, b); });
    o.binary.push_back([&A](int a, int b) { return A.klat->join(a, b); });
  }
  if (A.imp)
    o.binary.push_back([&A](int a, int b) { return (*A.imp)[a * A.n + b]; });
  return o;
}

Congruence close_congruence(const AlgebraView& A, UF uf) {
  Ops ops = collect_ops(A);
  int n = A.n;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (uf.find(a) != uf.find(b)) continue;
        for (auto* u : ops.unary)
          changed |= uf.unite((*u)[a], (*u)[b]);
        for (auto& f : ops.binary)
          for (int c = 0; c < n; ++c) {
            changed |= uf.unite(f(a, c), f(b, c));
            changed |= uf.unite(f(c, a), f(c, b));
          }
      }
  }
  Congruence out;
  out.n = n;
  out.cls.resize(n);
  for (int a = 0; a < n; ++a) out.cls[a] = uf.find(a);
  out.normalize();
  return out;
}

void cap32(const AlgebraView& A) {
  if (A.n > 32) throw error(errc::carrier_too_large, "congruence work caps at 32");
}

}  // namespace

Congruence principal_congruence(const AlgebraView& A, int a, int b) {
  cap32(A);
  UF uf(A.n);
  uf.unite(a, b);
  return close_congruence(A, std::move(uf));
}

Congruence congruence_join(const AlgebraView& A, const Congruence& x, const Congruence& y) {
  UF uf(A.n);
  for (int a = 0; a < A.n; ++a) {
    uf.unite(a, x.cls[a]);
    uf.unite(a, y.cls[a]);
  }
  return close_congruence(A, std::move(uf));
}

Congruence congruence_meet(const Congruence& x, const Congruence& y) {
  Congruence out;
  out.n = x.n;
  out.cls.resize(x.n);
  std::vector<std::pair<int, int>> key(x.n);
  for (int a = 0; a < x.n; ++a) key[a] = {x.cls[a], y.cls[a]};
  for (int a = 0; a < x.n; ++a) {
    int m = a;
    for (int b = 0; b < a; ++b)
      if (key[b] == key[a]) { m = b; break; }
    out.cls[a] = m;
  }
  return out;
}

std::vector<Congruence> enumerate_congruences(const AlgebraView& A) {
  cap32(A);
  std::vector<Congruence> principals;
  for (int a = 0; a < A.n; ++a)
    for (int b = a + 1; b < A.n; ++b) {
      Congruence c = principal_congruence(A, a, b);
      if (std::find(principals.begin(), principals.end(), c) == principals.end())
        principals.push_back(c);
    }
  Congruence id;
  id.n = A.n;
  id.cls.resize(A.n);
  for (int a = 0; a < A.n; ++a) id.cls[a] = a;
  std::vector<Congruence> all{id};
  // saturate under joins with principals; every congruence is a join of the
  // principal congruences below it
  for (size_t i = 0; i < all.size(); ++i)
    for (const auto& p : principals) {
      Congruence j = congruence_join(A, all[i], p);
      if (std::find(all.begin(), all.end(), j) == all.end()) all.push_back(j);
    }
  std::sort(all.begin(), all.end());
  return all;
}

bool is_subdirectly_irreducible(const AlgebraView& A) {
  if (A.n == 1) return false;  // trivial algebra: no monolith
  auto all = enumerate_congruences(A);
  Congruence meet;
  bool first = true;
  for (const auto& c : all) {
    if (c.is_identity()) continue;
    meet = first ? c : congruence_meet(meet, c);
    first = false;
  }
  if (first) return false;  // simple-with-no-proper-congruence can't happen for n>1
  return !meet.is_identity();
}

Congruence leibniz_congruence(const AlgebraView& A, Subset F) {
  cap32(A);
  Congruence id;
  id.n = A.n;
  id.cls.resize(A.n);
  for (int a = 0; a < A.n; ++a) id.cls[a] = a;
  auto compatible = [&](const Congruence& c) {
    for (int a = 0; a < A.n; ++a)
      if (bit(F, a) != bit(F, c.cls[a])) return false;
    return true;
  };
  Congruence acc = id;
  for (int a = 0; a < A.n; ++a)
    for (int b = a + 1; b < A.n; ++b) {
      Congruence p = principal_congruence(A, a, b);
      if (!compatible(p)) continue;
      acc = congruence_join(A, acc, p);
    }
  // joins of F-compatible congruences stay compatible, so acc is the largest
  if (!compatible(acc)) throw error(errc::invalid_input, "leibniz join not compatible");
  return acc;
}

bool is_reduced(const AlgebraView& A, Subset F) {
  return leibniz_congruence(A, F).is_identity();
}

bool is_reduced_lb_model(const Bilattice& B, Subset F) {
  if (!is_distributive_pb(B.pre)) throw error(errc::not_distributive, "is_reduced_lb_model");
  const PreBilattice& p = B.pre;
  bool route1 = is_bifilter(p, F);
  if (route1) {
    for (int a = 0; a < p.n && route1; ++a)
      for (int b = 0; b < p.n && route1; ++b) {
        if (a == b || !p.leq_t(a, b)) continue;  // need a <t b
        bool sep = false;
        for (int c = 0; c < p.n && !sep; ++c) {
          if (!bit(F, p.join_t(a, c)) && bit(F, p.join_t(b, c))) sep = true;
          if (bit(F, p.join_t(B.neg[a], c)) && !bit(F, p.join_t(B.neg[b], c))) sep = true;
        }
        if (!sep) route1 = false;
      }
  }
  bool route2 = is_bifilter(p, F) && is_reduced(B.view(), F);
  if (route1 != route2) throw error(errc::invalid_input, "reduced-model routes disagree");
  return route1;
}

std::pair<bool, bool> edpc_principal(const AlgebraView& A, int a, int b, int c, int d) {
  if (!A.imp || !A.neg) throw error(errc::signature_mismatch, "edpc needs imp and neg");
  Congruence th = principal_congruence(A, a, b);
  auto imp = [&A](int x, int y) { return (int)(*A.imp)[x * A.n + y]; };
  auto ng = [&A](int x) { return (*A.neg)[x]; };
  auto p_term = [&](int x, int y, int z) {
    return imp(imp(x, y),
               imp(imp(y, x), imp(imp(ng(x), ng(y)), imp(imp(ng(y), ng(x)), z))));
  };
  return {th.same(c, d), p_term(a, b, c) == p_term(a, b, d)};
}

}  // namespace bilat
