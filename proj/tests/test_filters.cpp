#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bilat/filters.hpp"
#include "bilat/logic_lbs.hpp"

using namespace bilat;

TEST_CASE("lattice filters of small lattices") {
  FiniteLattice c3 = FiniteLattice::chain(3);
  auto fs = enumerate_filters(c3);
  REQUIRE(fs.size() == 3);  // {2}, {1,2}, {0,1,2}
  CHECK(is_prime_filter(c3, 0b100));
  CHECK(is_prime_filter(c3, 0b110));
  CHECK_FALSE(is_prime_filter(c3, 0b111));  // not proper

  FiniteLattice b2 = FiniteLattice::boolean(2);
  auto fb = enumerate_filters(b2);
  REQUIRE(fb.size() == 4);  // the four principal up-sets
  int primes = 0;
  for (Subset f : fb) primes += is_prime_filter(b2, f);
  CHECK(primes == 2);  // generated by the two atoms
  CHECK_FALSE(is_prime_filter(b2, 0b1000));  // {top} fails join-splitting
}

TEST_CASE("bifilters of FOUR") {
  AnyAlgebra A = named_algebra("FOUR");
  auto bf = enumerate_bifilters(A.pre);
  REQUIRE(bf.size() == 2);
  CHECK(bf[0] == FOUR_TR);
  CHECK(bf[1] == 0b1111);
  CHECK(is_prime_bifilter(A.pre, FOUR_TR));
  CHECK_FALSE(is_prime_bifilter(A.pre, 0b1111));
}

TEST_CASE("generated bifilters in FOUR") {
  AnyAlgebra A = named_algebra("FOUR");
  CHECK(ff_closure(A.pre, 0) == 0);
  CHECK(ff_closure(A.pre, 1ull << FOUR_T) == FOUR_TR);
  CHECK(ff_closure(A.pre, 1ull << FOUR_TOP) == FOUR_TR);
  CHECK(ff_closure(A.pre, 1ull << FOUR_F) == 0b1111);
  CHECK(ff_closure(A.pre, 1ull << FOUR_BOT) == 0b1111);
}

TEST_CASE("principal bifilters characterize sim1") {
  for (const char* name : {"FOUR", "NINE"}) {
    AnyAlgebra A = named_algebra(name);
    Congruence s1 = sim1(A.pre);
    for (int a = 0; a < A.pre.n; ++a)
      for (int b = 0; b < A.pre.n; ++b) {
        Subset fa = ff_closure(A.pre, 1ull << a), fb = ff_closure(A.pre, 1ull << b);
        CHECK((fa == fb) == s1.same(a, b));
      }
  }
}

TEST_CASE("prime bifilters of NINE are cylinders over prime filters of the 3-chain") {
  AnyAlgebra A = named_algebra("NINE");
  auto bf = enumerate_bifilters(A.pre);
  REQUIRE(bf.size() == 3);  // one per filter of the 3-chain
  int t = A.label_index("t"), e = A.label_index("e"), top = A.label_index("top");
  int b = A.label_index("b"), c = A.label_index("c"), d = A.label_index("d");
  Subset F1 = (1ull << t) | (1ull << e) | (1ull << top);
  Subset F2 = F1 | (1ull << b) | (1ull << c) | (1ull << d);
  CHECK(is_bifilter(A.pre, F1));
  CHECK(is_bifilter(A.pre, F2));
  CHECK(is_prime_bifilter(A.pre, F1));
  CHECK(is_prime_bifilter(A.pre, F2));
  CHECK_FALSE(is_prime_bifilter(A.pre, bf[2]));  // the improper one
}

TEST_CASE("pi_F on FOUR is the identity onto FOUR") {
  AnyAlgebra A = named_algebra("FOUR");
  Bilattice B{A.pre, *A.neg};
  std::vector<int> pi = pi_F(B, FOUR_TR);
  CHECK(pi == std::vector<int>{FOUR_BOT, FOUR_F, FOUR_T, FOUR_TOP});
  try {
    pi_F(B, 0b1111);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::not_prime_bifilter);
  }
}

TEST_CASE("pi_F on NINE collapses onto FOUR") {
  AnyAlgebra A = named_algebra("NINE");
  Bilattice B{A.pre, *A.neg};
  int t = A.label_index("t"), e = A.label_index("e"), top = A.label_index("top");
  Subset F1 = (1ull << t) | (1ull << e) | (1ull << top);
  std::vector<int> pi = pi_F(B, F1);
  CHECK(pi[t] == FOUR_T);
  CHECK(pi[A.label_index("f")] == FOUR_F);
  CHECK(pi[A.label_index("bot")] == FOUR_BOT);
  CHECK(pi[top] == FOUR_TOP);  // top and ¬top = top both lie in F1
  CHECK(pi[e] == FOUR_T);      // e ∈ F1 but ¬e = d ∉ F1
}

TEST_CASE("congruence operations on the 3-chain") {
  FiniteLattice L = FiniteLattice::chain(3);
  AlgebraView v{3, &L, &L};
  auto cs = enumerate_congruences(v);
  CHECK(cs.size() == 4);  // interval partitions of a 3-chain
  Congruence lo = principal_congruence(v, 0, 1), hi = principal_congruence(v, 1, 2);
  CHECK(lo.same(0, 1));
  CHECK_FALSE(lo.same(1, 2));
  Congruence j = congruence_join(v, lo, hi);
  CHECK(j.is_total());
  Congruence m = congruence_meet(lo, hi);
  CHECK(m.is_identity());
}

TEST_CASE("congruences of interlaced pre-bilattices live on either reduct") {
  for (const char* name : {"FOUR", "NINE"}) {
    AnyAlgebra A = named_algebra(name);
    AlgebraView both = A.pre.view();
    AlgebraView tonly{A.pre.n, &A.pre.tlat, &A.pre.tlat};
    AlgebraView konly{A.pre.n, &A.pre.klat, &A.pre.klat};
    auto cb = enumerate_congruences(both);
    CHECK(cb == enumerate_congruences(tonly));
    CHECK(cb == enumerate_congruences(konly));
  }
}

TEST_CASE("congruences of the NINE bilattice match the 3-chain") {
  AnyAlgebra A = named_algebra("NINE");
  Bilattice B{A.pre, *A.neg};
  CHECK(enumerate_congruences(B.view()).size() == 4);
  // the pre-bilattice reduct has the full product of chain congruences
  CHECK(enumerate_congruences(A.pre.view()).size() == 16);
}

TEST_CASE("subdirect irreducibility") {
  AnyAlgebra FI = named_algebra("FOUR_IMP");
  CHECK(is_subdirectly_irreducible(FI.view()));
  ImplicativeBilattice big =
      product_implicative(make_classical_implicative(FiniteLattice::boolean(2)));
  CHECK_FALSE(is_subdirectly_irreducible(big.view()));
}

TEST_CASE("Leibniz congruence is non-monotone on NINE") {
  AnyAlgebra A = named_algebra("NINE");
  Bilattice B{A.pre, *A.neg};
  int t = A.label_index("t"), e = A.label_index("e"), top = A.label_index("top");
  int b = A.label_index("b"), c = A.label_index("c"), d = A.label_index("d");
  Subset F1 = (1ull << t) | (1ull << e) | (1ull << top);
  Subset F2 = F1 | (1ull << b) | (1ull << c) | (1ull << d);
  CHECK((F1 & F2) == F1);  // F1 ⊆ F2
  Congruence O1 = leibniz_congruence(B.view(), F1);
  Congruence O2 = leibniz_congruence(B.view(), F2);
  CHECK(O1.same(t, e));
  CHECK_FALSE(O2.same(t, e));
}

TEST_CASE("reduced models of the four-valued logic") {
  AnyAlgebra F = named_algebra("FOUR");
  Bilattice B4{F.pre, *F.neg};
  CHECK(is_reduced_lb_model(B4, FOUR_TR));
  CHECK_FALSE(is_reduced_lb_model(B4, 0b1111));  // total filter is never reduced

  // no bifilter makes NINE a reduced model
  AnyAlgebra N = named_algebra("NINE");
  Bilattice B9{N.pre, *N.neg};
  for (Subset f : enumerate_bifilters(N.pre)) CHECK_FALSE(is_reduced_lb_model(B9, f));

  // non-distributive algebras are rejected
  AnyAlgebra S = named_algebra("FIVE");
  Bilattice B5{S.pre, *S.neg};
  try {
    is_reduced_lb_model(B5, enumerate_bifilters(S.pre).front());
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::not_distributive);
  }
}

TEST_CASE("deductive filters coincide with bifilters on FOUR_IMP") {
  AnyAlgebra A = named_algebra("FOUR_IMP");
  ImplicativeBilattice I = check_implicative(Bilattice{A.pre, *A.neg}, *A.imp);
  for (Subset s = 1; s < 16; ++s) {
    bool bif = is_bifilter(A.pre, s);
    bool ded = check_deductive_filter(I, s);
    // t-filter containing ⊤ / k-filter containing {a : ⊤ ≤t a}
    bool tf = is_filter(A.pre.tlat, s) && ((s >> I.top) & 1);
    Subset above_top = 0;
    for (int a = 0; a < 4; ++a)
      if (A.pre.leq_t(I.top, a)) above_top |= 1ull << a;
    bool kf = is_filter(A.pre.klat, s) && (s & above_top) == above_top;
    CHECK(bif == ded);
    CHECK(bif == tf);
    CHECK(bif == kf);
  }
}
