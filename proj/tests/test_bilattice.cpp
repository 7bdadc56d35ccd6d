#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bilat/bilattice.hpp"

using namespace bilat;

TEST_CASE("FOUR structure") {
  AnyAlgebra A = named_algebra("FOUR");
  REQUIRE(A.pre.n == 4);
  REQUIRE(A.neg.has_value());
  CHECK(A.label_index("bot") == FOUR_BOT);
  CHECK(A.label_index("f") == FOUR_F);
  CHECK(A.label_index("t") == FOUR_T);
  CHECK(A.label_index("top") == FOUR_TOP);
  // knowledge order: bot below f,t below top; f,t incomparable
  CHECK(A.pre.leq_k(FOUR_BOT, FOUR_F));
  CHECK(A.pre.leq_k(FOUR_BOT, FOUR_T));
  CHECK(A.pre.leq_k(FOUR_F, FOUR_TOP));
  CHECK(A.pre.leq_k(FOUR_T, FOUR_TOP));
  CHECK_FALSE(A.pre.leq_k(FOUR_F, FOUR_T));
  // truth order: f below bot,top below t
  CHECK(A.pre.leq_t(FOUR_F, FOUR_BOT));
  CHECK(A.pre.leq_t(FOUR_F, FOUR_TOP));
  CHECK(A.pre.leq_t(FOUR_BOT, FOUR_T));
  CHECK(A.pre.leq_t(FOUR_TOP, FOUR_T));
  CHECK_FALSE(A.pre.leq_t(FOUR_BOT, FOUR_TOP));
  // negation swaps f/t, fixes bot/top
  std::vector<int> neg = {FOUR_BOT, FOUR_T, FOUR_F, FOUR_TOP};
  CHECK(*A.neg == neg);
  CHECK(is_interlaced(A.pre));
  CHECK(is_distributive_pb(A.pre));
  // frozen op values
  CHECK(A.pre.meet_t(FOUR_T, FOUR_TOP) == FOUR_TOP);
  CHECK(A.pre.join_t(FOUR_T, FOUR_TOP) == FOUR_T);
  CHECK(A.pre.meet_k(FOUR_F, FOUR_T) == FOUR_BOT);
  CHECK(A.pre.join_k(FOUR_F, FOUR_T) == FOUR_TOP);
}

TEST_CASE("FOUR is the product of two 2-chains") {
  PreBilattice p = product_pre(FiniteLattice::chain(2), FiniteLattice::chain(2));
  AnyAlgebra A = named_algebra("FOUR");
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      CHECK(p.meet_t(a, b) == A.pre.meet_t(a, b));
      CHECK(p.join_t(a, b) == A.pre.join_t(a, b));
      CHECK(p.meet_k(a, b) == A.pre.meet_k(a, b));
      CHECK(p.join_k(a, b) == A.pre.join_k(a, b));
    }
  Bilattice B = product_bilattice(FiniteLattice::chain(2));
  CHECK(B.neg == *A.neg);
}

TEST_CASE("FOUR_IMP implication table") {
  AnyAlgebra A = named_algebra("FOUR_IMP");
  REQUIRE(A.imp.has_value());
  auto imp = [&](int a, int b) { return (*A.imp)[a * 4 + b]; };
  // a in {bot, f}: a>b = t; a in {t, top}: a>b = b
  for (int b = 0; b < 4; ++b) {
    CHECK(imp(FOUR_BOT, b) == FOUR_T);
    CHECK(imp(FOUR_F, b) == FOUR_T);
    CHECK(imp(FOUR_T, b) == b);
    CHECK(imp(FOUR_TOP, b) == b);
  }
  CHECK(implicative_violations(Bilattice{A.pre, *A.neg}, *A.imp).empty());
  CHECK(derive_top(Bilattice{A.pre, *A.neg}, *A.imp) == FOUR_TOP);
}

TEST_CASE("FIVE and SEVEN are bilattices but not interlaced") {
  for (const char* name : {"FIVE", "SEVEN"}) {
    AnyAlgebra A = named_algebra(name);
    REQUIRE(A.neg.has_value());
    CHECK_NOTHROW(check_bilattice(A.pre, *A.neg));  // neg1-neg3 hold
    CHECK_FALSE(is_interlaced(A.pre));
    CHECK_FALSE(is_distributive_pb(A.pre));
  }
  CHECK(named_algebra("FIVE").pre.n == 5);
  CHECK(named_algebra("SEVEN").pre.n == 7);
}

TEST_CASE("NINE is distributive") {
  AnyAlgebra A = named_algebra("NINE");
  CHECK(A.pre.n == 9);
  CHECK(is_interlaced(A.pre));
  CHECK(is_distributive_pb(A.pre));
  // labels follow the product-of-3-chains layout
  CHECK(A.label_index("bot") == 0);
  CHECK(A.label_index("f") == 2);
  CHECK(A.label_index("t") == 6);
  CHECK(A.label_index("top") == 8);
  CHECK(A.label_index("e") == 7);
}

TEST_CASE("product of non-distributive lattice is interlaced but not distributive") {
  PreBilattice p = product_pre(FiniteLattice::diamond_m3(), FiniteLattice::diamond_m3());
  CHECK(is_interlaced(p));
  CHECK_FALSE(is_distributive_pb(p));
}

TEST_CASE("negation axiom validation") {
  AnyAlgebra A = named_algebra("FOUR");
  // identity map is k-monotone and involutive but not t-antitone
  try {
    check_bilattice(A.pre, {0, 1, 2, 3});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::not_antitone);
  }
  // swapping bot/top as well breaks k-monotonicity
  try {
    check_bilattice(A.pre, {3, 2, 1, 0});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::axiom_violation);
  }
  // non-involution
  try {
    check_bilattice(A.pre, {0, 2, 2, 3});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::not_involutive);
  }
}

TEST_CASE("conflation on FOUR") {
  AnyAlgebra A = named_algebra("FOUR");
  // the unique conflation swaps bot/top and fixes f/t; it commutes with neg
  Bilattice B{A.pre, *A.neg};
  ConflatedBilattice C = check_conflation(std::move(B), {3, 1, 2, 0});
  CHECK(C.commutative);
  // fixing everything is not k-antitone
  Bilattice B2{A.pre, *A.neg};
  try {
    check_conflation(std::move(B2), {0, 1, 2, 3});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::not_antitone);
  }
}

TEST_CASE("product implicative bilattice satisfies IB1-IB6") {
  for (int k = 0; k <= 2; ++k) {
    ImplicativeBilattice I =
        product_implicative(make_classical_implicative(FiniteLattice::boolean(k)));
    CHECK(implicative_violations(I.base, I.imp).empty());
    CHECK(I.top >= 0);
    // top is the knowledge top of the regular diagonal: ⟨1,1⟩
    int n2 = 1 << k;
    CHECK(I.top == (n2 - 1) * n2 + (n2 - 1));
  }
}

TEST_CASE("tampered implication is rejected with the failing axiom") {
  AnyAlgebra A = named_algebra("FOUR_IMP");
  std::vector<uint8_t> bad = *A.imp;
  bad[FOUR_T * 4 + FOUR_F] = FOUR_T;  // t > f should be f
  Bilattice B{A.pre, *A.neg};
  auto v = implicative_violations(B, bad);
  CHECK_FALSE(v.empty());
  try {
    check_implicative(std::move(B), bad);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::axiom_violation);
  }
}

TEST_CASE("selfextensionality counterexample values in FOUR") {
  AnyAlgebra A = named_algebra("FOUR");
  int t_or_top = A.pre.join_t(FOUR_T, FOUR_TOP);
  int t_kor_top = A.pre.join_k(FOUR_T, FOUR_TOP);
  CHECK(t_kor_top == FOUR_TOP);
  CHECK((*A.neg)[t_kor_top] == FOUR_TOP);  // ¬(t⊕⊤) = ⊤
  CHECK(t_or_top == FOUR_T);
  CHECK((*A.neg)[t_or_top] == FOUR_F);     // ¬(t∨⊤) = f
}

TEST_CASE("identity checking over FOUR") {
  AnyAlgebra A = named_algebra("FOUR");
  AlgebraView v = A.view();
  auto p = mkvar("p"), q = mkvar("q");
  // De Morgan for both negation pairs
  CHECK(check_identity(v, {mknot(mkand(p, q)), mkor(mknot(p), mknot(q))}));
  CHECK(check_identity(v, {mknot(mkkand(p, q)), mkkand(mknot(p), mknot(q))}));
  // a false identity has a counterexample
  Equation bad{mkand(p, q), mkor(p, q)};
  CHECK_FALSE(check_identity(v, bad));
  auto cex = identity_counterexample(v, bad);
  REQUIRE(cex.has_value());
  CHECK(v.tlat->meet((*cex)[0], (*cex)[1]) != v.tlat->join((*cex)[0], (*cex)[1]));
}

TEST_CASE("unknown named algebra is rejected") {
  CHECK_THROWS_AS(named_algebra("TWELVE"), error);
}
