#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bilat/lattice.hpp"

using namespace bilat;

TEST_CASE("chain basics") {
  FiniteLattice c = FiniteLattice::chain(4);
  CHECK(c.n == 4);
  CHECK(c.bottom() == 0);
  CHECK(c.top() == 3);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      CHECK(c.leq(a, b) == (a <= b));
      CHECK(c.meet(a, b) == std::min(a, b));
      CHECK(c.join(a, b) == std::max(a, b));
    }
  CHECK(is_distributive(c));
}

TEST_CASE("boolean lattice basics") {
  FiniteLattice b = FiniteLattice::boolean(3);
  CHECK(b.n == 8);
  CHECK(b.bottom() == 0);
  CHECK(b.top() == 7);
  for (int a = 0; a < 8; ++a)
    for (int c = 0; c < 8; ++c) {
      CHECK(b.meet(a, c) == (a & c));
      CHECK(b.join(a, c) == (a | c));
    }
  CHECK(is_distributive(b));
  CHECK(is_relatively_complemented(b));
}

TEST_CASE("diamond M3 is not distributive") {
  FiniteLattice m3 = FiniteLattice::diamond_m3();
  CHECK(m3.n == 5);
  CHECK_FALSE(is_distributive(m3));
}

TEST_CASE("from_order rejects bad input") {
  // not antisymmetric
  std::vector<std::vector<bool>> r1 = {{true, true}, {true, true}};
  CHECK_THROWS_AS(FiniteLattice::from_order(2, r1), error);
  // poset but no join of the two maximal elements
  std::vector<std::vector<bool>> r2 = {{true, true, true},
                                       {false, true, false},
                                       {false, false, true}};
  try {
    FiniteLattice::from_order(3, r2);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::not_a_lattice);
  }
}

TEST_CASE("relative complement in a boolean lattice is a' | b restricted") {
  FiniteLattice b = FiniteLattice::boolean(3);
  for (int a = 0; a < 8; ++a)
    for (int x = 0; x < 8; ++x) {
      int c = relative_complement(b, a, x);
      // defining property: a&c == a&x and a|c == top
      CHECK((a & c) == (a & x));
      CHECK((a | c) == 7);
      // boolean closed form
      CHECK(c == ((~a & 7) | (a & x)));
    }
}

TEST_CASE("chains are not relatively complemented beyond 2 elements") {
  CHECK(is_relatively_complemented(FiniteLattice::chain(2)));
  CHECK_FALSE(is_relatively_complemented(FiniteLattice::chain(3)));
  try {
    relative_complement(FiniteLattice::chain(3), 1, 0);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::no_complement);
  }
}

TEST_CASE("residuation law in classical implicative lattices") {
  for (int k = 1; k <= 3; ++k) {
    ClassicalImplicativeLattice L =
        make_classical_implicative(FiniteLattice::boolean(k));
    int n = L.base.n;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          CHECK(L.base.leq(L.base.meet(a, b), c) == L.base.leq(a, L.rc(b, c)));
  }
}

TEST_CASE("classical implicative lattices of small size are exactly boolean") {
  // exhaustive over all lattices with <= 6 elements up to isomorphism
  int count = 0;
  for (const FiniteLattice& L : enumerate_lattices(6)) {
    bool ok = is_distributive(L) && is_relatively_complemented(L);
    if (ok) {
      ++count;
      bool boolean_size = L.n == 1 || L.n == 2 || L.n == 4;
      CHECK(boolean_size);
    }
  }
  CHECK(count == 3);  // 1, 2, and 2^2
  // and boolean(3) (8 elements) is classical implicative
  CHECK_NOTHROW(make_classical_implicative(FiniteLattice::boolean(3)));
}

TEST_CASE("dual disjunctive lattices") {
  CHECK(is_dual_disjunctive(FiniteLattice::boolean(2)));
  CHECK(is_dual_disjunctive(FiniteLattice::boolean(3)));
  CHECK(is_dual_disjunctive(FiniteLattice::chain(2)));
  CHECK_FALSE(is_dual_disjunctive(FiniteLattice::chain(3)));
}

TEST_CASE("involution validation and classification") {
  // reversed 3-chain: De Morgan and Kleene but not boolean
  InvolutiveLattice k3 = check_involution(FiniteLattice::chain(3), {2, 1, 0});
  InvolutionClass c3 = classify_involution(k3);
  CHECK(c3.de_morgan);
  CHECK(c3.kleene);
  CHECK_FALSE(c3.boolean_);

  // boolean(2) with complement: all three
  InvolutiveLattice b2 = check_involution(FiniteLattice::boolean(2), {3, 2, 1, 0});
  InvolutionClass cb = classify_involution(b2);
  CHECK(cb.de_morgan);
  CHECK(cb.kleene);
  CHECK(cb.boolean_);

  // boolean(2) fixing the two atoms: De Morgan but not Kleene
  InvolutiveLattice dm = check_involution(FiniteLattice::boolean(2), {3, 1, 2, 0});
  InvolutionClass cd = classify_involution(dm);
  CHECK(cd.de_morgan);
  CHECK_FALSE(cd.kleene);

  // not an involution
  try {
    check_involution(FiniteLattice::chain(3), {2, 2, 0});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::not_involutive);
  }
  // involution that is not antitone
  try {
    check_involution(FiniteLattice::chain(3), {0, 1, 2});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::not_antitone);
  }
}

TEST_CASE("duality and isomorphism") {
  FiniteLattice c = FiniteLattice::chain(3);
  auto iso = lattice_iso(c, c.dual());
  REQUIRE(iso.has_value());
  FiniteLattice b = FiniteLattice::boolean(2);
  CHECK(lattice_iso(b, b.dual()).has_value());
  CHECK_FALSE(lattice_iso(b, FiniteLattice::chain(4)).has_value());
  // involution-respecting iso
  std::vector<int> rev = {2, 1, 0}, idm = {2, 1, 0};
  CHECK(lattice_iso(c, c, &rev, &idm).has_value());
}

TEST_CASE("lattice enumeration counts up to isomorphism") {
  // cumulative counts for 1..n elements: 1, 2, 3, 5, 10, 25
  CHECK(enumerate_lattices(1).size() == 1);
  CHECK(enumerate_lattices(2).size() == 2);
  CHECK(enumerate_lattices(3).size() == 3);
  CHECK(enumerate_lattices(4).size() == 5);
  CHECK(enumerate_lattices(5).size() == 10);
  CHECK(enumerate_lattices(6).size() == 25);
  // absorption/idempotence spot check on every enumerated lattice
  for (const FiniteLattice& L : enumerate_lattices(5))
    for (int a = 0; a < L.n; ++a)
      for (int bq = 0; bq < L.n; ++bq) {
        CHECK(L.meet(a, L.join(a, bq)) == a);
        CHECK(L.join(a, L.meet(a, bq)) == a);
      }
}
