#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bilat/logic_lb.hpp"
#include "bilat/randgen.hpp"

using namespace bilat;

TEST_CASE("parser and printer round-trip") {
  for (const char* s : {"p", "~p", "p & q", "p | q", "p * q", "p + q", "~(p & q)",
                        "p & q | r", "p & (q | r)", "p & q & r", "p | q + r",
                        "~~x1 * y_2"}) {
    TermPtr t = parse_formula(s, false);
    CHECK(term_eq(parse_formula(print_term(t), false), t));
  }
  // precedence: & binds tighter than |
  CHECK(term_eq(parse_formula("p & q | r", false),
                mkor(mkand(mkvar("p"), mkvar("q")), mkvar("r"))));
  // > is right-associative and lowest
  TermPtr t = parse_formula("p > q > r", true);
  CHECK(term_eq(t, mkimp(mkvar("p"), mkimp(mkvar("q"), mkvar("r")))));
  CHECK_THROWS_AS(parse_formula("p >", true), error);
  CHECK_THROWS_AS(parse_formula("p > q", false), error);  // ⊃ disabled
  CHECK_THROWS_AS(parse_formula("P", false), error);      // uppercase
  CHECK_THROWS_AS(parse_formula("(p", false), error);
}

TEST_CASE("sequent parsing") {
  Sequent s = parse_sequent("q, p |- r, q");
  CHECK(s.left.size() == 2);
  CHECK(s.right.size() == 2);
  CHECK(print_sequent(s) == "p, q |- q, r");  // canonical order
  CHECK_THROWS_AS(parse_sequent("|- p"), error);
  CHECK_NOTHROW(parse_sequent("|- p", false, true));
  CHECK_THROWS_AS(parse_sequent("p |-"), error);
}

TEST_CASE("four-valued evaluation matches the FOUR tables") {
  AnyAlgebra A = named_algebra("FOUR");
  std::vector<std::string> vars = {"p", "q"};
  auto p = mkvar("p"), q = mkvar("q");
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      CHECK(eval_four(mkand(p, q), vars, {a, b}) == A.pre.meet_t(a, b));
      CHECK(eval_four(mkor(p, q), vars, {a, b}) == A.pre.join_t(a, b));
      CHECK(eval_four(mkkand(p, q), vars, {a, b}) == A.pre.meet_k(a, b));
      CHECK(eval_four(mkkor(p, q), vars, {a, b}) == A.pre.join_k(a, b));
      CHECK(eval_four(mknot(p), vars, {a, b}) == (*A.neg)[a]);
    }
  // implication: antecedent designated ⇒ value of consequent, else t
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      int expect = ((FOUR_TR >> a) & 1) ? b : FOUR_T;
      CHECK(eval_four(mkimp(p, q), vars, {a, b}) == expect);
    }
}

TEST_CASE("normal form frozen examples") {
  auto nf_of = [](const char* s) { return normal_form(parse_formula(s, false)); };
  auto lit = [](const char* v, bool n) { return Literal{v, n}; };
  CHECK(nf_of("p") == NormalForm{{lit("p", false)}});
  CHECK(nf_of("p * q") == NormalForm{{lit("p", false)}, {lit("q", false)}});
  CHECK(nf_of("p & q") == NormalForm{{lit("p", false)}, {lit("q", false)}});
  CHECK(nf_of("p | q") == NormalForm{{lit("p", false), lit("q", false)}});
  CHECK(nf_of("p + q") == NormalForm{{lit("p", false), lit("q", false)}});
  CHECK(nf_of("~(p & q)") == NormalForm{{lit("p", true), lit("q", true)}});
  CHECK(nf_of("~(p | q)") == NormalForm{{lit("p", true)}, {lit("q", true)}});
  CHECK(nf_of("~(p * q)") == NormalForm{{lit("p", true)}, {lit("q", true)}});
  CHECK(nf_of("~(p + q)") == NormalForm{{lit("p", true), lit("q", true)}});
  CHECK(nf_of("~~p") == NormalForm{{lit("p", false)}});
  // distribution: (p & q) | r
  CHECK(nf_of("(p & q) | r") ==
        NormalForm{{lit("p", false), lit("r", false)}, {lit("q", false), lit("r", false)}});
  // idempotence collapses duplicates
  CHECK(nf_of("p & p") == NormalForm{{lit("p", false)}});
  CHECK(nf_of("p | p") == NormalForm{{lit("p", false)}});
  // a variable and its negation stay distinct literals
  CHECK(nf_of("p | ~p") == NormalForm{{lit("p", false), lit("p", true)}});
}

TEST_CASE("decide_nf basics") {
  auto f = [](const char* s) { return parse_formula(s, false); };
  CHECK(decide_nf({f("p & q")}, f("p")));
  CHECK(decide_nf({f("p")}, f("p | q")));
  CHECK(decide_nf({f("p * q")}, f("q")));
  CHECK_FALSE(decide_nf({f("p")}, f("q")));
  CHECK_FALSE(decide_nf({f("p")}, f("p & q")));
  CHECK_FALSE(decide_nf({}, f("p | ~p")));  // no theorems
}

TEST_CASE("decide_nf agrees with the semantic oracle on random samples") {
  std::mt19937 rng(20260823);
  std::vector<std::string> vars = {"p", "q", "r", "s"};
  for (int i = 0; i < 2000; ++i) {
    TermPtr phi = random_formula(rng, 1 + (int)(rng() % 9), vars, false);
    std::vector<TermPtr> gamma;
    int k = rng() % 3;
    for (int j = 0; j < k; ++j)
      gamma.push_back(random_formula(rng, 1 + (int)(rng() % 9), vars, false));
    CHECK(decide_nf(gamma, phi) == consequence_lb(gamma, phi));
  }
}

TEST_CASE("no theorems in the four-valued logic") {
  std::mt19937 rng(7);
  std::vector<std::string> vars = {"p", "q"};
  for (int i = 0; i < 200; ++i) {
    TermPtr phi = random_formula(rng, 1 + (int)(rng() % 11), vars, false);
    CHECK_FALSE(consequence_lb({}, phi));
  }
}

TEST_CASE("selfextensionality fails") {
  auto p = mkvar("p"), q = mkvar("q");
  CHECK(consequence_lb({mkor(p, q)}, mkkor(p, q)));
  CHECK(consequence_lb({mkkor(p, q)}, mkor(p, q)));
  CHECK_FALSE(consequence_lb({mknot(mkkor(p, q))}, mknot(mkor(p, q))));
}

TEST_CASE("Tarski-style closure properties") {
  TarskiReport r = tarski_properties(12345, 60);
  CHECK(r.pc);
  CHECK(r.pdi);
  CHECK(r.pdn);
  CHECK(r.pdm);
  CHECK(r.ok());
}

TEST_CASE("consequence over an explicit matrix matches the builtin") {
  AnyAlgebra A = named_algebra("FOUR");
  std::mt19937 rng(99);
  std::vector<std::string> vars = {"p", "q", "r"};
  for (int i = 0; i < 300; ++i) {
    TermPtr phi = random_formula(rng, 1 + (int)(rng() % 7), vars, false);
    std::vector<TermPtr> gamma = {random_formula(rng, 1 + (int)(rng() % 7), vars, false)};
    CHECK(consequence_matrix(A.view(), FOUR_TR, gamma, phi) == consequence_lb(gamma, phi));
  }
}

TEST_CASE("Hilbert LB rule table") {
  CHECK(lb_rules().size() == 23);
  for (const auto& r : lb_rules()) CHECK(!r.premises.empty());
}

TEST_CASE("Hilbert LB derivation checking") {
  auto f = [](const char* s) { return parse_formula(s, false); };
  std::vector<TermPtr> gamma = {f("p & q")};
  std::vector<HilbertStep> good = {
      {f("p & q"), "premise", {}},
      {f("q"), "R2", {0}},
      {f("q | p"), "R4", {1}},
  };
  CHECK(check_hilbert_lb(good, gamma, f("q | p")));
  // wrong conclusion: valid steps, mismatch at the end
  CHECK_FALSE(check_hilbert_lb(good, gamma, f("p | q")));
  // invalid rule application reports the step
  std::vector<HilbertStep> bad = {
      {f("p & q"), "premise", {}},
      {f("r"), "R1", {0}},
  };
  try {
    check_hilbert_lb(bad, gamma, f("r"));
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::bad_step);
  }
  // a longer chain: double negation introduction inside a disjunction
  std::vector<TermPtr> g2 = {f("p | r")};
  std::vector<HilbertStep> dn = {
      {f("p | r"), "premise", {}},
      {f("~~p | r"), "R10", {0}},
      {f("p | r"), "R11", {1}},
  };
  CHECK(check_hilbert_lb(dn, g2, f("p | r")));
}

TEST_CASE("Gentzen rule table") {
  CHECK(gentzen_rules().size() == 18);
}

TEST_CASE("Gentzen prover finds proofs for valid sequents and refutes invalid ones") {
  auto prove = [](const char* s) { return prove_gentzen(parse_sequent(s, false), 30); };
  CHECK(prove("p & q |- p").status == ProofSearch::Proved);
  CHECK(prove("p * q |- q").status == ProofSearch::Proved);
  CHECK(prove("p |- p | q").status == ProofSearch::Proved);
  CHECK(prove("~(p & q) |- ~p | ~q").status == ProofSearch::Proved);
  CHECK(prove("~p | ~q |- ~(p & q)").status == ProofSearch::Proved);
  CHECK(prove("p + q |- p | q").status == ProofSearch::Proved);
  CHECK(prove("p |- q").status == ProofSearch::Refuted);
  CHECK(prove("p |- ~~q | p").status == ProofSearch::Proved);
  CHECK(prove("p | q |- p").status == ProofSearch::Refuted);
  // excluded middle is not valid
  CHECK(prove("q |- p | ~p").status == ProofSearch::Refuted);
}

TEST_CASE("Gentzen proofs round-trip through the checker") {
  std::mt19937 rng(424242);
  std::vector<std::string> vars = {"p", "q", "r"};
  int proved = 0;
  for (int i = 0; i < 400; ++i) {
    std::vector<TermPtr> l = {random_formula(rng, 1 + (int)(rng() % 5), vars, false)};
    std::vector<TermPtr> r = {random_formula(rng, 1 + (int)(rng() % 5), vars, false)};
    if (rng() % 2) l.push_back(random_formula(rng, 1 + (int)(rng() % 5), vars, false));
    Sequent s = make_sequent(l, r);
    GentzenResult res = prove_gentzen(s, 25);
    bool valid = sequent_valid_four(s);
    if (res.status == ProofSearch::Proved) {
      ++proved;
      CHECK(valid);  // soundness
      REQUIRE(res.proof.has_value());
      CHECK(check_gentzen(*res.proof, s));
    } else {
      CHECK(res.status == ProofSearch::Refuted);
      CHECK_FALSE(valid);  // refutation completeness
    }
  }
  CHECK(proved > 20);  // the sample exercises both outcomes
}

TEST_CASE("Gentzen checker accepts cut and rejects tampering") {
  // goal p&q |- p, via cut on q
  Sequent goal = parse_sequent("p & q |- p");
  GentzenProof ax1{parse_sequent("p, q |- p, q"), "ax", nullptr, {}};
  GentzenProof left{parse_sequent("p & q |- p, q"), "and-l", nullptr, {ax1}};
  GentzenProof ax2{parse_sequent("p, q |- p"), "ax", nullptr, {}};
  GentzenProof right{parse_sequent("p & q, q |- p"), "and-l", nullptr, {ax2}};
  GentzenProof root{goal, "cut", parse_formula("q", false), {left, right}};
  CHECK(check_gentzen(root, goal));
  // tamper: claim a different rule
  GentzenProof bad = root;
  bad.rule = "ax";
  try {
    check_gentzen(bad, goal);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::bad_step);
  }
  // tamper: wrong goal
  CHECK_FALSE(check_gentzen(root, parse_sequent("p & q |- q")));
}

TEST_CASE("tau/rho translations track validity") {
  AnyAlgebra A = named_algebra("FOUR");
  AlgebraView v = A.view();
  std::mt19937 rng(31337);
  std::vector<std::string> vars = {"p", "q"};
  for (int i = 0; i < 300; ++i) {
    std::vector<TermPtr> l = {random_formula(rng, 1 + (int)(rng() % 5), vars, false)};
    std::vector<TermPtr> r = {random_formula(rng, 1 + (int)(rng() % 5), vars, false)};
    Sequent s = make_sequent(l, r);
    // sequent valid iff its equational translation holds in FOUR
    CHECK(sequent_valid_four(s) == check_identity(v, tau_gentzen(s)));
  }
  for (int i = 0; i < 300; ++i) {
    Equation e{random_term_depth(rng, 3, vars, false), random_term_depth(rng, 3, vars, false)};
    bool holds = check_identity(v, e);
    bool all_valid = true;
    for (const Sequent& s : rho_gentzen(e)) all_valid = all_valid && sequent_valid_four(s);
    CHECK(holds == all_valid);
  }
}
