#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "../capi/bilat.h"

namespace {
struct Str {
  char* p = nullptr;
  ~Str() { blt_string_free(p); }
  std::string s() const { return p ? p : ""; }
};
}  // namespace

TEST_CASE("version and error reporting") {
  CHECK(blt_version() != nullptr);
  blt_algebra* a = nullptr;
  CHECK(blt_algebra_named("NOPE", &a) != BLT_OK);
  CHECK(std::strlen(blt_last_error()) > 0);
}

TEST_CASE("named algebra round-trips through JSON") {
  blt_algebra* a = nullptr;
  REQUIRE(blt_algebra_named("FOUR_IMP", &a) == BLT_OK);
  Str j;
  REQUIRE(blt_algebra_emit(a, "json", &j.p) == BLT_OK);
  blt_algebra* b = nullptr;
  REQUIRE(blt_algebra_from_json(j.p, &b) == BLT_OK);
  Str j2;
  REQUIRE(blt_algebra_emit(b, "json", &j2.p) == BLT_OK);
  CHECK(j.s() == j2.s());
  blt_algebra_free(a);
  blt_algebra_free(b);
}

TEST_CASE("variety checks through the C API") {
  blt_algebra* four = nullptr;
  REQUIRE(blt_algebra_named("FOUR_IMP", &four) == BLT_OK);
  for (const char* v : {"pre", "int", "dist", "bil", "imp", "rdm", "ialg"}) {
    int holds = 0;
    Str rep;
    REQUIRE(blt_algebra_check(four, v, &holds, &rep.p) == BLT_OK);
    CHECK(holds == 1);
    CHECK(rep.s().find("\"holds\":true") != std::string::npos);
  }
  int holds = 1;
  Str rep;
  REQUIRE(blt_algebra_check(four, "conf", &holds, &rep.p) == BLT_OK);
  CHECK(holds == 0);  // FOUR_IMP carries no conflation table
  blt_algebra_free(four);

  blt_algebra* seven = nullptr;
  REQUIRE(blt_algebra_named("SEVEN", &seven) == BLT_OK);
  REQUIRE(blt_algebra_check(seven, "int", &holds, nullptr) == BLT_OK);
  CHECK(holds == 0);
  REQUIRE(blt_algebra_check(seven, "bil", &holds, nullptr) == BLT_OK);
  CHECK(holds == 1);
  blt_algebra_free(seven);
}

TEST_CASE("decompose and enumerate") {
  blt_algebra* nine = nullptr;
  REQUIRE(blt_algebra_named("NINE", &nine) == BLT_OK);
  Str d;
  REQUIRE(blt_algebra_decompose(nine, &d.p) == BLT_OK);
  CHECK(d.s().find("\"factors\"") != std::string::npos);
  Str e;
  REQUIRE(blt_algebra_enumerate(nine, "bifilters", &e.p) == BLT_OK);
  CHECK(e.s().find("\"prime\"") != std::string::npos);
  Str c;
  REQUIRE(blt_algebra_enumerate(nine, "congruences", &c.p) == BLT_OK);
  CHECK(c.s().find("\"congruences\"") != std::string::npos);
  blt_algebra_free(nine);

  blt_algebra* seven = nullptr;
  REQUIRE(blt_algebra_named("SEVEN", &seven) == BLT_OK);
  Str d2;
  CHECK(blt_algebra_decompose(seven, &d2.p) == BLT_ERR_NOT_INTERLACED);
  blt_algebra_free(seven);
}

TEST_CASE("decide through the C API") {
  int valid = -1;
  REQUIRE(blt_decide("lb", "semantic", "p & q |- p", &valid) == BLT_OK);
  CHECK(valid == 1);
  REQUIRE(blt_decide("lb", "nf", "p |- q", &valid) == BLT_OK);
  CHECK(valid == 0);
  REQUIRE(blt_decide("lbs", "semantic", "|- p > p", &valid) == BLT_OK);
  CHECK(valid == 1);
  CHECK(blt_decide("lbs", "nf", "p |- p", &valid) == BLT_ERR_INVALID_INPUT);
  CHECK(blt_decide("lb", "semantic", "p & |- p", &valid) == BLT_ERR_SYNTAX);
  CHECK(blt_decide("lb", "semantic", "p |- q, r", &valid) == BLT_ERR_INVALID_INPUT);
}

TEST_CASE("normal form and prove") {
  Str nf;
  REQUIRE(blt_normal_form("~(p & q)", &nf.p) == BLT_OK);
  CHECK(nf.s() == "~p | ~q");
  int proved = -1;
  Str proof;
  REQUIRE(blt_prove("p & q |- q + p", 30, &proved, &proof.p) == BLT_OK);
  CHECK(proved == 1);
  CHECK(proof.s().find("\"rule\"") != std::string::npos);
  // round-trip the emitted proof through the checker
  std::string doc = "{\"goal\": \"p & q |- q + p\", \"proof\": " + proof.s() + "}";
  int ok = -1;
  Str diag;
  REQUIRE(blt_check_proof("glb", doc.c_str(), &ok, &diag.p) == BLT_OK);
  CHECK(ok == 1);
  // mismatched goal is reported, not thrown
  std::string doc2 = "{\"goal\": \"p & q |- q\", \"proof\": " + proof.s() + "}";
  REQUIRE(blt_check_proof("glb", doc2.c_str(), &ok, &diag.p) == BLT_OK);
  CHECK(ok == 0);
  // refuted sequent
  int proved2 = -1;
  Str pf2;
  REQUIRE(blt_prove("p |- q", 30, &proved2, &pf2.p) == BLT_OK);
  CHECK(proved2 == 0);
}

TEST_CASE("hilbert proof files") {
  const char* hlb =
      "{\"premises\": [\"p & q\"], \"conclusion\": \"q | p\","
      " \"steps\": ["
      "  {\"formula\": \"p & q\", \"rule\": \"premise\"},"
      "  {\"formula\": \"q\", \"rule\": \"R2\", \"from\": [0]},"
      "  {\"formula\": \"q | p\", \"rule\": \"R4\", \"from\": [1]}]}";
  int ok = -1;
  Str diag;
  REQUIRE(blt_check_proof("hlb", hlb, &ok, &diag.p) == BLT_OK);
  CHECK(ok == 1);
  const char* hlbs =
      "{\"premises\": [\"p\", \"p > q\"], \"conclusion\": \"q\","
      " \"steps\": ["
      "  {\"formula\": \"p\", \"rule\": \"premise\"},"
      "  {\"formula\": \"p > q\", \"rule\": \"premise\"},"
      "  {\"formula\": \"q\", \"rule\": \"mp\", \"from\": [0, 1]}]}";
  REQUIRE(blt_check_proof("hlbs", hlbs, &ok, &diag.p) == BLT_OK);
  CHECK(ok == 1);
  // a bad step yields ok = 0 with a diagnostic rather than an error status
  const char* bad =
      "{\"premises\": [], \"conclusion\": \"q\","
      " \"steps\": [{\"formula\": \"q\", \"rule\": \"premise\"}]}";
  REQUIRE(blt_check_proof("hlb", bad, &ok, &diag.p) == BLT_OK);
  CHECK(ok == 0);
  CHECK(!diag.s().empty());
}

TEST_CASE("translate through the C API") {
  Str t;
  REQUIRE(blt_translate("tau", "glb", "p |- q", &t.p) == BLT_OK);
  CHECK(t.s() == "p & (p * q) = p");
  Str r;
  REQUIRE(blt_translate("rho", "glb", "p = q", &r.p) == BLT_OK);
  CHECK(r.s().find("|-") != std::string::npos);
  Str t2;
  REQUIRE(blt_translate("tau", "lbs", "p & q", &t2.p) == BLT_OK);
  CHECK(t2.s() == "p & q = p & q > p & q");
  CHECK(blt_translate("sigma", "glb", "p |- q", &t2.p) == BLT_ERR_INVALID_INPUT);
}

TEST_CASE("tables output is printable") {
  blt_algebra* a = nullptr;
  REQUIRE(blt_algebra_named("FOUR_IMP", &a) == BLT_OK);
  Str t;
  REQUIRE(blt_algebra_emit(a, "tables", &t.p) == BLT_OK);
  CHECK(t.s().find("imp:") != std::string::npos);
  CHECK(t.s().find("arrow:") != std::string::npos);
  CHECK(t.s().find("star:") != std::string::npos);
  blt_algebra_free(a);
}
