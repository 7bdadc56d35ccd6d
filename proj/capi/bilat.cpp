#include "bilat.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <sstream>

#include "bilat/json_io.hpp"
#include "bilat/logic_lb.hpp"
#include "bilat/logic_lbs.hpp"
#include "bilat/representation.hpp"

using namespace bilat;

struct blt_algebra {
  AnyAlgebra alg;
};

namespace {

thread_local std::string g_last_error;

blt_status status_of(errc c) {
  switch (c) {
    case errc::not_a_poset: return BLT_ERR_NOT_A_POSET;
    case errc::not_a_lattice: return BLT_ERR_NOT_A_LATTICE;
    case errc::no_complement: return BLT_ERR_NO_COMPLEMENT;
    case errc::no_top: return BLT_ERR_NO_TOP;
    case errc::not_involutive: return BLT_ERR_NOT_INVOLUTIVE;
    case errc::not_antitone: return BLT_ERR_NOT_ANTITONE;
    case errc::not_interlaced: return BLT_ERR_NOT_INTERLACED;
    case errc::not_commutative: return BLT_ERR_NOT_COMMUTATIVE;
    case errc::axiom_violation: return BLT_ERR_AXIOM_VIOLATION;
    case errc::carrier_too_large: return BLT_ERR_CARRIER_TOO_LARGE;
    case errc::too_many_variables: return BLT_ERR_TOO_MANY_VARIABLES;
    case errc::signature_mismatch: return BLT_ERR_SIGNATURE_MISMATCH;
    case errc::not_prime_bifilter: return BLT_ERR_NOT_PRIME_BIFILTER;
    case errc::not_distributive: return BLT_ERR_NOT_DISTRIBUTIVE;
    case errc::bad_step: return BLT_ERR_BAD_STEP;
    case errc::syntax_error: return BLT_ERR_SYNTAX;
    case errc::depth_exceeded: return BLT_ERR_DEPTH_EXCEEDED;
    case errc::invalid_input: return BLT_ERR_INVALID_INPUT;
  }
  return BLT_ERR_OTHER;
}

char* dup_string(const std::string& s) {
  char* out = (char*)std::malloc(s.size() + 1);
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
blt_status guard(F&& f) {
  try {
    f();
    return BLT_OK;
  } catch (const error& e) {
    g_last_error = e.what();
    return status_of(e.code);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BLT_ERR_OTHER;
  }
}

// --- variety checks over AnyAlgebra ---

bool holds_eq(const AlgebraView& v, const TermPtr& l, const TermPtr& r) {
  return check_identity(v, Equation{l, r});
}

struct VarietyReport {
  bool holds = false;
  json details = json::object();
};

VarietyReport check_variety(const AnyAlgebra& A, const std::string& variety) {
  VarietyReport R;
  if (variety == "pre") {
    R.holds = true;  // construction already validated both lattices
    R.details["interlaced"] = is_interlaced(A.pre);
    R.details["distributive"] = is_distributive_pb(A.pre);
    return R;
  }
  if (variety == "int") {
    R.holds = is_interlaced(A.pre);
    return R;
  }
  if (variety == "dist") {
    R.holds = is_distributive_pb(A.pre);
    return R;
  }
  if (variety == "bil") {
    if (!A.neg) { R.details["reason"] = "no negation table"; return R; }
    R.holds = true;  // neg1–neg3 validated at load
    return R;
  }
  if (variety == "conf") {
    if (!A.neg || !A.conf) { R.details["reason"] = "needs neg and conf"; return R; }
    Bilattice b{A.pre, *A.neg};
    ConflatedBilattice c = check_conflation(std::move(b), *A.conf);
    R.holds = true;
    R.details["commutative"] = c.commutative;
    return R;
  }
  if (variety == "imp") {
    if (!A.neg || !A.imp) { R.details["reason"] = "needs neg and imp"; return R; }
    Bilattice b{A.pre, *A.neg};
    auto bad = implicative_violations(b, *A.imp);
    R.holds = bad.empty();
    R.details["violations"] = bad;
    return R;
  }
  if (variety == "rdm" || variety == "ialg") {
    if (!A.neg || !A.imp) { R.details["reason"] = "needs neg and imp"; return R; }
    AlgebraView v = A.view();
    if (v.top_const < 0) { R.details["reason"] = "no top constant"; return R; }
    auto x = mkvar("x"), y = mkvar("y"), z = mkvar("z");
    std::vector<std::string> bad;
    if (variety == "rdm") {
      // residuated De Morgan lattice: De Morgan {∧,∨,¬} base plus RD0–RD6
      if (!is_distributive(A.pre.tlat)) bad.push_back("base not distributive");
      if (!holds_eq(v, mknot(mknot(x)), x)) bad.push_back("not involutive");
      if (!holds_eq(v, mknot(mkand(x, y)), mkor(mknot(x), mknot(y))))
        bad.push_back("De Morgan law fails");
      auto top = mktop();
      if (!holds_eq(v, top, mknot(top))) bad.push_back("RD0");
      if (!holds_eq(v, mkimp(top, x), x)) bad.push_back("RD1");
      if (!holds_eq(v, mkimp(x, mkimp(y, z)), mkimp(mkand(x, y), z))) bad.push_back("RD2");
      if (!holds_eq(v, mkand(top, mkimp(mkimp(mkimp(x, y), x), x)), top)) bad.push_back("RD3");
      if (!holds_eq(v, mkimp(mkor(x, y), z), mkand(mkimp(x, z), mkimp(y, z))))
        bad.push_back("RD4");
      if (!holds_eq(v, mkand(x, mkimp(mkand(mkimp(x, y), mkimp(mknot(y), mknot(x))), y)), x))
        bad.push_back("RD5");
      if (!holds_eq(v, mkimp(mknot(mkimp(x, y)), z), mkimp(mkand(x, mknot(y)), z)))
        bad.push_back("RD6");
    } else {
      auto p_term = [](TermPtr a, TermPtr b, TermPtr c) {
        return mkimp(mkimp(a, b),
                     mkimp(mkimp(b, a),
                           mkimp(mkimp(mknot(a), mknot(b)),
                                 mkimp(mkimp(mknot(b), mknot(a)), c))));
      };
      if (!holds_eq(v, mkimp(mkimp(x, x), y), y)) bad.push_back("I1");
      if (!holds_eq(v, mkimp(x, mkimp(y, z)), mkimp(mkimp(x, y), mkimp(x, z))) ||
          !holds_eq(v, mkimp(x, mkimp(y, z)), mkimp(y, mkimp(x, z))))
        bad.push_back("I2");
      if (!holds_eq(v, mkimp(mkimp(mkimp(x, y), x), x), mkimp(x, x))) bad.push_back("I3");
      if (!holds_eq(v, mkimp(x, mkimp(mknot(y), z)), mkimp(mknot(mkimp(x, y)), z)))
        bad.push_back("I4");
      if (!holds_eq(v, mknot(mknot(x)), x)) bad.push_back("I5");
      if (!holds_eq(v, p_term(x, y, x), p_term(x, y, y))) bad.push_back("I6");
    }
    R.holds = bad.empty();
    R.details["violations"] = bad;
    return R;
  }
  throw error(errc::invalid_input, "unknown variety " + variety);
}

std::string render_table(const PreBilattice& p, const std::string& name,
                         const std::function<int(int, int)>& op) {
  std::ostringstream os;
  os << name << ":\n     ";
  for (int b = 0; b < p.n; ++b) os << p.label(b) << (b + 1 < p.n ? " " : "");
  os << "\n";
  for (int a = 0; a < p.n; ++a) {
    os << "  " << p.label(a) << " |";
    for (int b = 0; b < p.n; ++b) os << " " << p.label(op(a, b));
    os << "\n";
  }
  return os.str();
}

std::string emit_tables(const AnyAlgebra& A) {
  const PreBilattice& p = A.pre;
  std::ostringstream os;
  os << render_table(p, "and", [&p](int a, int b) { return p.meet_t(a, b); });
  os << render_table(p, "or", [&p](int a, int b) { return p.join_t(a, b); });
  os << render_table(p, "kand", [&p](int a, int b) { return p.meet_k(a, b); });
  os << render_table(p, "kor", [&p](int a, int b) { return p.join_k(a, b); });
  if (A.neg) {
    os << "not:\n";
    for (int a = 0; a < p.n; ++a) os << "  " << p.label(a) << " -> " << p.label((*A.neg)[a]) << "\n";
  }
  if (A.conf) {
    os << "conf:\n";
    for (int a = 0; a < p.n; ++a) os << "  " << p.label(a) << " -> " << p.label((*A.conf)[a]) << "\n";
  }
  if (A.imp) {
    os << render_table(p, "imp", [&A](int a, int b) { return (*A.imp)[a * A.pre.n + b]; });
    if (A.neg) {
      // derived connectives →  and *
      auto arrow = [&A](int a, int b) {
        const PreBilattice& q = A.pre;
        int ab = (*A.imp)[a * q.n + b];
        int nn = (*A.imp)[(*A.neg)[b] * q.n + (*A.neg)[a]];
        return q.meet_t(ab, nn);
      };
      os << render_table(p, "arrow", arrow);
      os << render_table(p, "star", [&A, arrow](int a, int b) {
        return (*A.neg)[arrow(a, (*A.neg)[b])];
      });
    }
  }
  return os.str();
}

Bilattice as_bilattice(const AnyAlgebra& A) {
  if (!A.neg) throw error(errc::signature_mismatch, "no negation table");
  return Bilattice{A.pre, *A.neg};
}

}  // namespace

extern "C" {

const char* blt_version(void) { return "1.0.0"; }

const char* blt_last_error(void) { return g_last_error.c_str(); }

void blt_string_free(char* s) { std::free(s); }

blt_status blt_algebra_from_json(const char* json_text, blt_algebra** out) {
  return guard([&] {
    json j = json::parse(json_text, nullptr, true);
    *out = new blt_algebra{algebra_from_json(j)};
  });
}

blt_status blt_algebra_named(const char* name, blt_algebra** out) {
  return guard([&] { *out = new blt_algebra{named_algebra(name)}; });
}

void blt_algebra_free(blt_algebra* a) { delete a; }

blt_status blt_algebra_check(const blt_algebra* a, const char* variety, int* holds,
                             char** report) {
  return guard([&] {
    VarietyReport R = check_variety(a->alg, variety);
    *holds = R.holds ? 1 : 0;
    if (report) {
      json j{{"variety", variety}, {"holds", R.holds}, {"details", R.details}};
      *report = dup_string(j.dump());
    }
  });
}

blt_status blt_algebra_decompose(const blt_algebra* a, char** json_out) {
  return guard([&] {
    const AnyAlgebra& A = a->alg;
    Decomposition D;
    if (A.imp) {
      ImplicativeBilattice I = check_implicative(as_bilattice(A), *A.imp);
      D = decompose_implicative(I);
    } else if (A.conf) {
      ConflatedBilattice C = check_conflation(as_bilattice(A), *A.conf);
      D = decompose_conflated(C);
    } else if (A.neg) {
      D = decompose_bilattice(as_bilattice(A));
    } else {
      D = decompose_pre(A.pre);
    }
    *json_out = dup_string(decomposition_to_json(D).dump(2));
  });
}

blt_status blt_algebra_enumerate(const blt_algebra* a, const char* what, char** json_out) {
  return guard([&] {
    const AnyAlgebra& A = a->alg;
    std::string w = what;
    json j;
    if (w == "bifilters") {
      auto fs = enumerate_bifilters(A.pre);
      json arr = json::array(), prime = json::array();
      for (Subset f : fs) {
        arr.push_back(subset_to_json(f, A.pre.n));
        prime.push_back(is_prime_bifilter(A.pre, f));
      }
      j = json{{"bifilters", std::move(arr)}, {"prime", std::move(prime)}};
    } else if (w == "congruences") {
      auto cs = enumerate_congruences(A.view());
      json arr = json::array();
      for (const auto& c : cs) arr.push_back(congruence_to_json(c));
      j = json{{"congruences", std::move(arr)}};
    } else {
      throw error(errc::invalid_input, "unknown enumeration " + w);
    }
    *json_out = dup_string(j.dump(2));
  });
}

blt_status blt_algebra_emit(const blt_algebra* a, const char* format, char** out) {
  return guard([&] {
    std::string f = format;
    if (f == "json")
      *out = dup_string(algebra_to_json(a->alg).dump(2));
    else if (f == "tables")
      *out = dup_string(emit_tables(a->alg));
    else
      throw error(errc::invalid_input, "unknown format " + f);
  });
}

blt_status blt_decide(const char* logic, const char* method, const char* sequent_text,
                      int* valid) {
  return guard([&] {
    std::string lg = logic, me = method;
    bool lbs = lg == "lbs";
    if (!lbs && lg != "lb") throw error(errc::invalid_input, "logic must be lb or lbs");
    Sequent s = parse_sequent(sequent_text, lbs, /*allow_empty_left=*/true);
    if (s.right.size() != 1)
      throw error(errc::invalid_input, "decide expects exactly one conclusion");
    bool v;
    if (me == "semantic")
      v = lbs ? consequence_lbs(s.left, s.right[0]) : consequence_lb(s.left, s.right[0]);
    else if (me == "nf" && !lbs)
      v = decide_nf(s.left, s.right[0]);
    else
      throw error(errc::invalid_input, "method must be semantic or nf (nf is lb-only)");
    *valid = v ? 1 : 0;
  });
}

blt_status blt_normal_form(const char* formula_text, char** out) {
  return guard([&] {
    NormalForm nf = normal_form(parse_formula(formula_text, false));
    *out = dup_string(print_term(normal_form_to_term(nf)));
  });
}

blt_status blt_prove(const char* sequent_text, int depth, int* proved, char** proof_json) {
  return guard([&] {
    Sequent s = parse_sequent(sequent_text, false);
    GentzenResult r = prove_gentzen(s, depth);
    if (r.status == ProofSearch::DepthExceeded)
      throw error(errc::depth_exceeded, "no proof within depth " + std::to_string(depth));
    *proved = r.status == ProofSearch::Proved ? 1 : 0;
    if (proof_json)
      *proof_json = r.proof ? dup_string(gentzen_proof_to_json(*r.proof).dump(2))
                            : dup_string("null");
  });
}

blt_status blt_check_proof(const char* calculus, const char* proof_json, int* ok,
                           char** diag) {
  return guard([&] {
    json j = json::parse(proof_json);
    std::string cal = calculus;
    std::string message = "ok";
    bool good = false;
    try {
      if (cal == "glb") {
        Sequent goal = parse_sequent(j.at("goal").get<std::string>(), false);
        GentzenProof p = gentzen_proof_from_json(j.at("proof"));
        good = check_gentzen(p, goal);
        if (!good) message = "proof root differs from goal";
      } else if (cal == "hlb" || cal == "hlbs") {
        std::vector<TermPtr> prem;
        for (const auto& s : j.at("premises"))
          prem.push_back(parse_formula(s.get<std::string>(), cal == "hlbs"));
        TermPtr concl = parse_formula(j.at("conclusion").get<std::string>(), cal == "hlbs");
        if (cal == "hlb")
          good = check_hilbert_lb(hilbert_lb_from_json(j.at("steps")), prem, concl);
        else
          good = check_hilbert_lbs(hilbert_lbs_from_json(j.at("steps")), prem, concl);
        if (!good) message = "final step is not the stated conclusion";
      } else {
        throw error(errc::invalid_input, "calculus must be hlb, hlbs or glb");
      }
    } catch (const error& e) {
      if (e.code != errc::bad_step) throw;
      good = false;
      message = e.what();
    }
    *ok = good ? 1 : 0;
    if (diag) *diag = dup_string(message);
  });
}

blt_status blt_translate(const char* dir, const char* system, const char* input,
                         char** out) {
  return guard([&] {
    std::string d = dir, sys = system;
    std::string result;
    if (sys == "glb") {
      if (d == "tau") {
        result = print_equation(tau_gentzen(parse_sequent(input, false)));
      } else if (d == "rho") {
        for (const auto& s : rho_gentzen(parse_equation(input, false))) {
          if (!result.empty()) result += "\n";
          result += print_sequent(s);
        }
      } else {
        throw error(errc::invalid_input, "dir must be tau or rho");
      }
    } else if (sys == "lbs") {
      if (d == "tau") {
        result = print_equation(tau_lbs(parse_formula(input, true)));
      } else if (d == "rho") {
        RhoResult r = rho_lbs(parse_equation(input, true));
        result = print_term(r.iff);
        for (const auto& f : r.imp_set) result += "\n" + print_term(f);
      } else {
        throw error(errc::invalid_input, "dir must be tau or rho");
      }
    } else {
      throw error(errc::invalid_input, "system must be glb or lbs");
    }
    *out = dup_string(result);
  });
}

}  // extern "C"
