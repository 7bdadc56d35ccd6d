#include "bilat/logic_lbs.hpp"

#include <algorithm>

namespace bilat {

ImpOnMatrixResult imp_on_matrix(const Bilattice& B, Subset F) {
  const PreBilattice& p = B.pre;
  // need a ≤t-maximum
  int t = p.tlat.top();
  for (int a = 0; a < p.n; ++a)
    if (!p.leq_t(a, t)) throw error(errc::no_top, "no t-maximum");
  if (!is_prime_bifilter(p, F)) throw error(errc::not_prime_bifilter, "imp_on_matrix");
  ImpOnMatrixResult R;
  R.base = B;
  R.imp.assign(size_t(p.n) * p.n, 0);
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b)
      R.imp[a * p.n + b] = (uint8_t)(((F >> a) & 1u) ? b : t);
  R.ib_violations = implicative_violations(B, R.imp);
  if (R.ib_violations.empty()) R.algebra = check_implicative(B, R.imp);
  return R;
}

namespace {

std::vector<AxiomSchema> build_axioms() {
  TermPtr p = mkvar("p"), q = mkvar("q"), r = mkvar("r");
  std::vector<AxiomSchema> ax;
  auto add = [&ax](std::string name, std::vector<TermPtr> forms) {
    ax.push_back({std::move(name), std::move(forms)});
  };
  add("imp1", {mkimp(p, mkimp(q, p))});
  add("imp2", {mkimp(mkimp(p, mkimp(q, r)), mkimp(mkimp(p, q), mkimp(p, r)))});
  add("imp3", {mkimp(mkimp(mkimp(p, q), p), p)});
  add("and-elim", {mkimp(mkand(p, q), p), mkimp(mkand(p, q), q)});
  add("and-intro", {mkimp(p, mkimp(q, mkand(p, q)))});
  add("kand-elim", {mkimp(mkkand(p, q), p), mkimp(mkkand(p, q), q)});
  add("kand-intro", {mkimp(p, mkimp(q, mkkand(p, q)))});
  add("or-intro", {mkimp(p, mkor(p, q)), mkimp(q, mkor(p, q))});
  add("or-elim", {mkimp(mkimp(p, r), mkimp(mkimp(q, r), mkimp(mkor(p, q), r)))});
  add("kor-intro", {mkimp(p, mkkor(p, q)), mkimp(q, mkkor(p, q))});
  add("kor-elim", {mkimp(mkimp(p, r), mkimp(mkimp(q, r), mkimp(mkkor(p, q), r)))});
  add("neg-and", {mk_equiv(mknot(mkand(p, q)), mkor(mknot(p), mknot(q)))});
  add("neg-or", {mk_equiv(mknot(mkor(p, q)), mkand(mknot(p), mknot(q)))});
  add("neg-kand", {mk_equiv(mknot(mkkand(p, q)), mkkand(mknot(p), mknot(q)))});
  add("neg-kor", {mk_equiv(mknot(mkkor(p, q)), mkkor(mknot(p), mknot(q)))});
  add("neg-imp", {mk_equiv(mknot(mkimp(p, q)), mkand(p, mknot(q)))});
  add("neg-neg", {mk_equiv(p, mknot(mknot(p)))});
  return ax;
}

}  // namespace

const std::vector<AxiomSchema>& hlbs_axioms() {
  static const std::vector<AxiomSchema> ax = build_axioms();
  return ax;
}

namespace {

bool is_axiom_instance(const TermPtr& f, std::string* which = nullptr) {
  for (const auto& ax : hlbs_axioms())
    for (const auto& form : ax.forms) {
      std::map<std::string, TermPtr> binding;
      if (match_pattern(form, f, binding)) {
        if (which) *which = ax.name;
        return true;
      }
    }
  return false;
}

}  // namespace

bool check_hilbert_lbs(const std::vector<HilbertStepImp>& steps,
                       const std::vector<TermPtr>& gamma, const TermPtr& phi) {
  if (steps.empty()) throw error(errc::bad_step, "empty derivation");
  for (size_t i = 0; i < steps.size(); ++i) {
    const HilbertStepImp& s = steps[i];
    if (s.rule == "premise") {
      bool found = false;
      for (const auto& g : gamma)
        if (term_eq(g, s.formula)) { found = true; break; }
      if (!found) throw error(errc::bad_step, "step " + std::to_string(i) + ": not a premise");
    } else if (s.rule.rfind("axiom", 0) == 0) {
      std::string which;
      if (!is_axiom_instance(s.formula, &which))
        throw error(errc::bad_step, "step " + std::to_string(i) + ": not an axiom instance");
      if (s.rule.size() > 6) {  // "axiom:<name>" names a specific schema
        std::string want = s.rule.substr(6);
        bool ok = false;
        for (const auto& ax : hlbs_axioms()) {
          if (ax.name != want) continue;
          for (const auto& form : ax.forms) {
            std::map<std::string, TermPtr> binding;
            if (match_pattern(form, s.formula, binding)) { ok = true; break; }
          }
        }
        if (!ok)
          throw error(errc::bad_step, "step " + std::to_string(i) + ": not an instance of " + want);
      }
    } else if (s.rule == "mp") {
      if (s.from.size() != 2)
        throw error(errc::bad_step, "step " + std::to_string(i) + ": mp takes two references");
      int a = s.from[0], b = s.from[1];
      if (a < 0 || b < 0 || a >= (int)i || b >= (int)i)
        throw error(errc::bad_step, "step " + std::to_string(i) + ": bad reference");
      const TermPtr& maj = steps[b].formula;
      if (maj->op != Op::Imp || !term_eq(maj->l, steps[a].formula) ||
          !term_eq(maj->r, s.formula))
        throw error(errc::bad_step, "step " + std::to_string(i) + ": mp mismatch");
    } else {
      throw error(errc::bad_step, "step " + std::to_string(i) + ": unknown justification " + s.rule);
    }
  }
  return term_eq(steps.back().formula, phi);
}

namespace {

// five-step proof of χ⊃χ via ⊃1, ⊃2, MP, MP
void emit_self_imp(std::vector<HilbertStepImp>& out, const TermPtr& chi) {
  TermPtr cc = mkimp(chi, chi);
  TermPtr ccc = mkimp(chi, cc);
  int base = (int)out.size();
  out.push_back({mkimp(chi, mkimp(cc, chi)), "axiom:imp1", {}});
  out.push_back({mkimp(mkimp(chi, mkimp(cc, chi)), mkimp(ccc, cc)), "axiom:imp2", {}});
  out.push_back({mkimp(ccc, cc), "mp", {base, base + 1}});
  out.push_back({ccc, "axiom:imp1", {}});
  out.push_back({cc, "mp", {base + 3, base + 2}});
}

}  // namespace

std::vector<HilbertStepImp> ddt_forward(const std::vector<TermPtr>& gamma, const TermPtr& phi,
                                        const TermPtr& psi,
                                        const std::vector<HilbertStepImp>& d) {
  std::vector<TermPtr> extended = gamma;
  extended.push_back(phi);
  if (!check_hilbert_lbs(d, extended, psi))
    throw error(errc::invalid_input, "input derivation does not derive the goal");
  std::vector<HilbertStepImp> out;
  std::vector<int> image(d.size());  // index of φ⊃(step k) in out
  for (size_t k = 0; k < d.size(); ++k) {
    const HilbertStepImp& s = d[k];
    TermPtr goal = mkimp(phi, s.formula);
    if (term_eq(s.formula, phi)) {
      emit_self_imp(out, phi);
      image[k] = (int)out.size() - 1;
      continue;
    }
    if (s.rule == "mp") {
      // have φ⊃χa and φ⊃(χa⊃χ); use ⊃2
      int ia = image[s.from[0]], ib = image[s.from[1]];
      TermPtr chi_a = d[s.from[0]].formula;
      TermPtr ax2 = mkimp(mkimp(phi, mkimp(chi_a, s.formula)),
                          mkimp(mkimp(phi, chi_a), goal));
      out.push_back({ax2, "axiom:imp2", {}});
      out.push_back({mkimp(mkimp(phi, chi_a), goal), "mp", {ib, (int)out.size() - 1}});
      out.push_back({goal, "mp", {ia, (int)out.size() - 1}});
      image[k] = (int)out.size() - 1;
      continue;
    }
    // premise of Γ, or an axiom: restate, then weaken with ⊃1
    out.push_back({s.formula, s.rule, {}});
    out.push_back({mkimp(s.formula, goal), "axiom:imp1", {}});
    out.push_back({goal, "mp", {(int)out.size() - 2, (int)out.size() - 1}});
    image[k] = (int)out.size() - 1;
  }
  if (!check_hilbert_lbs(out, gamma, mkimp(phi, psi)))
    throw error(errc::invalid_input, "ddt transformation produced an invalid derivation");
  return out;
}

Equation tau_lbs(const TermPtr& phi) { return Equation{phi, mkimp(phi, phi)}; }

RhoResult rho_lbs(const Equation& e) {
  RhoResult r;
  r.iff = mk_iff(e.lhs, e.rhs);
  r.imp_set = {mkimp(e.lhs, e.rhs), mkimp(e.rhs, e.lhs),
               mkimp(mknot(e.lhs), mknot(e.rhs)), mkimp(mknot(e.rhs), mknot(e.lhs))};
  return r;
}

bool check_deductive_filter(const ImplicativeBilattice& A, Subset F) {
  const PreBilattice& p = A.base.pre;
  for (int a = 0; a < p.n; ++a)
    if (p.leq_t(A.top, a) && !((F >> a) & 1u)) return false;
  for (int a = 0; a < p.n; ++a) {
    if (!((F >> a) & 1u)) continue;
    for (int b = 0; b < p.n; ++b)
      if (((F >> A.imp_at(a, b)) & 1u) && !((F >> b) & 1u)) return false;
  }
  return true;
}

}  // namespace bilat
