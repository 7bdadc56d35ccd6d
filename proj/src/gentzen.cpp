#include <algorithm>
#include <map>

#include "bilat/logic_lb.hpp"

namespace bilat {

namespace {

std::vector<GentzenRule> build_rules() {
  // shape==Op::Not with negated=true encodes the ¬¬ rules
  return {
      {"and-l", true, Op::And, false, false},
      {"and-r", false, Op::And, false, true},
      {"not-and-l", true, Op::And, true, true},
      {"not-and-r", false, Op::And, true, false},
      {"or-l", true, Op::Or, false, true},
      {"or-r", false, Op::Or, false, false},
      {"not-or-l", true, Op::Or, true, false},
      {"not-or-r", false, Op::Or, true, true},
      {"kand-l", true, Op::KAnd, false, false},
      {"kand-r", false, Op::KAnd, false, true},
      {"not-kand-l", true, Op::KAnd, true, false},
      {"not-kand-r", false, Op::KAnd, true, true},
      {"kor-l", true, Op::KOr, false, true},
      {"kor-r", false, Op::KOr, false, false},
      {"not-kor-l", true, Op::KOr, true, true},
      {"not-kor-r", false, Op::KOr, true, false},
      {"not-not-l", true, Op::Not, true, false},
      {"not-not-r", false, Op::Not, true, false},
  };
}

}  // namespace

const std::vector<GentzenRule>& gentzen_rules() {
  static const std::vector<GentzenRule> rules = build_rules();
  return rules;
}

namespace {

// Does the rule apply to this formula as principal?
bool principal_matches(const GentzenRule& r, const TermPtr& f, TermPtr& phi, TermPtr& psi) {
  if (r.shape == Op::Not) {  // ¬¬φ
    if (f->op != Op::Not || f->l->op != Op::Not) return false;
    phi = f->l->l;
    psi = nullptr;
    return true;
  }
  if (r.negated) {
    if (f->op != Op::Not || f->l->op != r.shape) return false;
    phi = f->l->l;
    psi = f->l->r;
    return true;
  }
  if (f->op != r.shape) return false;
  phi = f->l;
  psi = f->r;
  return true;
}

// Formulas each premise adds (to the principal's side) after removing the
// principal; one inner vector per premise.
std::vector<std::vector<TermPtr>> premise_additions(const GentzenRule& r, const TermPtr& phi,
                                                    const TermPtr& psi) {
  auto n = [](const TermPtr& x) { return mknot(x); };
  if (r.shape == Op::Not) return {{phi}};  // ¬¬φ -> φ
  bool conj = r.shape == Op::And || r.shape == Op::KAnd;
  // ¬ distributes: over ∧/∨ it flips conjunctive/disjunctive behaviour,
  // over ⊗/⊕ it keeps it
  bool behaves_conj = r.negated && (r.shape == Op::And || r.shape == Op::Or) ? !conj : conj;
  TermPtr a = r.negated ? n(phi) : phi;
  TermPtr b = r.negated ? n(psi) : psi;
  // conjunctive on the left / disjunctive on the right: one premise with both;
  // otherwise two premises
  bool one_premise = r.left ? behaves_conj : !behaves_conj;
  if (one_premise) return {{a, b}};
  return {{a}, {b}};
}

std::vector<TermPtr> side_without(const std::vector<TermPtr>& side, const TermPtr& f) {
  std::vector<TermPtr> out;
  for (const auto& x : side)
    if (!term_eq(x, f)) out.push_back(x);
  return out;
}

Sequent premise_sequent(const Sequent& s, bool left, const TermPtr& principal,
                        const std::vector<TermPtr>& added) {
  std::vector<TermPtr> l = s.left, r = s.right;
  auto& target = left ? l : r;
  target = side_without(target, principal);
  for (const auto& a : added) target.push_back(a);
  return make_sequent(std::move(l), std::move(r));
}

bool has_common(const Sequent& s) {
  for (const auto& f : s.left)
    for (const auto& g : s.right)
      if (term_eq(f, g)) return true;
  return false;
}

void check_node(const GentzenProof& p) {
  if (p.seq.left.empty() || p.seq.right.empty())
    throw error(errc::bad_step, "sequent side empty");
  if (p.rule == "ax") {
    if (!p.premises.empty()) throw error(errc::bad_step, "ax takes no premises");
    if (!has_common(p.seq)) throw error(errc::bad_step, "ax without shared formula");
    return;
  }
  if (p.rule == "cut") {
    if (!p.cut_formula) throw error(errc::bad_step, "cut without cut formula");
    if (p.premises.size() != 2) throw error(errc::bad_step, "cut takes two premises");
    std::vector<TermPtr> l = p.seq.left, r = p.seq.right;
    r.push_back(p.cut_formula);
    Sequent want0 = make_sequent(p.seq.left, r);
    l.push_back(p.cut_formula);
    Sequent want1 = make_sequent(l, p.seq.right);
    if (!((sequent_eq(p.premises[0].seq, want0) && sequent_eq(p.premises[1].seq, want1)) ||
          (sequent_eq(p.premises[0].seq, want1) && sequent_eq(p.premises[1].seq, want0))))
      throw error(errc::bad_step, "cut premises mismatch");
    for (const auto& q : p.premises) check_node(q);
    return;
  }
  const GentzenRule* rule = nullptr;
  for (const auto& r : gentzen_rules())
    if (r.name == p.rule) { rule = &r; break; }
  if (!rule) throw error(errc::bad_step, "unknown rule " + p.rule);
  const auto& side = rule->left ? p.seq.left : p.seq.right;
  for (const auto& f : side) {
    TermPtr phi, psi;
    if (!principal_matches(*rule, f, phi, psi)) continue;
    auto adds = premise_additions(*rule, phi, psi);
    if (adds.size() != p.premises.size()) continue;
    bool ok = true;
    if (adds.size() == 1) {
      ok = sequent_eq(p.premises[0].seq, premise_sequent(p.seq, rule->left, f, adds[0]));
    } else {
      Sequent w0 = premise_sequent(p.seq, rule->left, f, adds[0]);
      Sequent w1 = premise_sequent(p.seq, rule->left, f, adds[1]);
      ok = (sequent_eq(p.premises[0].seq, w0) && sequent_eq(p.premises[1].seq, w1)) ||
           (sequent_eq(p.premises[0].seq, w1) && sequent_eq(p.premises[1].seq, w0));
    }
    if (ok) {
      for (const auto& q : p.premises) check_node(q);
      return;
    }
  }
  throw error(errc::bad_step, "no principal formula fits rule " + p.rule);
}

}  // namespace

bool check_gentzen(const GentzenProof& proof, const Sequent& goal) {
  if (!sequent_eq(proof.seq, goal)) return false;
  check_node(proof);
  return true;
}

namespace {

bool is_literal(const TermPtr& f) {
  return f->op == Op::Var || (f->op == Op::Not && f->l->op == Op::Var);
}

struct Searcher {
  std::map<std::string, bool> memo;  // sequent -> provable (fully decided only)
  bool depth_hit = false;

  // Order: right non-branching, left non-branching, right branching, left branching.
  const GentzenRule* pick(const Sequent& s, TermPtr& principal, TermPtr& phi, TermPtr& psi) {
    struct Pass { bool left, branching; };
    static const Pass passes[4] = {{false, false}, {true, false}, {false, true}, {true, true}};
    for (const auto& pass : passes) {
      const auto& side = pass.left ? s.left : s.right;
      for (const auto& f : side) {
        if (is_literal(f)) continue;
        for (const auto& r : gentzen_rules()) {
          if (r.left != pass.left || r.branching != pass.branching) continue;
          if (principal_matches(r, f, phi, psi)) {
            principal = f;
            return &r;
          }
        }
      }
    }
    return nullptr;
  }

  std::optional<GentzenProof> search(const Sequent& s, int depth) {
    if (has_common(s)) return GentzenProof{s, "ax", nullptr, {}};
    std::string key = print_sequent(s);
    auto it = memo.find(key);
    if (it != memo.end() && !it->second) return std::nullopt;
    TermPtr principal, phi, psi;
    const GentzenRule* rule = pick(s, principal, phi, psi);
    if (!rule) {  // literals only, no overlap: countermodel exists
      memo[key] = false;
      return std::nullopt;
    }
    if (depth <= 0) {
      depth_hit = true;
      return std::nullopt;
    }
    GentzenProof node{s, rule->name, nullptr, {}};
    for (const auto& adds : premise_additions(*rule, phi, psi)) {
      auto sub = search(premise_sequent(s, rule->left, principal, adds), depth - 1);
      if (!sub) {
        if (!depth_hit) memo[key] = false;
        return std::nullopt;
      }
      node.premises.push_back(std::move(*sub));
    }
    memo[key] = true;
    return node;
  }
};

}  // namespace

GentzenResult prove_gentzen(const Sequent& s, int depth_limit) {
  if (s.left.empty() || s.right.empty())
    throw error(errc::invalid_input, "sequent sides must be nonempty");
  Searcher se;
  auto proof = se.search(s, depth_limit);
  if (proof) return {ProofSearch::Proved, std::move(proof)};
  return {se.depth_hit ? ProofSearch::DepthExceeded : ProofSearch::Refuted, std::nullopt};
}

}  // namespace bilat
