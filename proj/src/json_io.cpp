#include "bilat/json_io.hpp"

namespace bilat {

json lattice_to_json(const FiniteLattice& L) {
  json leq = json::array();
  for (int a = 0; a < L.n; ++a) {
    json row = json::array();
    for (int b = 0; b < L.n; ++b) row.push_back(L.leq(a, b));
    leq.push_back(std::move(row));
  }
  return json{{"n", L.n}, {"leq", std::move(leq)}};
}

FiniteLattice lattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("leq"))
    throw error(errc::invalid_input, "lattice json needs n and leq");
  int n = j.at("n").get<int>();
  std::vector<std::vector<bool>> leq(n);
  const json& m = j.at("leq");
  if ((int)m.size() != n) throw error(errc::invalid_input, "leq size mismatch");
  for (int a = 0; a < n; ++a) {
    if ((int)m[a].size() != n) throw error(errc::invalid_input, "leq row size mismatch");
    leq[a].resize(n);
    for (int b = 0; b < n; ++b) leq[a][b] = m[a][b].get<bool>();
  }
  return FiniteLattice::from_order(n, leq);
}

json algebra_to_json(const AnyAlgebra& A) {
  json j;
  j["pre"] = {{"tlat", lattice_to_json(A.pre.tlat)}, {"klat", lattice_to_json(A.pre.klat)}};
  if (!A.pre.labels.empty()) j["labels"] = A.pre.labels;
  if (A.neg) j["neg"] = *A.neg;
  if (A.conf) j["conf"] = *A.conf;
  if (A.imp) {
    json rows = json::array();
    for (int a = 0; a < A.pre.n; ++a) {
      json row = json::array();
      for (int b = 0; b < A.pre.n; ++b) row.push_back((int)(*A.imp)[a * A.pre.n + b]);
      rows.push_back(std::move(row));
    }
    j["imp"] = std::move(rows);
  }
  return j;
}

AnyAlgebra algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("pre"))
    throw error(errc::invalid_input, "algebra json needs pre");
  AnyAlgebra A;
  FiniteLattice t = lattice_from_json(j.at("pre").at("tlat"));
  FiniteLattice k = lattice_from_json(j.at("pre").at("klat"));
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  A.pre = check_pre_bilattice(std::move(t), std::move(k), std::move(labels));
  if (j.contains("neg")) {
    A.neg = j.at("neg").get<std::vector<int>>();
    check_bilattice(A.pre, *A.neg);
  }
  if (j.contains("conf")) {
    if (!A.neg) throw error(errc::invalid_input, "conf requires neg");
    Bilattice b{A.pre, *A.neg};
    check_conflation(std::move(b), j.at("conf").get<std::vector<int>>());
    A.conf = j.at("conf").get<std::vector<int>>();
  }
  if (j.contains("imp")) {
    const json& rows = j.at("imp");
    if ((int)rows.size() != A.pre.n) throw error(errc::invalid_input, "imp size mismatch");
    std::vector<uint8_t> imp(size_t(A.pre.n) * A.pre.n);
    for (int a = 0; a < A.pre.n; ++a) {
      if ((int)rows[a].size() != A.pre.n)
        throw error(errc::invalid_input, "imp row size mismatch");
      for (int b = 0; b < A.pre.n; ++b) {
        int v = rows[a][b].get<int>();
        if (v < 0 || v >= A.pre.n) throw error(errc::invalid_input, "imp entry out of range");
        imp[a * A.pre.n + b] = (uint8_t)v;
      }
    }
    A.imp = std::move(imp);
  }
  return A;
}

json subset_to_json(Subset s, int n) {
  json out = json::array();
  for (int a = 0; a < n; ++a)
    if ((s >> a) & 1u) out.push_back(a);
  return out;
}

json congruence_to_json(const Congruence& c) {
  // classes as sorted lists of elements
  json out = json::array();
  for (int rep = 0; rep < c.n; ++rep) {
    if (c.cls[rep] != rep) continue;
    json cls = json::array();
    for (int a = 0; a < c.n; ++a)
      if (c.cls[a] == rep) cls.push_back(a);
    out.push_back(std::move(cls));
  }
  return out;
}

json decomposition_to_json(const Decomposition& D) {
  json j;
  json factors = json::array();
  for (const auto& f : D.factors) factors.push_back(lattice_to_json(f));
  j["factors"] = std::move(factors);
  if (D.factor_inv) j["factor_inv"] = *D.factor_inv;
  if (D.factor_relcomp) {
    int m = D.factors.front().n;
    json rows = json::array();
    for (int a = 0; a < m; ++a) {
      json row = json::array();
      for (int b = 0; b < m; ++b) row.push_back((int)(*D.factor_relcomp)[a * m + b]);
      rows.push_back(std::move(row));
    }
    j["factor_relcomp"] = std::move(rows);
  }
  json iso = json::array();
  for (const auto& [x, y] : D.iso) iso.push_back(json::array({x, y}));
  j["iso"] = std::move(iso);
  j["inverse"] = D.inverse;
  return j;
}

json gentzen_proof_to_json(const GentzenProof& p) {
  json j;
  j["sequent"] = print_sequent(p.seq);
  j["rule"] = p.rule;
  if (p.cut_formula) j["cut"] = print_term(p.cut_formula);
  if (!p.premises.empty()) {
    json prem = json::array();
    for (const auto& q : p.premises) prem.push_back(gentzen_proof_to_json(q));
    j["premises"] = std::move(prem);
  }
  return j;
}

GentzenProof gentzen_proof_from_json(const json& j) {
  if (!j.is_object() || !j.contains("sequent") || !j.contains("rule"))
    throw error(errc::invalid_input, "proof node needs sequent and rule");
  GentzenProof p;
  p.seq = parse_sequent(j.at("sequent").get<std::string>(), false);
  p.rule = j.at("rule").get<std::string>();
  if (j.contains("cut")) p.cut_formula = parse_formula(j.at("cut").get<std::string>(), false);
  if (j.contains("premises"))
    for (const auto& q : j.at("premises")) p.premises.push_back(gentzen_proof_from_json(q));
  return p;
}

std::vector<HilbertStep> hilbert_lb_from_json(const json& j) {
  std::vector<HilbertStep> steps;
  for (const auto& s : j) {
    HilbertStep st;
    st.formula = parse_formula(s.at("formula").get<std::string>(), false);
    st.rule = s.at("rule").get<std::string>();
    if (s.contains("from")) st.from = s.at("from").get<std::vector<int>>();
    steps.push_back(std::move(st));
  }
  return steps;
}

std::vector<HilbertStepImp> hilbert_lbs_from_json(const json& j) {
  std::vector<HilbertStepImp> steps;
  for (const auto& s : j) {
    HilbertStepImp st;
    st.formula = parse_formula(s.at("formula").get<std::string>(), true);
    st.rule = s.at("rule").get<std::string>();
    if (s.contains("from")) st.from = s.at("from").get<std::vector<int>>();
    steps.push_back(std::move(st));
  }
  return steps;
}

std::string render_proof_tree(const GentzenProof& p, int indent) {
  std::string out(indent * 2, ' ');
  out += "[" + p.rule + "] " + print_sequent(p.seq);
  if (p.cut_formula) out += "  (cut on " + print_term(p.cut_formula) + ")";
  out += "\n";
  for (const auto& q : p.premises) out += render_proof_tree(q, indent + 1);
  return out;
}

}  // namespace bilat
