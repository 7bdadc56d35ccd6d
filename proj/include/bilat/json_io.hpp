#pragma once
#include <string>

#include <json.hpp>

#include "bilat/bilattice.hpp"
#include "bilat/filters.hpp"
#include "bilat/logic_lb.hpp"
#include "bilat/logic_lbs.hpp"
#include "bilat/representation.hpp"

namespace bilat {

using nlohmann::json;

// {"n": int, "leq": [[bool]]}, optional "inv" [int] and "relcomp" [[int]]
json lattice_to_json(const FiniteLattice& L);
FiniteLattice lattice_from_json(const json& j);

// {"pre": {"tlat":…, "klat":…}, "neg": […], "conf": […], "imp": [[…]],
//  "labels": […]} — everything beyond "pre" optional
json algebra_to_json(const AnyAlgebra& A);
AnyAlgebra algebra_from_json(const json& j);

json decomposition_to_json(const Decomposition& D);
json congruence_to_json(const Congruence& c);
json subset_to_json(Subset s, int n);

json gentzen_proof_to_json(const GentzenProof& p);
GentzenProof gentzen_proof_from_json(const json& j);
std::vector<HilbertStep> hilbert_lb_from_json(const json& j);
std::vector<HilbertStepImp> hilbert_lbs_from_json(const json& j);

std::string render_proof_tree(const GentzenProof& p, int indent = 0);

}  // namespace bilat
