#pragma once
#include <random>

#include "bilat/term.hpp"

namespace bilat {

// Uniform-ish random formula of exactly `size` AST nodes over the given
// variables; includes ⊃ when with_imp is set.
TermPtr random_formula(std::mt19937& rng, int size, const std::vector<std::string>& vars,
                       bool with_imp);

// Random term of nesting depth <= depth (for equation sampling).
TermPtr random_term_depth(std::mt19937& rng, int depth, const std::vector<std::string>& vars,
                          bool with_imp);

}  // namespace bilat
