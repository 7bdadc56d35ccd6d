#include "bilat/randgen.hpp"

namespace bilat {

TermPtr random_formula(std::mt19937& rng, int size, const std::vector<std::string>& vars,
                       bool with_imp) {
  if (size <= 1)
    return mkvar(vars[std::uniform_int_distribution<int>(0, (int)vars.size() - 1)(rng)]);
  int n_binary = with_imp ? 5 : 4;
  // pick unary vs binary; binary impossible at size 2
  if (size == 2 || std::uniform_int_distribution<int>(0, n_binary)(rng) == 0)
    return mknot(random_formula(rng, size - 1, vars, with_imp));
  int lsize = std::uniform_int_distribution<int>(1, size - 2)(rng);
  TermPtr l = random_formula(rng, lsize, vars, with_imp);
  TermPtr r = random_formula(rng, size - 1 - lsize, vars, with_imp);
  switch (std::uniform_int_distribution<int>(0, n_binary - 1)(rng)) {
    case 0: return mkand(l, r);
    case 1: return mkor(l, r);
    case 2: return mkkand(l, r);
    case 3: return mkkor(l, r);
    default: return mkimp(l, r);
  }
}

TermPtr random_term_depth(std::mt19937& rng, int depth, const std::vector<std::string>& vars,
                          bool with_imp) {
  if (depth <= 0 || std::uniform_int_distribution<int>(0, 4)(rng) == 0)
    return mkvar(vars[std::uniform_int_distribution<int>(0, (int)vars.size() - 1)(rng)]);
  int n_binary = with_imp ? 5 : 4;
  int pick = std::uniform_int_distribution<int>(0, n_binary)(rng);
  if (pick == n_binary) return mknot(random_term_depth(rng, depth - 1, vars, with_imp));
  TermPtr l = random_term_depth(rng, depth - 1, vars, with_imp);
  TermPtr r = random_term_depth(rng, depth - 1, vars, with_imp);
  switch (pick) {
    case 0: return mkand(l, r);
    case 1: return mkor(l, r);
    case 2: return mkkand(l, r);
    case 3: return mkkor(l, r);
    default: return mkimp(l, r);
  }
}

}  // namespace bilat
