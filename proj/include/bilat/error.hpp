#pragma once
#include <stdexcept>
#include <string>

namespace bilat {

enum class errc {
  not_a_poset,
  not_a_lattice,
  no_complement,
  no_top,
  not_involutive,
  not_antitone,
  not_interlaced,
  not_commutative,
  axiom_violation,
  carrier_too_large,
  too_many_variables,
  signature_mismatch,
  not_prime_bifilter,
  not_distributive,
  bad_step,
  syntax_error,
  depth_exceeded,
  invalid_input,
};

const char* errc_name(errc c);

struct error : std::runtime_error {
  errc code;
  error(errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

}  // namespace bilat
