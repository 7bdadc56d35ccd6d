#include "bilat/error.hpp"

namespace bilat {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_a_poset: return "NotAPoset";
    case errc::not_a_lattice: return "NotALattice";
    case errc::no_complement: return "NoComplement";
    case errc::no_top: return "NoTop";
    case errc::not_involutive: return "NotInvolutive";
    case errc::not_antitone: return "NotAntitone";
    case errc::not_interlaced: return "NotInterlaced";
    case errc::not_commutative: return "NotCommutative";
    case errc::axiom_violation: return "AxiomViolation";
    case errc::carrier_too_large: return "CarrierTooLarge";
    case errc::too_many_variables: return "TooManyVariables";
    case errc::signature_mismatch: return "SignatureMismatch";
    case errc::not_prime_bifilter: return "NotPrimeBifilter";
    case errc::not_distributive: return "NotDistributive";
    case errc::bad_step: return "BadStep";
    case errc::syntax_error: return "SyntaxError";
    case errc::depth_exceeded: return "DepthExceeded";
    case errc::invalid_input: return "InvalidInput";
  }
  return "UnknownError";
}

}  // namespace bilat
