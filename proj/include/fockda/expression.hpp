#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "fockda/fock.hpp"

namespace fockda {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One operator token: phi[p/2], h[n], Lhalf[n], Lhalf~[n], L1[n], L1~[n], Llb[l,b;n], J[k,n].
NeutralOperator parse_operator_token(std::string_view token);

/// Evaluates `[c] op ... op |0> (+|- [c] op ... |0>)*`, operators applied right to left; `0` is the
/// zero state. Every state printed by render_state parses back to itself. Throws ParseError.
FockState evaluate_expression(std::string_view expr);

}  // namespace fockda
