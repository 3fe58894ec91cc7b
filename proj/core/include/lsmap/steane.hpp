#pragma once

#include <string>

#include "lsmap/circuit.hpp"

namespace lsmap {

// The Steane [[7,1,3]] encoding circuit shipped as the 7-enc benchmark:
// 7 preparations, 3 Hadamards and 11 CNOTs (21 gates). The X-stabilizer
// pivots are q0, q1, q3; the logical support {q2, q4, q5} is fanned out
// first.
std::string steane_encoder_qasm();
Circuit steane_encoder();

}  // namespace lsmap
