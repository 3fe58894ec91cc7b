#include "lsmap/steane.hpp"

namespace lsmap {

std::string steane_encoder_qasm() {
  return
      "# Steane [[7,1,3]] encoding circuit (7-enc)\n"
      "qubits 7\n"
      "prepz q0\n"
      "prepz q1\n"
      "prepz q2\n"
      "prepz q3\n"
      "prepz q4\n"
      "prepz q5\n"
      "prepz q6\n"
      "h q0\n"
      "h q1\n"
      "h q3\n"
      "cnot q2,q4\n"
      "cnot q2,q5\n"
      "cnot q0,q2\n"
      "cnot q0,q4\n"
      "cnot q0,q6\n"
      "cnot q1,q2\n"
      "cnot q1,q5\n"
      "cnot q1,q6\n"
      "cnot q3,q4\n"
      "cnot q3,q5\n"
      "cnot q3,q6\n";
}

Circuit steane_encoder() { return parse_qasm(steane_encoder_qasm()); }

}  // namespace lsmap
