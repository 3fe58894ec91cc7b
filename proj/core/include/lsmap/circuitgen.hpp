#pragma once

#include <cstdint>

#include "lsmap/circuit.hpp"

namespace lsmap {

// splitmix64: small, stable across platforms, good enough for test
// circuit generation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

 private:
  std::uint64_t state_;
};

struct RandomCircuitParams {
  int n_qubits = 4;
  int n_gates = 12;
  int cnot_percent = 45;
  int tsg_percent = 20;   // S/T family share of the single-qubit gates
  bool prep_first = true; // start each qubit with prepz
};

// Serial random circuit; deterministic in (params, seed).
Circuit random_circuit(const RandomCircuitParams& p, std::uint64_t seed);

}  // namespace lsmap
