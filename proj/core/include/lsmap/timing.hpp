#pragma once

#include <cstdint>

#include "lsmap/circuit.hpp"

namespace lsmap {

enum class ArchKind { Checkerboard, TileBased };

const char* arch_name(ArchKind k);

// Logical operation durations in surface-code cycles as a function of the
// code distance d. Movement and CNOT costs depend on the architecture:
// the checkerboard uses surgery CNOTs (3d) and SWAPs built from three of
// them (9d); the tile-based fabric pays 4d per CNOT but swaps tiles by
// joint measurement in 3d.
class TimingModel {
 public:
  explicit TimingModel(int distance);

  int distance() const { return d_; }

  // kind must not be Wait (waits carry their own caller-specified length).
  std::int64_t duration(GateKind kind, ArchKind arch) const;

  // Cost of a surgery CNOT without overlapping split and merge rounds.
  // Informational only; the operative cost is 3d.
  std::int64_t unparallelized_cnot_cycles() const { return 4l * d_ + 1; }

 private:
  int d_;
};

}  // namespace lsmap
