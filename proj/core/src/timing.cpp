#include "lsmap/timing.hpp"

#include <stdexcept>

namespace lsmap {

const char* arch_name(ArchKind k) {
  return k == ArchKind::Checkerboard ? "checkerboard" : "tile-based";
}

TimingModel::TimingModel(int distance) : d_(distance) {
  if (d_ < 3 || d_ % 2 == 0)
    throw std::invalid_argument("code distance must be an odd integer >= 3");
}

std::int64_t TimingModel::duration(GateKind kind, ArchKind arch) const {
  switch (kind) {
    case GateKind::PrepZ:
    case GateKind::PrepX:
    case GateKind::MeasZ:
    case GateKind::MeasX:
      return 1;  // Init & MSMT
    case GateKind::I:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
      return 1;  // Pauli
    case GateKind::H:
      return 4l * d_;
    case GateKind::S:
    case GateKind::Sdag:
      return 14l * d_;
    case GateKind::T:
    case GateKind::Tdag:
      return 17l * d_;
    case GateKind::Cnot:
      return arch == ArchKind::Checkerboard ? 3l * d_ : 4l * d_;
    case GateKind::Swap:
      return arch == ArchKind::Checkerboard ? 9l * d_ : 3l * d_;
    case GateKind::Wait:
      break;
  }
  throw std::invalid_argument("no table entry for this operation");
}

}  // namespace lsmap
