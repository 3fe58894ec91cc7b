#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lsmap/arch.hpp"
#include "lsmap/placement.hpp"
#include "lsmap/route.hpp"

namespace lsmap {

// Patch-local physical qubit indices for the distance-3 planar patch:
// data D1..D9 are 0..8 (row-major), ancillas A1..A8 are 9..16.
constexpr int kPatchQubits3 = 17;

int local_index(const std::string& name);   // "D5" -> 4, "A2" -> 10
std::string local_name(int idx);

// Doubled-grid coordinates of a local qubit (data on even/even). Used to
// check that ESM entangles ancillas with nearest-neighbour data only.
std::pair<int, int> local_position(int idx);

struct LocalOp {
  GateKind kind;  // PrepZ, H, Cnot, MeasZ
  int a;
  int b = -1;
};

// The pre-scheduled error-syndrome-measurement round of the d=3 planar
// patch: 8 timesteps, bit-exact. Throws for any other distance.
std::vector<std::vector<LocalOp>> esm_round(int d);

// Renders the round in the library's listing form:
//   { prepz A2 | prepz A7 | prepz A5}
std::string format_esm_round(const std::vector<std::vector<LocalOp>>& round);

// Physical address block per architecture patch. Blocks are assigned in
// raster order: data locations first, then the architecture's ancilla
// patches, then one pre-allocated magic-state patch.
class QSymbolTable {
 public:
  QSymbolTable(const Architecture& a, const Placement& p, int d);

  int distance() const { return d_; }
  int block_size() const { return block_size_; }  // 2d^2 - 1
  int n_blocks() const { return static_cast<int>(blocks_.size()); }
  int total_qubits() const { return n_blocks() * block_size_; }

  const std::vector<PatchRef>& blocks() const { return blocks_; }
  int block_of(const PatchRef& p) const;
  int data_block(Location l) const;
  int magic_block() const { return magic_block_; }

  int global_id(int block, int local) const {
    return block * block_size_ + local;
  }

 private:
  int d_;
  int block_size_;
  std::vector<PatchRef> blocks_;
  int magic_block_ = -1;
};

QSymbolTable build_symbol_table(const Architecture& a, const Placement& p,
                                int d);

// Surface-code cycles a logical operation expands to; always equals the
// timing table.
std::int64_t template_cycles(GateKind kind, ArchKind arch, int d);

// Expands a routed circuit into physical timesteps: each SC cycle is one
// transversal slot followed by the 8 ESM timesteps of every involved
// patch. Supported at d = 3; larger distances have no pre-scheduled round.
Circuit expand_physical(const RoutedCircuit& rc, const QSymbolTable& sym,
                        const Architecture& arch, const TimingModel& t);

}  // namespace lsmap
