#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "lsmap/timing.hpp"

namespace lsmap {

// A data location: a data patch on the checkerboard, a tile on the
// tile-based fabric. Row/col live on the logical R x C data grid.
struct Location {
  int row = 0;
  int col = 0;
  auto operator<=>(const Location&) const = default;
};

// A reservable patch cell. Used to detect ancilla and data conflicts
// between concurrent two-qubit primitives.
//   Data     : the data location itself (a == row, b == col)
//   CAncilla : checkerboard ancilla on the (R+1) x (C+1) dual grid
//   TilePatch: one of the four patches of a tile (corner 0..3 = A,B,C,D)
struct PatchRef {
  enum class Kind { Data, CAncilla, TilePatch };
  Kind kind = Kind::Data;
  int a = 0;
  int b = 0;
  int corner = 0;
  auto operator<=>(const PatchRef&) const = default;
};

struct PrimitiveOp {
  GateKind kind = GateKind::Cnot;  // Cnot or Swap
  Location a;
  Location b;
  std::int64_t start = 0;
  std::int64_t duration = 1;
};

class Architecture {
 public:
  Architecture(ArchKind kind, int rows, int cols);

  ArchKind kind() const { return kind_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int n_locations() const { return rows_ * cols_; }

  bool in_grid(Location l) const;
  int index_of(Location l) const { return l.row * cols_ + l.col; }
  Location location_at(int idx) const { return {idx / cols_, idx % cols_}; }

  // Locations an occupant of l can interact with through a CNOT. The
  // checkerboard has the four von-Neumann neighbours; a tile additionally
  // reaches the upper-left and lower-right diagonal tiles (the other two
  // diagonals are dropped to rule out ancilla conflicts).
  std::vector<Location> neighbors(Location l) const;

  // Locations reachable by one SWAP. Tile swaps are restricted to
  // horizontally/vertically adjacent tiles.
  std::vector<Location> move_neighbors(Location l) const;

  bool are_neighbors(Location a, Location b) const;
  bool are_move_neighbors(Location a, Location b) const;

  // Ancilla patches consumed by a CNOT between neighbouring locations.
  // Checkerboard: the unique upper ancilla adjacent to both data patches.
  // Tile-based: the B/C corridor patches of the two tiles (plus, for a
  // diagonal pair, the borrowed corner patches of the two elbow tiles).
  std::vector<PatchRef> ancilla_for_cnot(Location a, Location b) const;

  // Everything a primitive keeps busy while it runs.
  std::vector<PatchRef> reservation(const PrimitiveOp& op) const;
  std::vector<PatchRef> data_reservation(Location l) const;

  // True iff the two primitives contend for a patch while their time
  // intervals overlap.
  bool conflicts(const PrimitiveOp& op1, const PrimitiveOp& op2) const;

  // Fraction of all logical patches in the footprint that hold data.
  double qubit_efficiency() const;

  // -- occupancy ----------------------------------------------------------
  void clear_occupancy();
  void set_occupant(Location l, int qubit);
  int occupant(Location l) const;                 // -1 when empty
  std::optional<Location> location_of(int qubit) const;
  void apply_swap(Location a, Location b);        // exchanges occupants
  const std::vector<int>& occupancy() const { return occ_; }

  // -- figure numbering ---------------------------------------------------
  // 1-based display index of a data location: the checkerboard counts
  // anti-diagonals of the data grid in reading order of the rotated
  // drawing, tiles count row-major.
  int display_index(Location l) const;
  Location location_of_display_index(int idx) const;

  // Checkerboard only: dual-grid cell of the upper ancilla shared by a
  // neighbouring pair, and its 1-based display index (reading order of
  // the rotated drawing; the two cells touching the corner data patch
  // come last).
  PatchRef upper_ancilla(Location a, Location b) const;
  int ancilla_display_index(const PatchRef& p) const;

 private:
  ArchKind kind_;
  int rows_;
  int cols_;
  std::vector<int> occ_;
};

}  // namespace lsmap
