#include "lsmap/arch.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsmap {

namespace {
constexpr int kCornerA = 0;
constexpr int kCornerB = 1;
constexpr int kCornerC = 2;
constexpr int kCornerD = 3;
}  // namespace

Architecture::Architecture(ArchKind kind, int rows, int cols)
    : kind_(kind), rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("architecture needs a positive grid");
  occ_.assign(rows_ * cols_, -1);
}

bool Architecture::in_grid(Location l) const {
  return l.row >= 0 && l.row < rows_ && l.col >= 0 && l.col < cols_;
}

std::vector<Location> Architecture::neighbors(Location l) const {
  if (!in_grid(l)) throw std::out_of_range("location outside the grid");
  std::vector<Location> out;
  auto push = [&](int r, int c) {
    Location n{r, c};
    if (in_grid(n)) out.push_back(n);
  };
  push(l.row - 1, l.col);
  push(l.row + 1, l.col);
  push(l.row, l.col - 1);
  push(l.row, l.col + 1);
  if (kind_ == ArchKind::TileBased) {
    push(l.row - 1, l.col - 1);
    push(l.row + 1, l.col + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Location> Architecture::move_neighbors(Location l) const {
  if (!in_grid(l)) throw std::out_of_range("location outside the grid");
  std::vector<Location> out;
  auto push = [&](int r, int c) {
    Location n{r, c};
    if (in_grid(n)) out.push_back(n);
  };
  push(l.row - 1, l.col);
  push(l.row + 1, l.col);
  push(l.row, l.col - 1);
  push(l.row, l.col + 1);
  std::sort(out.begin(), out.end());
  return out;
}

bool Architecture::are_neighbors(Location a, Location b) const {
  int dr = b.row - a.row, dc = b.col - a.col;
  if (std::abs(dr) + std::abs(dc) == 1) return true;
  if (kind_ == ArchKind::TileBased)
    return (dr == -1 && dc == -1) || (dr == 1 && dc == 1);
  return false;
}

bool Architecture::are_move_neighbors(Location a, Location b) const {
  return std::abs(b.row - a.row) + std::abs(b.col - a.col) == 1;
}

PatchRef Architecture::upper_ancilla(Location a, Location b) const {
  if (kind_ != ArchKind::Checkerboard)
    throw std::logic_error("upper_ancilla is a checkerboard notion");
  if (a > b) std::swap(a, b);
  PatchRef p;
  p.kind = PatchRef::Kind::CAncilla;
  if (a.row == b.row && b.col == a.col + 1) {
    p.a = a.row;
    p.b = a.col + 1;
  } else if (a.col == b.col && b.row == a.row + 1) {
    p.a = a.row + 1;
    p.b = a.col;
  } else {
    throw std::invalid_argument("locations are not neighbours");
  }
  return p;
}

std::vector<PatchRef> Architecture::ancilla_for_cnot(Location a,
                                                     Location b) const {
  if (!are_neighbors(a, b))
    throw std::invalid_argument("locations are not neighbours");
  if (kind_ == ArchKind::Checkerboard) return {upper_ancilla(a, b)};

  if (a > b) std::swap(a, b);
  std::vector<PatchRef> out;
  auto tile_patch = [](Location t, int corner) {
    PatchRef p;
    p.kind = PatchRef::Kind::TilePatch;
    p.a = t.row;
    p.b = t.col;
    p.corner = corner;
    return p;
  };
  out.push_back(tile_patch(a, kCornerB));
  out.push_back(tile_patch(a, kCornerC));
  out.push_back(tile_patch(b, kCornerB));
  out.push_back(tile_patch(b, kCornerC));
  if (b.row == a.row + 1 && b.col == a.col + 1) {
    // diagonal pair borrows the facing corners of the two elbow tiles
    out.push_back(tile_patch({a.row, a.col + 1}, kCornerC));
    out.push_back(tile_patch({a.row + 1, a.col}, kCornerB));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PatchRef> Architecture::data_reservation(Location l) const {
  if (kind_ == ArchKind::Checkerboard)
    return {PatchRef{PatchRef::Kind::Data, l.row, l.col, 0}};
  std::vector<PatchRef> out;
  for (int corner = 0; corner < 4; corner++)
    out.push_back(PatchRef{PatchRef::Kind::TilePatch, l.row, l.col, corner});
  return out;
}

std::vector<PatchRef> Architecture::reservation(const PrimitiveOp& op) const {
  std::vector<PatchRef> out = data_reservation(op.a);
  auto more = data_reservation(op.b);
  out.insert(out.end(), more.begin(), more.end());
  if (are_neighbors(op.a, op.b)) {
    auto anc = ancilla_for_cnot(op.a, op.b);
    out.insert(out.end(), anc.begin(), anc.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Architecture::conflicts(const PrimitiveOp& op1,
                             const PrimitiveOp& op2) const {
  std::int64_t e1 = op1.start + op1.duration;
  std::int64_t e2 = op2.start + op2.duration;
  if (e1 <= op2.start || e2 <= op1.start) return false;
  auto r1 = reservation(op1);
  auto r2 = reservation(op2);
  std::vector<PatchRef> common;
  std::set_intersection(r1.begin(), r1.end(), r2.begin(), r2.end(),
                        std::back_inserter(common));
  return !common.empty();
}

double Architecture::qubit_efficiency() const {
  double data = static_cast<double>(rows_) * cols_;
  if (kind_ == ArchKind::TileBased) return 0.25;
  // data grid plus the (R+1) x (C+1) dual grid of ancilla patches
  double ancilla = static_cast<double>(rows_ + 1) * (cols_ + 1);
  return data / (data + ancilla);
}

void Architecture::clear_occupancy() { occ_.assign(rows_ * cols_, -1); }

void Architecture::set_occupant(Location l, int qubit) {
  if (!in_grid(l)) throw std::out_of_range("location outside the grid");
  occ_[index_of(l)] = qubit;
}

int Architecture::occupant(Location l) const {
  if (!in_grid(l)) throw std::out_of_range("location outside the grid");
  return occ_[index_of(l)];
}

std::optional<Location> Architecture::location_of(int qubit) const {
  for (int i = 0; i < static_cast<int>(occ_.size()); i++)
    if (occ_[i] == qubit) return location_at(i);
  return std::nullopt;
}

void Architecture::apply_swap(Location a, Location b) {
  if (!are_move_neighbors(a, b))
    throw std::invalid_argument("swap between non-neighbouring locations");
  std::swap(occ_[index_of(a)], occ_[index_of(b)]);
}

int Architecture::display_index(Location l) const {
  if (!in_grid(l)) throw std::out_of_range("location outside the grid");
  if (kind_ == ArchKind::TileBased) return index_of(l) + 1;
  // anti-diagonal reading order of the rotated drawing
  int idx = 0;
  for (int d = 0; d < l.row + l.col; d++) {
    int lo = std::max(0, d - cols_ + 1);
    int hi = std::min(rows_ - 1, d);
    idx += std::max(0, hi - lo + 1);
  }
  int lo = std::max(0, l.row + l.col - cols_ + 1);
  idx += l.row - lo;
  return idx + 1;
}

Location Architecture::location_of_display_index(int idx) const {
  for (int i = 0; i < n_locations(); i++) {
    Location l = location_at(i);
    if (display_index(l) == idx) return l;
  }
  throw std::out_of_range("no such display index");
}

int Architecture::ancilla_display_index(const PatchRef& p) const {
  if (kind_ != ArchKind::Checkerboard || p.kind != PatchRef::Kind::CAncilla)
    throw std::logic_error("ancilla numbering is a checkerboard notion");
  // every upper ancilla of some neighbouring pair, in reading order of the
  // rotated drawing = by physical row a+b-1, then by a-b; the two cells
  // next to the corner data patch sit above the drawing and come last
  std::vector<PatchRef> cells;
  for (int r = 0; r < rows_; r++)
    for (int c = 0; c < cols_; c++) {
      if (c + 1 < cols_) cells.push_back(upper_ancilla({r, c}, {r, c + 1}));
      if (r + 1 < rows_) cells.push_back(upper_ancilla({r, c}, {r + 1, c}));
    }
  std::sort(cells.begin(), cells.end(), [&](const PatchRef& x, const PatchRef& y) {
    auto key = [&](const PatchRef& z) {
      return std::tuple<int, int, int>(z.a + z.b < 2 ? 1 : 0, z.a + z.b,
                                       z.a - z.b);
    };
    return key(x) < key(y);
  });
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  for (size_t i = 0; i < cells.size(); i++)
    if (cells[i] == p) return static_cast<int>(i) + 1;
  throw std::out_of_range("not an upper ancilla of this grid");
}

}  // namespace lsmap
