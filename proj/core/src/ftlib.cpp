#include "lsmap/ftlib.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lsmap {

int local_index(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad local qubit name");
  int n = std::stoi(name.substr(1));
  if (name[0] == 'D' && n >= 1 && n <= 9) return n - 1;
  if (name[0] == 'A' && n >= 1 && n <= 8) return 8 + n;
  throw std::invalid_argument("bad local qubit name " + name);
}

std::string local_name(int idx) {
  if (idx < 9) return "D" + std::to_string(idx + 1);
  return "A" + std::to_string(idx - 8);
}

std::pair<int, int> local_position(int idx) {
  if (idx < 9) return {2 * (idx / 3), 2 * (idx % 3)};
  switch (idx - 8) {  // A1..A8
    case 1: return {-1, 1};
    case 2: return {1, 1};
    case 3: return {1, 3};
    case 4: return {1, 5};
    case 5: return {3, -1};
    case 6: return {3, 1};
    case 7: return {3, 3};
    case 8: return {5, 3};
  }
  throw std::invalid_argument("bad local index");
}

namespace {

std::vector<std::vector<LocalOp>> build_round3() {
  auto D = [](int n) { return n - 1; };
  auto A = [](int n) { return 8 + n; };
  using K = GateKind;
  std::vector<std::vector<LocalOp>> ts(8);
  ts[0] = {{K::PrepZ, A(2)}, {K::PrepZ, A(7)}, {K::PrepZ, A(5)}};
  ts[1] = {{K::H, A(2)},     {K::H, A(7)},     {K::H, A(5)},
           {K::PrepZ, A(1)}, {K::PrepZ, A(3)}, {K::PrepZ, A(6)}};
  ts[2] = {{K::Cnot, A(2), D(5)}, {K::Cnot, A(7), D(9)},
           {K::Cnot, A(5), D(7)}, {K::Cnot, D(2), A(1)},
           {K::Cnot, D(6), A(3)}, {K::Cnot, D(8), A(6)},
           {K::PrepZ, A(8)},      {K::PrepZ, A(4)}};
  ts[3] = {{K::Cnot, A(2), D(2)}, {K::Cnot, A(7), D(6)},
           {K::Cnot, A(5), D(4)}, {K::Cnot, D(9), A(8)},
           {K::Cnot, D(3), A(3)}, {K::Cnot, D(5), A(6)},
           {K::H, A(4)}};
  ts[4] = {{K::Cnot, A(2), D(4)}, {K::Cnot, A(7), D(8)},
           {K::Cnot, A(4), D(6)}, {K::Cnot, D(1), A(1)},
           {K::Cnot, D(5), A(3)}, {K::Cnot, D(7), A(6)},
           {K::H, A(5)}};
  ts[5] = {{K::Cnot, A(2), D(1)}, {K::Cnot, A(7), D(5)},
           {K::Cnot, A(4), D(3)}, {K::Cnot, D(8), A(8)},
           {K::Cnot, D(2), A(3)}, {K::Cnot, D(4), A(6)},
           {K::MeasZ, A(1)},      {K::MeasZ, A(5)}};
  ts[6] = {{K::H, A(2)},     {K::H, A(4)},     {K::H, A(7)},
           {K::MeasZ, A(3)}, {K::MeasZ, A(6)}, {K::MeasZ, A(8)}};
  ts[7] = {{K::MeasZ, A(2)}, {K::MeasZ, A(4)}, {K::MeasZ, A(7)}};
  return ts;
}

}  // namespace

std::vector<std::vector<LocalOp>> esm_round(int d) {
  if (d != 3)
    throw std::invalid_argument(
        "no pre-scheduled ESM round for d=" + std::to_string(d));
  static const auto round = build_round3();
  return round;
}

std::string format_esm_round(const std::vector<std::vector<LocalOp>>& round) {
  std::ostringstream out;
  for (const auto& ts : round) {
    out << "{ ";
    for (size_t i = 0; i < ts.size(); i++) {
      if (i) out << " | ";
      const auto& op = ts[i];
      switch (op.kind) {
        case GateKind::PrepZ: out << "prepz " << local_name(op.a); break;
        case GateKind::H: out << "h " << local_name(op.a); break;
        case GateKind::MeasZ: out << "measure " << local_name(op.a); break;
        case GateKind::Cnot:
          out << "cnot " << local_name(op.a) << ", " << local_name(op.b);
          break;
        default: throw std::logic_error("unexpected ESM op");
      }
    }
    out << "}\n";
  }
  return out.str();
}

QSymbolTable::QSymbolTable(const Architecture& a, const Placement& p, int d)
    : d_(d), block_size_(2 * d * d - 1) {
  (void)p;  // blocks cover every location; the placement picks which are live
  for (int i = 0; i < a.n_locations(); i++) {
    Location l = a.location_at(i);
    if (a.kind() == ArchKind::Checkerboard) {
      blocks_.push_back(PatchRef{PatchRef::Kind::Data, l.row, l.col, 0});
    } else {
      for (int corner = 0; corner < 4; corner++)
        blocks_.push_back(
            PatchRef{PatchRef::Kind::TilePatch, l.row, l.col, corner});
    }
  }
  if (a.kind() == ArchKind::Checkerboard) {
    for (int r = 0; r <= a.rows(); r++)
      for (int c = 0; c <= a.cols(); c++)
        blocks_.push_back(PatchRef{PatchRef::Kind::CAncilla, r, c, 0});
  }
  magic_block_ = static_cast<int>(blocks_.size());
  blocks_.push_back(PatchRef{PatchRef::Kind::Data, -1, -1, 0});
}

int QSymbolTable::block_of(const PatchRef& p) const {
  for (size_t i = 0; i < blocks_.size(); i++)
    if (blocks_[i] == p) return static_cast<int>(i);
  throw std::out_of_range("patch has no block");
}

int QSymbolTable::data_block(Location l) const {
  PatchRef p{PatchRef::Kind::Data, l.row, l.col, 0};
  // in the tile fabric the data qubit sits in the tile's A patch
  PatchRef t{PatchRef::Kind::TilePatch, l.row, l.col, 0};
  for (size_t i = 0; i < blocks_.size(); i++)
    if (blocks_[i] == p || blocks_[i] == t) return static_cast<int>(i);
  throw std::out_of_range("location has no block");
}

QSymbolTable build_symbol_table(const Architecture& a, const Placement& p,
                                int d) {
  return QSymbolTable(a, p, d);
}

std::int64_t template_cycles(GateKind kind, ArchKind arch, int d) {
  return TimingModel(d).duration(kind, arch);
}

namespace {

// transversal slot content of a 1-qubit logical operation on its first
// cycle; logical X spans the top data row, logical Z the left column
std::vector<std::pair<GateKind, int>> transversal_slot(GateKind kind) {
  auto D = [](int n) { return n - 1; };
  using K = GateKind;
  switch (kind) {
    case K::I: return {};
    case K::X: return {{K::X, D(1)}, {K::X, D(2)}, {K::X, D(3)}};
    case K::Z: return {{K::Z, D(1)}, {K::Z, D(4)}, {K::Z, D(7)}};
    case K::Y:
      return {{K::Y, D(1)}, {K::X, D(2)}, {K::X, D(3)},
              {K::Z, D(4)}, {K::Z, D(7)}};
    case K::H: {
      std::vector<std::pair<GateKind, int>> out;
      for (int i = 0; i < 9; i++) out.push_back({K::H, i});
      return out;
    }
    case K::PrepZ: {
      std::vector<std::pair<GateKind, int>> out;
      for (int i = 0; i < 9; i++) out.push_back({K::PrepZ, i});
      return out;
    }
    case K::PrepX: {
      std::vector<std::pair<GateKind, int>> out;
      for (int i = 0; i < 9; i++) out.push_back({K::PrepX, i});
      return out;
    }
    case K::MeasZ: {
      std::vector<std::pair<GateKind, int>> out;
      for (int i = 0; i < 9; i++) out.push_back({K::MeasZ, i});
      return out;
    }
    case K::MeasX: {
      std::vector<std::pair<GateKind, int>> out;
      for (int i = 0; i < 9; i++) out.push_back({K::MeasX, i});
      return out;
    }
    default: return {};
  }
}

struct CycleContent {
  std::vector<Instruction> transversal;
  std::vector<int> esm_blocks;  // sorted unique
};

}  // namespace

Circuit expand_physical(const RoutedCircuit& rc, const QSymbolTable& sym,
                        const Architecture& arch, const TimingModel& t) {
  if (t.distance() != 3 || sym.distance() != 3)
    throw std::invalid_argument("physical emission requires d = 3");

  std::map<std::int64_t, CycleContent> cycles;
  auto esm_on = [&](std::int64_t from, std::int64_t len,
                    const std::vector<int>& blocks) {
    for (std::int64_t c = from; c < from + len; c++) {
      auto& cc = cycles[c];
      for (int b : blocks) cc.esm_blocks.push_back(b);
    }
  };

  for (const auto& op : rc.ops) {
    GateKind k = op.ins.kind;
    std::int64_t dur = op.duration;
    if (k == GateKind::Wait) continue;
    if (op.ins.qubits.size() == 2) {
      std::vector<int> blocks;
      PrimitiveOp prim{k, op.a, op.b, op.start, dur};
      for (const auto& p : arch.reservation(prim))
        blocks.push_back(sym.block_of(p));
      std::sort(blocks.begin(), blocks.end());
      blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
      esm_on(op.start, dur, blocks);
      continue;
    }
    int block = sym.data_block(op.a);
    bool magic = k == GateKind::S || k == GateKind::Sdag ||
                 k == GateKind::T || k == GateKind::Tdag;
    bool readout = k == GateKind::MeasZ || k == GateKind::MeasX;
    std::vector<int> blocks{block};
    if (magic) blocks.push_back(sym.magic_block());
    if (readout) blocks.clear();  // the readout slot replaces the round
    esm_on(op.start, dur, blocks);
    auto& first = cycles[op.start];
    if (magic) {
      // placeholder interaction with the pre-allocated magic-state patch
      Instruction ins;
      ins.kind = GateKind::I;
      ins.qubits = {sym.global_id(sym.magic_block(), 0)};
      first.transversal.push_back(ins);
    } else {
      for (auto [pk, local] : transversal_slot(k)) {
        Instruction ins;
        ins.kind = pk;
        ins.qubits = {sym.global_id(block, local)};
        first.transversal.push_back(ins);
      }
    }
  }

  Circuit out;
  out.n_qubits = sym.total_qubits();
  int next_id = 0;
  auto round = esm_round(3);
  std::int64_t prev_cycle = -1;
  for (auto& [cycle, cc] : cycles) {
    if (prev_cycle >= 0) {
      std::int64_t gap = 9 * (cycle - prev_cycle) - 8;
      if (gap > 1) {
        Instruction w;
        w.id = next_id++;
        w.kind = GateKind::Wait;
        w.wait_cycles = static_cast<int>(gap);
        out.steps.push_back({w});
      }
    }
    std::sort(cc.esm_blocks.begin(), cc.esm_blocks.end());
    cc.esm_blocks.erase(
        std::unique(cc.esm_blocks.begin(), cc.esm_blocks.end()),
        cc.esm_blocks.end());

    auto placeholder = [&]() {
      Instruction w;
      w.id = next_id++;
      w.kind = GateKind::Wait;
      w.wait_cycles = 1;
      return w;
    };

    std::vector<Instruction> slot = cc.transversal;
    for (auto& ins : slot) ins.id = next_id++;
    if (slot.empty()) slot = {placeholder()};
    out.steps.push_back(std::move(slot));

    for (int ts = 0; ts < 8; ts++) {
      std::vector<Instruction> bundle;
      for (int b : cc.esm_blocks) {
        for (const auto& lop : round[ts]) {
          Instruction ins;
          ins.id = next_id++;
          ins.kind = lop.kind;
          ins.qubits = {sym.global_id(b, lop.a)};
          if (lop.b >= 0) ins.qubits.push_back(sym.global_id(b, lop.b));
          bundle.push_back(std::move(ins));
        }
      }
      if (bundle.empty()) bundle = {placeholder()};
      out.steps.push_back(std::move(bundle));
    }
    prev_cycle = cycle;
  }
  return out;
}

}  // namespace lsmap
