#include "lsmap/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace lsmap {

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::I: return "i";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdag: return "sdag";
    case GateKind::T: return "t";
    case GateKind::Tdag: return "tdag";
    case GateKind::PrepZ: return "prepz";
    case GateKind::PrepX: return "prepx";
    case GateKind::MeasZ: return "measz";
    case GateKind::MeasX: return "measx";
    case GateKind::Cnot: return "cnot";
    case GateKind::Swap: return "swap";
    case GateKind::Wait: return "qwait";
  }
  return "?";
}

int gate_arity(GateKind k) {
  if (k == GateKind::Wait) return 0;
  if (is_two_qubit(k)) return 2;
  return 1;
}

bool is_two_qubit(GateKind k) {
  return k == GateKind::Cnot || k == GateKind::Swap;
}

std::vector<const Instruction*> Circuit::instructions() const {
  std::vector<const Instruction*> out;
  for (const auto& step : steps)
    for (const auto& ins : step) out.push_back(&ins);
  return out;
}

std::vector<const Instruction*> Circuit::gates() const {
  std::vector<const Instruction*> out;
  for (const auto& step : steps)
    for (const auto& ins : step)
      if (ins.kind != GateKind::Wait) out.push_back(&ins);
  return out;
}

int Circuit::gate_count() const { return static_cast<int>(gates().size()); }

int Circuit::cnot_count() const {
  int n = 0;
  for (const auto& step : steps)
    for (const auto& ins : step)
      if (ins.kind == GateKind::Cnot) n++;
  return n;
}

int Circuit::next_id() const {
  int m = 0;
  for (const auto& step : steps)
    for (const auto& ins : step) m = std::max(m, ins.id + 1);
  return m;
}

ParseError::ParseError(int line_, int col_, const std::string& what_)
    : std::runtime_error("line " + std::to_string(line_) + ", col " +
                         std::to_string(col_) + ": " + what_),
      line(line_),
      col(col_) {}

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;
  int line = 1;
  int line_start = 0;

  Circuit circuit;
  std::map<std::string, int> name_to_index;
  bool have_header = false;
  int next_free_index = 0;
  int next_id = 0;

  explicit Parser(const std::string& t) : text(t) {}

  int col() const { return static_cast<int>(pos) - line_start + 1; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, col(), msg);
  }

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }

  void skip_blanks() {
    while (!done() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
      pos++;
    if (peek() == '#') {
      while (!done() && text[pos] != '\n') pos++;
    }
  }

  std::string token() {
    skip_blanks();
    size_t begin = pos;
    while (!done() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                       text[pos] == '_'))
      pos++;
    return text.substr(begin, pos - begin);
  }

  int qubit(const std::string& name) {
    if (name.empty()) fail("expected qubit name");
    if (!have_header) fail("missing 'qubits N' header");
    if (name.size() >= 2 && name[0] == 'q' &&
        std::all_of(name.begin() + 1, name.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int idx = std::stoi(name.substr(1));
      if (idx >= circuit.n_qubits)
        fail("undeclared qubit '" + name + "' (circuit has " +
             std::to_string(circuit.n_qubits) + ")");
      return idx;
    }
    auto it = name_to_index.find(name);
    if (it != name_to_index.end()) return it->second;
    if (next_free_index >= circuit.n_qubits)
      fail("undeclared qubit '" + name + "' (circuit has " +
           std::to_string(circuit.n_qubits) + ")");
    int idx = next_free_index++;
    name_to_index.emplace(name, idx);
    return idx;
  }

  static GateKind kind_of(const std::string& g, bool& known) {
    known = true;
    if (g == "i") return GateKind::I;
    if (g == "x") return GateKind::X;
    if (g == "y") return GateKind::Y;
    if (g == "z") return GateKind::Z;
    if (g == "h") return GateKind::H;
    if (g == "s") return GateKind::S;
    if (g == "sdag") return GateKind::Sdag;
    if (g == "t") return GateKind::T;
    if (g == "tdag") return GateKind::Tdag;
    if (g == "prepz") return GateKind::PrepZ;
    if (g == "prepx") return GateKind::PrepX;
    if (g == "measz") return GateKind::MeasZ;
    if (g == "measx") return GateKind::MeasX;
    if (g == "cnot") return GateKind::Cnot;
    if (g == "swap") return GateKind::Swap;
    if (g == "qwait") return GateKind::Wait;
    known = false;
    return GateKind::I;
  }

  Instruction instruction() {
    std::string g = token();
    if (g.empty()) fail("expected instruction");
    bool known = false;
    GateKind kind = kind_of(g, known);
    if (!known) fail("unknown gate '" + g + "'");
    Instruction ins;
    ins.id = next_id++;
    ins.kind = kind;
    if (kind == GateKind::Wait) {
      std::string n = token();
      if (n.empty() || !std::all_of(n.begin(), n.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          }))
        fail("qwait expects a cycle count");
      ins.wait_cycles = std::stoi(n);
      if (ins.wait_cycles < 1) fail("qwait count must be >= 1");
      return ins;
    }
    ins.qubits.push_back(qubit(token()));
    if (gate_arity(kind) == 2) {
      skip_blanks();
      if (peek() != ',') fail("expected ','");
      pos++;
      ins.qubits.push_back(qubit(token()));
      if (ins.qubits[0] == ins.qubits[1])
        fail("two-qubit gate with identical operands");
    }
    return ins;
  }

  void finish_line() {
    skip_blanks();
    if (!done() && text[pos] != '\n') fail("trailing characters");
    if (!done()) {
      pos++;
      line++;
      line_start = static_cast<int>(pos);
    }
  }

  Circuit run() {
    while (!done()) {
      skip_blanks();
      if (done()) break;
      if (text[pos] == '\n') {
        finish_line();
        continue;
      }
      if (!have_header) {
        std::string kw = token();
        if (kw != "qubits") fail("expected 'qubits N' header");
        std::string n = token();
        if (n.empty() || !std::all_of(n.begin(), n.end(), [](char c) {
              return std::isdigit(static_cast<unsigned char>(c));
            }))
          fail("expected qubit count");
        circuit.n_qubits = std::stoi(n);
        have_header = true;
        finish_line();
        continue;
      }
      std::vector<Instruction> bundle;
      if (text[pos] == '{') {
        pos++;
        while (true) {
          bundle.push_back(instruction());
          skip_blanks();
          if (peek() == '|') {
            pos++;
            continue;
          }
          if (peek() == '}') {
            pos++;
            break;
          }
          fail("expected '|' or '}'");
        }
        if (bundle.size() > 1)
          for (const auto& ins : bundle)
            if (ins.kind == GateKind::Wait)
              fail("qwait cannot be part of a bundle");
      } else {
        bundle.push_back(instruction());
      }
      for (size_t i = 0; i < bundle.size(); i++)
        for (size_t j = i + 1; j < bundle.size(); j++)
          for (int q : bundle[i].qubits)
            if (bundle[j].uses(q))
              fail("qubit q" + std::to_string(q) + " reused in bundle");
      circuit.steps.push_back(std::move(bundle));
      finish_line();
    }
    if (!have_header) throw ParseError(1, 1, "empty input: missing header");
    return circuit;
  }
};

void emit_instruction(std::ostringstream& out, const Instruction& ins) {
  out << gate_name(ins.kind);
  if (ins.kind == GateKind::Wait) {
    out << ' ' << ins.wait_cycles;
    return;
  }
  out << ' ';
  for (size_t i = 0; i < ins.qubits.size(); i++) {
    if (i) out << ',';
    out << 'q' << ins.qubits[i];
  }
}

}  // namespace

Circuit parse_qasm(const std::string& text) { return Parser(text).run(); }

std::string emit_qasm(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.n_qubits << '\n';
  for (const auto& step : c.steps) {
    if (step.empty()) continue;
    if (step.size() == 1) {
      emit_instruction(out, step[0]);
      if (step[0].inserted) out << " # swap inserted";
    } else {
      out << "{ ";
      bool inserted = false;
      for (size_t i = 0; i < step.size(); i++) {
        if (i) out << " | ";
        emit_instruction(out, step[i]);
        inserted = inserted || step[i].inserted;
      }
      out << " }";
      if (inserted) out << " # swap inserted";
    }
    out << '\n';
  }
  return out.str();
}

bool structurally_equal(const Circuit& a, const Circuit& b) {
  if (a.n_qubits != b.n_qubits) return false;
  if (a.steps.size() != b.steps.size()) return false;
  for (size_t s = 0; s < a.steps.size(); s++) {
    if (a.steps[s].size() != b.steps[s].size()) return false;
    for (size_t i = 0; i < a.steps[s].size(); i++) {
      const auto& x = a.steps[s][i];
      const auto& y = b.steps[s][i];
      if (x.kind != y.kind || x.qubits != y.qubits ||
          x.wait_cycles != y.wait_cycles)
        return false;
    }
  }
  return true;
}

}  // namespace lsmap
