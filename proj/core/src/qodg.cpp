#include "lsmap/qodg.hpp"

#include <stdexcept>

namespace lsmap {

int Qodg::true_edge_count() const {
  int n = 0;
  for (const auto& e : edges)
    if (e.kind == DepKind::True) n++;
  return n;
}

int Qodg::name_edge_count() const {
  return static_cast<int>(edges.size()) - true_edge_count();
}

namespace {

// Role of `q` in `ins`: 0 = control (or sole operand), 1 = target.
int role_of(const Instruction& ins, int q) {
  for (size_t i = 0; i < ins.qubits.size(); i++)
    if (ins.qubits[i] == q) return static_cast<int>(i);
  return -1;
}

bool commutable_pair(const Instruction& a, const Instruction& b, int q) {
  if (a.kind != GateKind::Cnot || b.kind != GateKind::Cnot) return false;
  return role_of(a, q) == role_of(b, q);
}

}  // namespace

Qodg build_qodg(const Circuit& c) {
  Qodg g;
  g.n_qubits = c.n_qubits;
  for (const auto* ins : c.gates()) g.nodes.push_back(*ins);
  g.out_edges.assign(g.nodes.size(), {});
  g.in_edges.assign(g.nodes.size(), {});

  std::vector<int> last(c.n_qubits, -1);
  for (int v = 0; v < static_cast<int>(g.nodes.size()); v++) {
    for (int q : g.nodes[v].qubits) {
      int u = last[q];
      if (u >= 0) {
        DepKind kind = commutable_pair(g.nodes[u], g.nodes[v], q)
                           ? DepKind::Name
                           : DepKind::True;
        int idx = static_cast<int>(g.edges.size());
        g.edges.push_back({u, v, kind, q});
        g.out_edges[u].push_back(idx);
        g.in_edges[v].push_back(idx);
      }
      last[q] = v;
    }
  }
  return g;
}

std::vector<int> true_topological_order(const Qodg& g) {
  int n = static_cast<int>(g.nodes.size());
  std::vector<int> indeg(n, 0);
  for (const auto& e : g.edges)
    if (e.kind == DepKind::True) indeg[e.to]++;
  std::vector<int> order;
  std::vector<int> ready;
  for (int v = n - 1; v >= 0; v--)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int ei : g.out_edges[v]) {
      const auto& e = g.edges[ei];
      if (e.kind != DepKind::True) continue;
      if (--indeg[e.to] == 0) ready.push_back(e.to);
    }
  }
  if (static_cast<int>(order.size()) != n)
    throw std::runtime_error("cycle among true dependencies");
  return order;
}

CircuitStats characterize(const Circuit& c) {
  CircuitStats st;
  st.n_qubits = c.n_qubits;
  st.n_gates = c.gate_count();
  st.n_cnots = c.cnot_count();
  if (st.n_gates == 0) return st;

  int n_tsg = 0;
  for (const auto* ins : c.gates())
    if (ins->kind == GateKind::S || ins->kind == GateKind::Sdag ||
        ins->kind == GateKind::T || ins->kind == GateKind::Tdag)
      n_tsg++;

  Qodg g = build_qodg(c);
  st.rcg = static_cast<double>(st.n_cnots) / st.n_gates;
  st.rtsg = static_cast<double>(n_tsg) / st.n_gates;
  st.rcd = g.edges.empty() ? 0.0
                           : static_cast<double>(g.name_edge_count()) /
                                 static_cast<double>(g.edges.size());
  return st;
}

}  // namespace lsmap
