#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lsmap/circuit.hpp"
#include "lsmap/circuitgen.hpp"
#include "lsmap/qodg.hpp"
#include "lsmap/steane.hpp"

using namespace lsmap;

TEST_CASE("parsing a serial program") {
  Circuit c = parse_qasm("qubits 2\nh q0\ncnot q0,q1\n");
  CHECK(c.n_qubits == 2);
  CHECK(c.steps.size() == 2);
  CHECK(c.steps[0][0].kind == GateKind::H);
  CHECK(c.steps[1][0].kind == GateKind::Cnot);
  CHECK(c.steps[1][0].qubits == std::vector<int>{0, 1});
}

TEST_CASE("parallel bundles and waits") {
  Circuit c = parse_qasm("qubits 3\n{ h q0 | x q1 }\nqwait 4\nmeasz q2\n");
  CHECK(c.steps.size() == 3);
  CHECK(c.steps[0].size() == 2);
  CHECK(c.steps[1][0].kind == GateKind::Wait);
  CHECK(c.steps[1][0].wait_cycles == 4);
}

TEST_CASE("named qubits canonicalize by first use; q<k> is positional") {
  Circuit c = parse_qasm("qubits 3\nh alice\ncnot alice,q2\nx bob\n");
  CHECK(c.steps[0][0].qubits == std::vector<int>{0});
  CHECK(c.steps[1][0].qubits == std::vector<int>{0, 2});
  CHECK(c.steps[2][0].qubits == std::vector<int>{1});
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_qasm("qubits 2\nfrob q0\n"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qubits 2\n{ h q0 | h q0 }\n"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qubits 2\nh q5\n"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qubits 1\ncnot q0,q0\n"), ParseError);
  CHECK_THROWS_AS(parse_qasm("h q0\n"), ParseError);
  try {
    parse_qasm("qubits 2\nh q0\nbroken\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("emit then parse is the identity on canonical circuits") {
  Circuit c = parse_qasm(
      "qubits 4\nprepz q0\n{ h q0 | prepz q1 }\ncnot q0,q1\nqwait 7\n"
      "swap q2,q3\nmeasz q0\n");
  Circuit back = parse_qasm(emit_qasm(c));
  CHECK(structurally_equal(c, back));

  for (std::uint64_t seed = 1; seed <= 20; seed++) {
    RandomCircuitParams p;
    p.n_qubits = 5;
    p.n_gates = 30;
    Circuit r = random_circuit(p, seed);
    CHECK(structurally_equal(r, parse_qasm(emit_qasm(r))));
  }
}

TEST_CASE("empty circuit emits the header only") {
  Circuit c;
  c.n_qubits = 3;
  CHECK(emit_qasm(c) == "qubits 3\n");
}

TEST_CASE("qwait cannot join a parallel bundle") {
  CHECK_THROWS_AS(parse_qasm("qubits 2\n{ h q0 | qwait 3 }\n"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qubits 1\nqwait 0\n"), ParseError);
}

TEST_CASE("dependency graph classification") {
  SUBCASE("single-qubit chain is a true dependency") {
    Circuit c = parse_qasm("qubits 1\nh q0\ns q0\n");
    Qodg g = build_qodg(c);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].kind == DepKind::True);
  }
  SUBCASE("shared control commutes") {
    Circuit c = parse_qasm("qubits 3\ncnot q0,q1\ncnot q0,q2\n");
    Qodg g = build_qodg(c);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].kind == DepKind::Name);
  }
  SUBCASE("control after target is a true dependency") {
    Circuit c = parse_qasm("qubits 3\ncnot q0,q1\ncnot q1,q2\n");
    Qodg g = build_qodg(c);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].kind == DepKind::True);
  }
}

TEST_CASE("per-qubit chains induce paths and edge counts add up") {
  RandomCircuitParams p;
  p.n_qubits = 5;
  p.n_gates = 40;
  for (std::uint64_t seed = 1; seed <= 10; seed++) {
    Circuit c = random_circuit(p, seed);
    Qodg g = build_qodg(c);
    CHECK(g.true_edge_count() + g.name_edge_count() ==
          static_cast<int>(g.edges.size()));
    CHECK_NOTHROW(true_topological_order(g));
    // consecutive ops on one qubit are always connected
    for (int q = 0; q < c.n_qubits; q++) {
      std::vector<int> nodes;
      for (size_t v = 0; v < g.nodes.size(); v++)
        if (g.nodes[v].uses(q)) nodes.push_back(static_cast<int>(v));
      for (size_t k = 0; k + 1 < nodes.size(); k++) {
        bool found = false;
        for (const auto& e : g.edges)
          if (e.from == nodes[k] && e.to == nodes[k + 1] && e.qubit == q)
            found = true;
        CHECK(found);
      }
    }
  }
}

TEST_CASE("characterization of toy circuits") {
  SUBCASE("two T gates") {
    Circuit c = parse_qasm("qubits 1\nt q0\nt q0\n");
    CircuitStats st = characterize(c);
    CHECK(st.rtsg == doctest::Approx(1.0));
    CHECK(st.rcg == doctest::Approx(0.0));
  }
  SUBCASE("empty stats are all zero") {
    Circuit c;
    c.n_qubits = 2;
    CircuitStats st = characterize(c);
    CHECK(st.n_gates == 0);
    CHECK(st.rcg == 0.0);
    CHECK(st.rcd == 0.0);
  }
}

TEST_CASE("the shipped 7-enc benchmark matches its table row") {
  Circuit c = steane_encoder();
  CircuitStats st = characterize(c);
  CHECK(st.n_qubits == 7);
  CHECK(st.n_gates == 21);
  CHECK(st.n_cnots == 11);
  CHECK(st.rcg == doctest::Approx(0.5238).epsilon(1e-3));
  CHECK(st.rtsg == 0.0);
}

TEST_CASE("the benchmark file in data/ is the embedded circuit") {
  std::ifstream in(std::string(LSMAP_DATA_DIR) + "/steane_7enc.qasm");
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(structurally_equal(parse_qasm(ss.str()), steane_encoder()));
}
