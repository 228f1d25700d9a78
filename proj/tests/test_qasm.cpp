#include "qroute/Qasm.hpp"

#include <doctest.h>

#include <cmath>

using namespace qroute;

namespace {

std::vector<std::pair<int, int>> twoQubitPairs(const ParsedProgram& prog) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& gate : prog.gates) {
    if (gate.kind == GateKind::TwoQubit) {
      pairs.emplace_back(gate.qubits[0], gate.qubits[1]);
    }
  }
  return pairs;
}

} // namespace

TEST_SUITE("qasm") {

TEST_CASE("minimal program parses") {
  const auto prog = parseQasm("qreg q[2]; cx q[0],q[1];");
  CHECK(prog.qubitCount == 2);
  REQUIRE(prog.gates.size() == 1);
  CHECK(prog.gates[0].name == "cx");
  CHECK(prog.gates[0].qubits == std::vector<int>{0, 1});
}

TEST_CASE("single-qubit gates pass through") {
  const auto prog = parseQasm("qreg q[4]; h q[0]; cx q[0],q[1];");
  CHECK(prog.qubitCount == 4);
  REQUIRE(prog.gates.size() == 2);
  CHECK(prog.gates[0].kind == GateKind::SingleQubit);
  CHECK(prog.gates[1].kind == GateKind::TwoQubit);
}

TEST_CASE("four-qubit example circuit") {
  // Two executable gates, two blocked ones; five single-qubit gates.
  const char* text = R"(OPENQASM 2.0;
include "qelib1.inc";
qreg q[4];
h q[0];
ry(pi/4) q[1];
h q[2];
cx q[0],q[1];
cx q[2],q[3];
ry(pi/4) q[3];
h q[1];
cx q[1],q[3];
cx q[0],q[2];
)";
  const auto prog = parseQasm(text);
  CHECK(prog.qubitCount == 4);
  CHECK(prog.gates.size() == 9);
  const auto pairs = twoQubitPairs(prog);
  CHECK(pairs == std::vector<std::pair<int, int>>{
                     {0, 1}, {2, 3}, {1, 3}, {0, 2}});
}

TEST_CASE("parameters are carried verbatim and evaluated") {
  const auto prog =
      parseQasm("qreg q[1]; u3(pi/2,-pi/4,0.5) q[0]; rz(2*pi) q[0];");
  REQUIRE(prog.gates.size() == 2);
  CHECK(prog.gates[0].paramText ==
        std::vector<std::string>{"pi/2", "-pi/4", "0.5"});
  CHECK(prog.gates[0].params[0] == doctest::Approx(M_PI / 2));
  CHECK(prog.gates[0].params[1] == doctest::Approx(-M_PI / 4));
  CHECK(prog.gates[0].params[2] == doctest::Approx(0.5));
  CHECK(prog.gates[1].params[0] == doctest::Approx(2 * M_PI));
}

TEST_CASE("measure and barrier are kept as markers") {
  const auto prog = parseQasm(
      "qreg q[2]; creg c[2]; cx q[0],q[1]; barrier q; "
      "measure q[0] -> c[0]; measure q[1] -> c[1];");
  REQUIRE(prog.gates.size() == 4);
  CHECK(prog.gates[1].kind == GateKind::Barrier);
  CHECK(prog.gates[1].qubits == std::vector<int>{0, 1});
  CHECK(prog.gates[2].kind == GateKind::Measure);
  CHECK(prog.gates[2].cbit == 0);
  CHECK(prog.cregName == "c");
  CHECK(prog.cregSize == 2);
}

TEST_CASE("errors carry line numbers") {
  SUBCASE("multiple qregs") {
    CHECK_THROWS_WITH_AS(parseQasm("qreg q[2];\nqreg r[2];"),
                         doctest::Contains("line 2"), QasmError);
  }
  SUBCASE("three-qubit gate") {
    CHECK_THROWS_AS(parseQasm("qreg q[3]; ccx q[0],q[1],q[2];"), QasmError);
  }
  SUBCASE("unknown two-qubit gate") {
    CHECK_THROWS_AS(parseQasm("qreg q[2]; cz q[0],q[1];"), QasmError);
  }
  SUBCASE("index out of range") {
    CHECK_THROWS_AS(parseQasm("qreg q[2]; cx q[0],q[2];"), QasmError);
  }
  SUBCASE("repeated qubit") {
    CHECK_THROWS_AS(parseQasm("qreg q[2]; cx q[1],q[1];"), QasmError);
  }
  SUBCASE("gate definitions unsupported") {
    CHECK_THROWS_AS(parseQasm("qreg q[1]; gate foo a { h a; }"), QasmError);
  }
  SUBCASE("missing semicolon") {
    CHECK_THROWS_AS(parseQasm("qreg q[2]\ncx q[0],q[1];"), QasmError);
  }
}

TEST_CASE("empty circuit emits a header-only program") {
  const std::string text = emitQasm({}, 3);
  CHECK(text == "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\n");
}

TEST_CASE("swap decomposition emits three cx") {
  PhysicalOp swap;
  swap.gate.kind = GateKind::TwoQubit;
  swap.gate.name = "swap";
  swap.gate.qubits = {0, 1};
  swap.insertedSwap = true;

  const std::string plain = emitQasm({swap}, 2, "", 0, false);
  CHECK(plain.find("swap q[0],q[1];") != std::string::npos);

  const std::string decomposed = emitQasm({swap}, 2, "", 0, true);
  CHECK(decomposed.find("cx q[0],q[1];\ncx q[1],q[0];\ncx q[0],q[1];") !=
        std::string::npos);
  CHECK(decomposed.find("swap") == std::string::npos);
}

TEST_CASE("emit then parse then emit is a fixpoint") {
  std::vector<PhysicalOp> ops;
  auto add = [&](const std::string& name, std::vector<int> qubits,
                 std::vector<std::string> params = {}) {
    PhysicalOp op;
    op.gate.name = name;
    op.gate.kind = qubits.size() == 2 ? GateKind::TwoQubit
                                      : GateKind::SingleQubit;
    op.gate.qubits = std::move(qubits);
    op.gate.paramText = std::move(params);
    ops.push_back(op);
  };
  add("h", {0});
  add("cx", {0, 1});
  add("rz", {2}, {"pi/8"});
  add("swap", {1, 2});
  add("cx", {2, 3});

  const std::string once = emitQasm(ops, 4);
  const auto prog = parseQasm(once);
  std::vector<PhysicalOp> reops;
  for (const auto& gate : prog.gates) {
    reops.push_back(PhysicalOp{gate, false});
  }
  const std::string twice = emitQasm(reops, 4);
  CHECK(once == twice);
}

} // TEST_SUITE
