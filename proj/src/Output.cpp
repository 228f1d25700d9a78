#include "qroute/Output.hpp"

#include <map>

namespace qroute {

namespace {

RawGate rewriteThrough(const RawGate& gate, const Mapping& map) {
  RawGate out = gate;
  for (auto& q : out.qubits) {
    q = map.physOf(q);
  }
  return out;
}

} // namespace

std::vector<PhysicalOp> buildPhysicalOps(
    const LogicalCircuit& circuit, const std::vector<RoutedGate>& gates,
    const Mapping& initialMap) {
  const int twoQubitCount = circuit.gateCount();

  // Index of the next two-qubit gate touching a qubit, per position.
  std::vector<std::vector<int>> nextOnQubit(
      static_cast<std::size_t>(circuit.qubitCount()),
      std::vector<int>(static_cast<std::size_t>(twoQubitCount) + 1, -1));
  for (int q = 0; q < circuit.qubitCount(); ++q) {
    int next = -1;
    for (int pos = twoQubitCount; pos >= 0; --pos) {
      if (pos < twoQubitCount) {
        const auto& gate = circuit.gates()[static_cast<std::size_t>(pos)];
        if (gate.control == q || gate.target == q) {
          next = pos;
        }
      }
      nextOnQubit[static_cast<std::size_t>(q)]
                 [static_cast<std::size_t>(pos)] = next;
    }
  }

  // Anchor every attachment to the first later two-qubit gate sharing one
  // of its qubits; unanchored ones trail the circuit.
  std::map<int, std::vector<RawGate>> anchored;
  std::vector<RawGate> trailing;
  for (const auto& [position, group] : circuit.attachments()) {
    for (const RawGate& raw : group) {
      int anchor = -1;
      for (const int q : raw.qubits) {
        const int next = nextOnQubit[static_cast<std::size_t>(q)]
                                    [static_cast<std::size_t>(position)];
        if (next >= 0 && (anchor < 0 || next < anchor)) {
          anchor = next;
        }
      }
      if (anchor >= 0) {
        anchored[anchor].push_back(raw);
      } else {
        trailing.push_back(raw);
      }
    }
  }

  std::vector<PhysicalOp> ops;
  ops.reserve(gates.size() + trailing.size());
  Mapping map = initialMap;
  for (const auto& routed : gates) {
    if (routed.insertedSwap) {
      PhysicalOp op;
      op.gate.kind = GateKind::TwoQubit;
      op.gate.name = "swap";
      op.gate.qubits = {routed.u, routed.v};
      op.insertedSwap = true;
      ops.push_back(std::move(op));
      map.applySwap(routed.u, routed.v);
      continue;
    }
    const auto it = anchored.find(routed.logicalId);
    if (it != anchored.end()) {
      for (const RawGate& raw : it->second) {
        ops.push_back(PhysicalOp{rewriteThrough(raw, map), false});
      }
    }
    PhysicalOp op;
    op.gate.kind = GateKind::TwoQubit;
    op.gate.name =
        routed.op == TwoQubitGate::Op::Swap ? "swap" : "cx";
    op.gate.qubits = {routed.u, routed.v};
    ops.push_back(std::move(op));
  }
  for (const RawGate& raw : trailing) {
    ops.push_back(PhysicalOp{rewriteThrough(raw, map), false});
  }
  return ops;
}

} // namespace qroute
