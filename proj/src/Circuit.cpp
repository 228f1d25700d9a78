#include "qroute/Circuit.hpp"

#include <algorithm>

namespace qroute {

LogicalCircuit LogicalCircuit::fromProgram(const ParsedProgram& program) {
  std::vector<TwoQubitGate> gates;
  std::map<int, std::vector<RawGate>> attachments;
  for (const auto& raw : program.gates) {
    if (raw.kind == GateKind::TwoQubit) {
      TwoQubitGate gate;
      gate.id = static_cast<int>(gates.size());
      gate.control = raw.qubits[0];
      gate.target = raw.qubits[1];
      gate.op = raw.name == "swap" ? TwoQubitGate::Op::Swap
                                   : TwoQubitGate::Op::Cx;
      gates.push_back(gate);
    } else {
      attachments[static_cast<int>(gates.size())].push_back(raw);
    }
  }
  LogicalCircuit circuit(program.qubitCount, std::move(gates));
  circuit.setAttachments(std::move(attachments));
  return circuit;
}

LogicalCircuit LogicalCircuit::reversed() const {
  std::vector<TwoQubitGate> gates(gates_.rbegin(), gates_.rend());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    gates[i].id = static_cast<int>(i);
  }
  return LogicalCircuit(qubitCount_, std::move(gates));
}

LayerPartition partition(const LogicalCircuit& circuit) {
  LayerPartition result;
  result.layerOf.resize(circuit.gates().size());
  std::vector<int> lastLayer(static_cast<std::size_t>(circuit.qubitCount()),
                             0);
  for (const auto& gate : circuit.gates()) {
    const int layer =
        std::max(lastLayer[static_cast<std::size_t>(gate.control)],
                 lastLayer[static_cast<std::size_t>(gate.target)]) +
        1;
    result.layerOf[static_cast<std::size_t>(gate.id)] = layer;
    lastLayer[static_cast<std::size_t>(gate.control)] = layer;
    lastLayer[static_cast<std::size_t>(gate.target)] = layer;
    result.depth = std::max(result.depth, layer);
  }
  return result;
}

int gateWeight(int gateId, const LayerPartition& partition) {
  return partition.depth - partition.layer(gateId) + 1;
}

InteractionGraph interactionGraph(const LogicalCircuit& circuit,
                                  const LayerPartition& partition) {
  InteractionGraph graph;
  graph.qubitCount = circuit.qubitCount();
  for (const auto& gate : circuit.gates()) {
    graph.edgeWeight[makeEdge(gate.control, gate.target)] +=
        gateWeight(gate.id, partition);
  }
  return graph;
}

std::vector<int> frontLayerQubits(const LogicalCircuit& circuit, int k) {
  const LayerPartition layers = partition(circuit);
  std::vector<bool> seen(static_cast<std::size_t>(circuit.qubitCount()),
                         false);
  std::vector<int> qubits;
  for (const auto& gate : circuit.gates()) {
    if (layers.layer(gate.id) > k) {
      continue;
    }
    for (const int q : {gate.control, gate.target}) {
      if (!seen[static_cast<std::size_t>(q)]) {
        seen[static_cast<std::size_t>(q)] = true;
        qubits.push_back(q);
      }
    }
  }
  std::sort(qubits.begin(), qubits.end());
  return qubits;
}

} // namespace qroute
