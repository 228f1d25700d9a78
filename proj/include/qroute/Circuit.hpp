#pragma once

#include "qroute/Architecture.hpp"
#include "qroute/Qasm.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace qroute {

/// A two-qubit gate of the logical circuit. `op` distinguishes cx from an
/// input swap gate; both constrain routing identically.
struct TwoQubitGate {
  int id = 0; // unique, equals the position in the gate list
  int control = 0;
  int target = 0;
  enum class Op : std::uint8_t { Cx, Swap } op = Op::Cx;
};

/// The logical circuit reduced to its two-qubit gates. Single-qubit gates
/// and measure/barrier markers are kept as attachments keyed by the
/// position of the two-qubit gate they precede (position == gate count
/// for trailing ones) so the routed circuit can be re-emitted in full.
/// Immutable after construction; all queries are read-only.
class LogicalCircuit {
public:
  LogicalCircuit(int qubitCount, std::vector<TwoQubitGate> gates)
      : qubitCount_(qubitCount), gates_(std::move(gates)) {}

  /// Splits a parsed program into two-qubit gates and attachments.
  static LogicalCircuit fromProgram(const ParsedProgram& program);

  [[nodiscard]] int qubitCount() const { return qubitCount_; }
  [[nodiscard]] const std::vector<TwoQubitGate>& gates() const {
    return gates_;
  }
  [[nodiscard]] int gateCount() const {
    return static_cast<int>(gates_.size());
  }
  [[nodiscard]] const std::map<int, std::vector<RawGate>>& attachments()
      const {
    return attachments_;
  }

  /// Reversed two-qubit gate list with fresh ids; attachments are not
  /// carried (reversal exists for routing, not for emission).
  [[nodiscard]] LogicalCircuit reversed() const;

  void setAttachments(std::map<int, std::vector<RawGate>> attachments) {
    attachments_ = std::move(attachments);
  }

private:
  int qubitCount_ = 0;
  std::vector<TwoQubitGate> gates_;
  std::map<int, std::vector<RawGate>> attachments_;
};

/// ASAP layer assignment: each gate sits in the first layer after every
/// earlier gate that shares one of its qubits. Layers are 1-based; depth
/// is 0 for an empty circuit.
struct LayerPartition {
  int depth = 0;
  std::vector<int> layerOf; // indexed by gate id

  /// Throws std::out_of_range for an unknown gate id.
  [[nodiscard]] int layer(int gateId) const {
    return layerOf.at(static_cast<std::size_t>(gateId));
  }
};

LayerPartition partition(const LogicalCircuit& circuit);

/// Layer weight of a gate: (depth - layer) + 1, so front-layer gates carry
/// the largest weight and last-layer gates weight 1.
int gateWeight(int gateId, const LayerPartition& partition);

/// Undirected graph over logical qubits; each edge accumulates the layer
/// weights of the gates acting on that pair.
struct InteractionGraph {
  int qubitCount = 0;
  std::map<Edge, long long> edgeWeight;

  [[nodiscard]] long long weight(int p, int q) const {
    const auto it = edgeWeight.find(makeEdge(p, q));
    return it == edgeWeight.end() ? 0 : it->second;
  }
};

InteractionGraph interactionGraph(const LogicalCircuit& circuit,
                                  const LayerPartition& partition);

/// All logical qubits appearing in layers 1..k of the circuit's ASAP
/// partition (the look-ahead window for candidate swaps).
std::vector<int> frontLayerQubits(const LogicalCircuit& circuit, int k);

} // namespace qroute
