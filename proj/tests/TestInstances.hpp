// Shared hand-worked instances used across the unit and acceptance tests.
#pragma once

#include "qroute/Architecture.hpp"
#include "qroute/Circuit.hpp"

#include <vector>

namespace instances {

using qroute::Architecture;
using qroute::LogicalCircuit;
using qroute::TwoQubitGate;

inline LogicalCircuit makeCircuit(int qubits,
                                  std::vector<std::pair<int, int>> pairs) {
  std::vector<TwoQubitGate> gates;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    TwoQubitGate gate;
    gate.id = static_cast<int>(i);
    gate.control = pairs[i].first;
    gate.target = pairs[i].second;
    gates.push_back(gate);
  }
  return LogicalCircuit(qubits, std::move(gates));
}

/// Six-node line, the worked-example architecture (diameter 5).
inline Architecture lineSix() { return Architecture::preset("linear_6"); }

/// The worked-example circuit: depth 5, per-gate weights [5,5,4,4,3,2,1],
/// interaction-graph weights (0,1)=8, (2,3)=5, (0,2)=4, (1,3)=4,
/// (0,3)=2, (0,4)=1, embedding priority
/// (0,1) > (2,3) > (0,2) > (1,3) > (0,3) > (0,4).
inline LogicalCircuit weightedExample() {
  return makeCircuit(5, {{0, 1},
                         {2, 3},
                         {0, 2},
                         {1, 3},
                         {0, 1},
                         {0, 3},
                         {0, 4}});
}

/// Four-qubit circuit whose last two gates deadlock under the identity
/// placement on a four-node line and need exactly one swap.
inline LogicalCircuit oneSwapExample() {
  return makeCircuit(4, {{0, 1}, {2, 3}, {1, 3}, {0, 2}});
}

/// Deadlock state on a six-node line where a depth-2 search finds a
/// two-swap sequence unlocking three gates: after the two leading gates
/// retire, four blocked gates remain and swaps (1,2)+(3,4) enable
/// (0,2), (1,4) and (3,5) while (0,5) stays out of reach.
inline LogicalCircuit twoSwapExample() {
  return makeCircuit(6, {{0, 1},
                         {4, 5},
                         {0, 2},
                         {1, 4},
                         {3, 5},
                         {0, 5}});
}

} // namespace instances
