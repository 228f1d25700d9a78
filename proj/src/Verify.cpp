#include "qroute/Verify.hpp"

#include <vector>

namespace qroute {

namespace {

ReplayReport fail(const std::string& message) {
  ReplayReport report;
  report.ok = false;
  report.error = message;
  return report;
}

} // namespace

ReplayReport verifyRouting(const LogicalCircuit& circuit,
                           const std::vector<RoutedGate>& physicalGates,
                           const Mapping& initialMap,
                           const Architecture& arch) {
  const auto& gates = circuit.gates();
  const int qubitCount = circuit.qubitCount();

  // Per-qubit dependency cursors: gates touching a qubit must replay in
  // list order.
  std::vector<std::vector<int>> perQubit(
      static_cast<std::size_t>(qubitCount));
  for (const auto& gate : gates) {
    perQubit[static_cast<std::size_t>(gate.control)].push_back(gate.id);
    perQubit[static_cast<std::size_t>(gate.target)].push_back(gate.id);
  }
  std::vector<std::size_t> cursor(static_cast<std::size_t>(qubitCount), 0);
  std::vector<bool> executed(gates.size(), false);

  Mapping map = initialMap;
  for (int q = 0; q < qubitCount; ++q) {
    if (!map.mapped(q)) {
      return fail("initial mapping leaves q" + std::to_string(q) +
                  " unmapped");
    }
  }

  for (const auto& routed : physicalGates) {
    if (!arch.adjacent(routed.u, routed.v)) {
      return fail("gate on non-adjacent nodes (" + std::to_string(routed.u) +
                  "," + std::to_string(routed.v) + ")");
    }
    if (routed.insertedSwap) {
      map.applySwap(routed.u, routed.v);
      continue;
    }
    const int id = routed.logicalId;
    if (id < 0 || id >= static_cast<int>(gates.size())) {
      return fail("unknown logical gate id " + std::to_string(id));
    }
    if (executed[static_cast<std::size_t>(id)]) {
      return fail("gate " + std::to_string(id) + " executed twice");
    }
    const auto& gate = gates[static_cast<std::size_t>(id)];
    if (map.logAt(routed.u) != gate.control ||
        map.logAt(routed.v) != gate.target) {
      return fail("gate " + std::to_string(id) +
                  " executed on wrong logical pair");
    }
    for (const int q : {gate.control, gate.target}) {
      const auto& queue = perQubit[static_cast<std::size_t>(q)];
      const std::size_t at = cursor[static_cast<std::size_t>(q)];
      if (at >= queue.size() || queue[at] != id) {
        return fail("gate " + std::to_string(id) +
                    " breaks dependency order on q" + std::to_string(q));
      }
    }
    cursor[static_cast<std::size_t>(gate.control)]++;
    cursor[static_cast<std::size_t>(gate.target)]++;
    executed[static_cast<std::size_t>(id)] = true;
  }

  for (std::size_t id = 0; id < executed.size(); ++id) {
    if (!executed[id]) {
      return fail("gate " + std::to_string(id) + " never executed");
    }
  }

  ReplayReport report;
  report.finalMap = map;
  return report;
}

} // namespace qroute
