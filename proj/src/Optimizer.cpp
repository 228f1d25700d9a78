#include "qroute/Optimizer.hpp"

#include "qroute/InitialMap.hpp"

#include <algorithm>

namespace qroute {

namespace {

// Reverses a backward traversal's gate stream so it executes the original
// circuit: gate order flips, swaps undo themselves, and the ids assigned
// by LogicalCircuit::reversed map back through id -> n-1-id.
std::vector<RoutedGate> reverseStream(const std::vector<RoutedGate>& gates,
                                      int gateCount) {
  std::vector<RoutedGate> reversed(gates.rbegin(), gates.rend());
  for (auto& gate : reversed) {
    if (!gate.insertedSwap) {
      gate.logicalId = gateCount - 1 - gate.logicalId;
    }
  }
  return reversed;
}

} // namespace

OptimizeOutcome optimize(const LogicalCircuit& circuit,
                         const Architecture& arch, const RouterConfig& cfg,
                         int iterations) {
  OptimizeOutcome outcome;
  const LogicalCircuit reversedCircuit = circuit.reversed();
  Mapping current = buildInitialMapping(circuit, arch);

  for (int iter = 1; iter <= iterations; ++iter) {
    outcome.iterationsRun = iter;

    IterationRecord forward;
    forward.iteration = iter;
    forward.direction = Direction::Forward;
    forward.initialMapUsed = current;
    forward.result = route(circuit, current, arch, cfg);
    forward.swapCount = forward.result.swapCount;
    current = forward.result.finalMap;
    outcome.history.push_back(std::move(forward));
    if (outcome.history.back().swapCount == 0) {
      break;
    }

    IterationRecord backward;
    backward.iteration = iter;
    backward.direction = Direction::Backward;
    backward.initialMapUsed = current;
    backward.result = route(reversedCircuit, current, arch, cfg);
    backward.swapCount = backward.result.swapCount;
    current = backward.result.finalMap;
    outcome.history.push_back(std::move(backward));
    if (outcome.history.back().swapCount == 0) {
      break;
    }
  }

  outcome.bestIndex = 0;
  for (std::size_t i = 1; i < outcome.history.size(); ++i) {
    if (outcome.history[i].swapCount <
        outcome.history[outcome.bestIndex].swapCount) {
      outcome.bestIndex = i;
    }
  }

  const IterationRecord& best = outcome.history[outcome.bestIndex];
  if (best.direction == Direction::Forward) {
    outcome.physicalGates = best.result.physicalGates;
    outcome.initialMap = best.result.initialMap;
    outcome.finalMap = best.result.finalMap;
  } else {
    outcome.physicalGates =
        reverseStream(best.result.physicalGates, circuit.gateCount());
    outcome.initialMap = best.result.finalMap;
    outcome.finalMap = best.result.initialMap;
  }
  return outcome;
}

} // namespace qroute
