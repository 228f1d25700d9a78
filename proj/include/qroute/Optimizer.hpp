#pragma once

#include "qroute/Architecture.hpp"
#include "qroute/Circuit.hpp"
#include "qroute/Mapping.hpp"
#include "qroute/Router.hpp"

#include <vector>

namespace qroute {

enum class Direction { Forward, Backward };

struct IterationRecord {
  int iteration = 1; // 1-based
  Direction direction = Direction::Forward;
  int swapCount = 0;
  Mapping initialMapUsed;
  RoutingResult result;
};

/// Outcome of the bidirectional refinement. `physicalGates` always
/// executes the original circuit from `initialMap`; when the best
/// traversal was a backward one its gate stream is reversed and its
/// end-point mappings exchanged to achieve that.
struct OptimizeOutcome {
  std::vector<IterationRecord> history; // every traversal, in order
  std::size_t bestIndex = 0;            // into history
  std::vector<RoutedGate> physicalGates;
  Mapping initialMap;
  Mapping finalMap;
  int iterationsRun = 0;

  [[nodiscard]] const IterationRecord& best() const {
    return history[bestIndex];
  }
};

/// Alternates forward routing of the circuit and backward routing of its
/// reversal, each traversal seeding the next with its final mapping, for
/// `iterations` rounds (stopping early once a traversal needs no swaps).
/// The best traversal over the whole history is kept.
OptimizeOutcome optimize(const LogicalCircuit& circuit,
                         const Architecture& arch, const RouterConfig& cfg,
                         int iterations);

} // namespace qroute
