#pragma once

#include "qroute/Architecture.hpp"
#include "qroute/Circuit.hpp"
#include "qroute/Mapping.hpp"
#include "qroute/Router.hpp"

#include <string>

namespace qroute {

struct ReplayReport {
  bool ok = true;
  std::string error;
  Mapping finalMap;
};

/// Permutation-tracked replay of a routed gate stream: certifies that each
/// logical two-qubit gate executes exactly once, on adjacent physical
/// nodes hosting exactly its logical pair, in an order consistent with the
/// circuit's per-qubit dependencies. The routed result is untrusted input
/// here; any violation is reported, never assumed away.
ReplayReport verifyRouting(const LogicalCircuit& circuit,
                           const std::vector<RoutedGate>& physicalGates,
                           const Mapping& initialMap,
                           const Architecture& arch);

} // namespace qroute
