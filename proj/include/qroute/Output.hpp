#pragma once

#include "qroute/Circuit.hpp"
#include "qroute/Mapping.hpp"
#include "qroute/Qasm.hpp"
#include "qroute/Router.hpp"

#include <vector>

namespace qroute {

/// Assembles the emit-ready routed circuit: the physical two-qubit gate
/// stream with every pass-through gate and marker re-inserted, its qubit
/// indices rewritten through the mapping in effect at its position. A
/// single-qubit gate rides with the next two-qubit gate on its wire;
/// anything after the last such gate is flushed at the end under the
/// final mapping.
std::vector<PhysicalOp> buildPhysicalOps(
    const LogicalCircuit& circuit, const std::vector<RoutedGate>& gates,
    const Mapping& initialMap);

} // namespace qroute
