#pragma once

#include "qroute/Architecture.hpp"
#include "qroute/Circuit.hpp"
#include "qroute/Mapping.hpp"

#include <vector>

namespace qroute {

/// Interaction-graph edges in embedding priority order: descending weight,
/// ties by ascending (min, max) qubit pair.
std::vector<Edge> sortEdges(const InteractionGraph& ig);

struct EmbedResult {
  std::vector<Edge> keptEdges; // accepted in scan order
  Mapping partial;             // one concrete embedding of the kept edges
};

/// Scans the sorted edges, keeping each edge iff the kept set plus that
/// edge still embeds into the architecture (edge-preserving injection,
/// decided by a VF2-style backtracking search). Returns the kept subgraph
/// and the first embedding found under the deterministic search order.
EmbedResult greedyEmbed(const std::vector<Edge>& sortedEdges,
                        const Architecture& arch, int qubitCount);

/// Placement score for putting unmapped qubit q on free node v: the sum
/// over mapped interaction-neighbours u of q of
/// (diameter - dist(host(u), v)) * edgeWeight(q, u).
long long placementScore(int q, int v, const Mapping& partial,
                         const InteractionGraph& ig, const Architecture& arch);

/// Completes a partial mapping: repeatedly commits the (qubit, free node)
/// pair with the highest placement score, candidates being the free nodes
/// nearest to the occupied region; qubits untouched by any two-qubit gate
/// are placed on the remaining free nodes in ascending index order.
/// Throws ArchitectureError when the circuit has more qubits than nodes.
Mapping finalizeMapping(Mapping partial, const InteractionGraph& ig,
                        const Architecture& arch);

/// Full initial-mapping pipeline: weighted edge ordering, greedy
/// embedding, completion. Falls back to identity placement when no edge
/// can be embedded.
Mapping buildInitialMapping(const LogicalCircuit& circuit,
                            const Architecture& arch);

} // namespace qroute
