#include "qroute/InitialMap.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace qroute {

std::vector<Edge> sortEdges(const InteractionGraph& ig) {
  std::vector<Edge> edges;
  edges.reserve(ig.edgeWeight.size());
  for (const auto& [edge, weight] : ig.edgeWeight) {
    edges.push_back(edge);
  }
  std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
    const long long wa = ig.edgeWeight.at(a);
    const long long wb = ig.edgeWeight.at(b);
    if (wa != wb) {
      return wa > wb;
    }
    return a < b;
  });
  return edges;
}

namespace {

/// Backtracking search for an edge-preserving injection of a small pattern
/// graph into the architecture. Deterministic: pattern vertices are
/// visited in a fixed connectivity-first order and candidate nodes in
/// ascending index order, so the first embedding found is reproducible.
class SubgraphMatcher {
public:
  SubgraphMatcher(const std::vector<Edge>& patternEdges,
                  const Architecture& arch, int qubitCount)
      : arch_(arch), patternAdj_(static_cast<std::size_t>(qubitCount)) {
    for (const auto& [p, q] : patternEdges) {
      patternAdj_[static_cast<std::size_t>(p)].push_back(q);
      patternAdj_[static_cast<std::size_t>(q)].push_back(p);
    }
    for (int q = 0; q < qubitCount; ++q) {
      auto& nbrs = patternAdj_[static_cast<std::size_t>(q)];
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      if (!nbrs.empty()) {
        vertices_.push_back(q);
      }
    }
    buildOrder();
  }

  /// Finds an embedding, optionally keeping a previous one fixed and only
  /// placing the pattern vertices it does not cover.
  std::optional<Mapping> match(const Mapping* seed) const {
    Mapping map(static_cast<int>(patternAdj_.size()), arch_.nodeCount());
    std::vector<int> todo;
    if (seed != nullptr) {
      for (const int u : vertices_) {
        const int v = seed->physOf(u);
        if (v >= 0) {
          map.assign(u, v);
        } else {
          todo.push_back(u);
        }
      }
      // The seed must already satisfy every pattern edge it covers.
      for (const int u : vertices_) {
        if (!map.mapped(u)) {
          continue;
        }
        for (const int w : patternAdj_[static_cast<std::size_t>(u)]) {
          if (map.mapped(w) &&
              !arch_.adjacent(map.physOf(u), map.physOf(w))) {
            return std::nullopt;
          }
        }
      }
      // Keep the deterministic visit order for the leftover vertices.
      std::vector<int> ordered;
      for (const int u : order_) {
        if (std::find(todo.begin(), todo.end(), u) != todo.end()) {
          ordered.push_back(u);
        }
      }
      todo = std::move(ordered);
    } else {
      todo = order_;
    }
    if (extend(map, todo, 0)) {
      return map;
    }
    return std::nullopt;
  }

private:
  void buildOrder() {
    // Highest-degree first, expanding along pattern edges when possible.
    std::vector<int> remaining = vertices_;
    auto byDegree = [&](int a, int b) {
      const auto da = patternAdj_[static_cast<std::size_t>(a)].size();
      const auto db = patternAdj_[static_cast<std::size_t>(b)].size();
      if (da != db) {
        return da > db;
      }
      return a < b;
    };
    std::vector<bool> placed(patternAdj_.size(), false);
    while (!remaining.empty()) {
      int pick = -1;
      for (const int u : remaining) {
        bool connected = false;
        for (const int w : patternAdj_[static_cast<std::size_t>(u)]) {
          if (placed[static_cast<std::size_t>(w)]) {
            connected = true;
            break;
          }
        }
        if (connected && (pick < 0 || byDegree(u, pick))) {
          pick = u;
        }
      }
      if (pick < 0) {
        pick = *std::min_element(remaining.begin(), remaining.end(),
                                 byDegree);
      }
      order_.push_back(pick);
      placed[static_cast<std::size_t>(pick)] = true;
      remaining.erase(std::find(remaining.begin(), remaining.end(), pick));
    }
  }

  bool extend(Mapping& map, const std::vector<int>& todo,
              std::size_t index) const {
    if (index == todo.size()) {
      return true;
    }
    const int u = todo[index];
    const auto& nbrs = patternAdj_[static_cast<std::size_t>(u)];
    const int patternDegree = static_cast<int>(nbrs.size());

    int anchor = -1; // image of some already-mapped pattern neighbour
    for (const int w : nbrs) {
      if (map.mapped(w)) {
        anchor = map.physOf(w);
        break;
      }
    }
    const std::vector<int>* candidates = nullptr;
    std::vector<int> allNodes;
    if (anchor >= 0) {
      candidates = &arch_.neighbours(anchor);
    } else {
      allNodes.resize(static_cast<std::size_t>(arch_.nodeCount()));
      for (int v = 0; v < arch_.nodeCount(); ++v) {
        allNodes[static_cast<std::size_t>(v)] = v;
      }
      candidates = &allNodes;
    }

    for (const int v : *candidates) {
      if (map.occupied(v) || arch_.degree(v) < patternDegree) {
        continue;
      }
      bool consistent = true;
      int unmatchedNbrs = 0;
      for (const int w : nbrs) {
        if (map.mapped(w)) {
          if (!arch_.adjacent(v, map.physOf(w))) {
            consistent = false;
            break;
          }
        } else {
          ++unmatchedNbrs;
        }
      }
      if (!consistent) {
        continue;
      }
      int freeNbrs = 0;
      for (const int t : arch_.neighbours(v)) {
        if (!map.occupied(t)) {
          ++freeNbrs;
        }
      }
      if (freeNbrs < unmatchedNbrs) {
        continue;
      }
      map.assign(u, v);
      if (extend(map, todo, index + 1)) {
        return true;
      }
      map.unassign(u);
    }
    return false;
  }

  const Architecture& arch_;
  std::vector<std::vector<int>> patternAdj_;
  std::vector<int> vertices_; // pattern vertices, ascending
  std::vector<int> order_;    // deterministic visit order
};

} // namespace

EmbedResult greedyEmbed(const std::vector<Edge>& sortedEdges,
                        const Architecture& arch, int qubitCount) {
  EmbedResult result;
  result.partial = Mapping(qubitCount, arch.nodeCount());
  std::vector<Edge> kept;
  for (const Edge& edge : sortedEdges) {
    std::vector<Edge> trial = kept;
    trial.push_back(edge);
    const SubgraphMatcher matcher(trial, arch, qubitCount);
    // Extending the previous embedding is usually enough; fall back to a
    // full search before rejecting the edge.
    auto embedding = matcher.match(&result.partial);
    if (!embedding) {
      embedding = matcher.match(nullptr);
    }
    if (embedding) {
      kept = std::move(trial);
      result.partial = std::move(*embedding);
    }
  }
  result.keptEdges = std::move(kept);
  return result;
}

long long placementScore(int q, int v, const Mapping& partial,
                         const InteractionGraph& ig,
                         const Architecture& arch) {
  long long score = 0;
  for (const auto& [edge, weight] : ig.edgeWeight) {
    int other = -1;
    if (edge.first == q) {
      other = edge.second;
    } else if (edge.second == q) {
      other = edge.first;
    } else {
      continue;
    }
    const int host = partial.physOf(other);
    if (host < 0) {
      continue;
    }
    score += static_cast<long long>(arch.diameter() -
                                    arch.distance(host, v)) *
             weight;
  }
  return score;
}

namespace {

std::vector<int> nearestFreeNodes(const Mapping& map,
                                  const Architecture& arch) {
  int best = std::numeric_limits<int>::max();
  std::vector<int> candidates;
  for (int v = 0; v < arch.nodeCount(); ++v) {
    if (map.occupied(v)) {
      continue;
    }
    int nearest = std::numeric_limits<int>::max();
    for (int u = 0; u < arch.nodeCount(); ++u) {
      if (map.occupied(u)) {
        nearest = std::min(nearest, arch.distance(u, v));
      }
    }
    if (nearest < best) {
      best = nearest;
      candidates.clear();
    }
    if (nearest == best) {
      candidates.push_back(v);
    }
  }
  return candidates; // ascending by construction
}

} // namespace

Mapping finalizeMapping(Mapping partial, const InteractionGraph& ig,
                        const Architecture& arch) {
  const int qubitCount = partial.qubitCount();
  if (qubitCount > arch.nodeCount()) {
    throw ArchitectureError(
        "circuit needs " + std::to_string(qubitCount) +
        " qubits but the architecture has only " +
        std::to_string(arch.nodeCount()) + " nodes");
  }

  bool anyMapped = false;
  for (int q = 0; q < qubitCount; ++q) {
    if (partial.mapped(q)) {
      anyMapped = true;
      break;
    }
  }
  if (!anyMapped) {
    return Mapping::identity(qubitCount, arch.nodeCount());
  }

  std::vector<bool> interacts(static_cast<std::size_t>(qubitCount), false);
  for (const auto& [edge, weight] : ig.edgeWeight) {
    interacts[static_cast<std::size_t>(edge.first)] = true;
    interacts[static_cast<std::size_t>(edge.second)] = true;
  }

  while (true) {
    bool pending = false;
    for (int q = 0; q < qubitCount; ++q) {
      if (interacts[static_cast<std::size_t>(q)] && !partial.mapped(q)) {
        pending = true;
        break;
      }
    }
    if (!pending) {
      break;
    }
    const std::vector<int> candidates = nearestFreeNodes(partial, arch);
    long long bestScore = -1;
    int bestQubit = -1;
    int bestNode = -1;
    for (int q = 0; q < qubitCount; ++q) {
      if (!interacts[static_cast<std::size_t>(q)] || partial.mapped(q)) {
        continue;
      }
      for (const int v : candidates) {
        const long long score = placementScore(q, v, partial, ig, arch);
        if (score > bestScore) {
          bestScore = score;
          bestQubit = q;
          bestNode = v;
        }
      }
    }
    partial.assign(bestQubit, bestNode);
  }

  // Qubits that never touch a two-qubit gate go on the leftover nodes.
  int nextFree = 0;
  for (int q = 0; q < qubitCount; ++q) {
    if (partial.mapped(q)) {
      continue;
    }
    while (partial.occupied(nextFree)) {
      ++nextFree;
    }
    partial.assign(q, nextFree);
  }
  return partial;
}

Mapping buildInitialMapping(const LogicalCircuit& circuit,
                            const Architecture& arch) {
  const LayerPartition layers = partition(circuit);
  const InteractionGraph ig = interactionGraph(circuit, layers);
  const std::vector<Edge> order = sortEdges(ig);
  EmbedResult embed = greedyEmbed(order, arch, circuit.qubitCount());
  return finalizeMapping(std::move(embed.partial), ig, arch);
}

} // namespace qroute
