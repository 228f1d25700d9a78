// Independent reference implementations used as test oracles. Everything
// here is deliberately naive (exhaustive enumeration, literal fixpoint
// loops, BFS over whole mapping states) and shares no code with the
// library's search paths.
#pragma once

#include "qroute/Architecture.hpp"
#include "qroute/Circuit.hpp"
#include "qroute/Mapping.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracles {

using qroute::Architecture;
using qroute::Edge;
using qroute::LogicalCircuit;
using qroute::Mapping;
using qroute::TwoQubitGate;

/// Exhaustive edge-preserving injection test: tries every assignment of
/// pattern vertices to distinct target nodes.
inline bool embeddable(const std::vector<Edge>& patternEdges,
                       const Architecture& arch, int qubitCount) {
  std::vector<int> vertices;
  {
    std::set<int> seen;
    for (const auto& [p, q] : patternEdges) {
      seen.insert(p);
      seen.insert(q);
    }
    vertices.assign(seen.begin(), seen.end());
  }
  std::vector<int> image(static_cast<std::size_t>(qubitCount), -1);
  std::vector<bool> used(static_cast<std::size_t>(arch.nodeCount()), false);

  auto consistent = [&]() {
    for (const auto& [p, q] : patternEdges) {
      const int a = image[static_cast<std::size_t>(p)];
      const int b = image[static_cast<std::size_t>(q)];
      if (a >= 0 && b >= 0 && !arch.adjacent(a, b)) {
        return false;
      }
    }
    return true;
  };
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == vertices.size()) {
      return true;
    }
    for (int v = 0; v < arch.nodeCount(); ++v) {
      if (used[static_cast<std::size_t>(v)]) {
        continue;
      }
      image[static_cast<std::size_t>(vertices[i])] = v;
      used[static_cast<std::size_t>(v)] = true;
      if (consistent() && place(i + 1)) {
        return true;
      }
      image[static_cast<std::size_t>(vertices[i])] = -1;
      used[static_cast<std::size_t>(v)] = false;
    }
    return false;
  };
  return place(0);
}

/// Literal fixpoint retirement: repeated full passes until a pass retires
/// nothing. Returns the retired gate count.
inline int executableCountNaive(const std::vector<TwoQubitGate>& gates,
                                const Mapping& map,
                                const Architecture& arch) {
  std::vector<bool> retired(gates.size(), false);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < gates.size(); ++i) {
      if (retired[i]) {
        continue;
      }
      bool touched = false;
      for (std::size_t j = 0; j < i; ++j) {
        if (retired[j]) {
          continue;
        }
        if (gates[j].control == gates[i].control ||
            gates[j].control == gates[i].target ||
            gates[j].target == gates[i].control ||
            gates[j].target == gates[i].target) {
          touched = true;
          break;
        }
      }
      if (touched) {
        continue;
      }
      if (arch.adjacent(map.physOf(gates[i].control),
                        map.physOf(gates[i].target))) {
        retired[i] = true;
        progress = true;
      }
    }
  }
  return static_cast<int>(std::count(retired.begin(), retired.end(), true));
}

struct BestSequence {
  long long count = 0;
  long long length = 1;
  std::vector<Edge> swaps;
};

/// Exhaustive search over ALL swap sequences of length 1..maxLen drawn
/// from the full architecture edge set (immediate undos included), scored
/// as executable-count / length. Returns every maximizer.
inline std::vector<BestSequence> bestSequencesExhaustive(
    const std::vector<TwoQubitGate>& remaining, const Mapping& map,
    const Architecture& arch, int maxLen) {
  std::vector<BestSequence> best;
  std::vector<Edge> path;

  auto better = [](long long c1, long long l1, long long c2, long long l2) {
    return c1 * l2 > c2 * l1;
  };
  auto equal = [](long long c1, long long l1, long long c2, long long l2) {
    return c1 * l2 == c2 * l1;
  };

  std::function<void(Mapping&, int)> walk = [&](Mapping& cur, int len) {
    if (len > 0) {
      const int count = executableCountNaive(remaining, cur, arch);
      if (count > 0) {
        if (best.empty() ||
            better(count, len, best.front().count, best.front().length)) {
          best.clear();
        }
        if (best.empty() ||
            equal(count, len, best.front().count, best.front().length)) {
          best.push_back({count, len, path});
        }
      }
    }
    if (len == maxLen) {
      return;
    }
    for (const Edge& edge : arch.edges()) {
      cur.applySwap(edge.first, edge.second);
      path.push_back(edge);
      walk(cur, len + 1);
      path.pop_back();
      cur.applySwap(edge.first, edge.second);
    }
  };
  Mapping cur = map;
  walk(cur, 0);
  return best;
}

/// Optimal swap count by breadth-first search over (mapping, retired-set)
/// states. Retiring executable gates is free and never hurts, so states
/// are canonicalized by retiring to the fixpoint first.
inline int optimalSwapCount(const LogicalCircuit& circuit,
                            const Mapping& initial,
                            const Architecture& arch) {
  using State = std::pair<std::vector<int>, std::vector<bool>>;

  auto retireAll = [&](const Mapping& map, std::vector<bool> done) {
    bool progress = true;
    while (progress) {
      progress = false;
      const auto& gates = circuit.gates();
      for (std::size_t i = 0; i < gates.size(); ++i) {
        if (done[i]) {
          continue;
        }
        bool touched = false;
        for (std::size_t j = 0; j < i; ++j) {
          if (done[j]) {
            continue;
          }
          if (gates[j].control == gates[i].control ||
              gates[j].control == gates[i].target ||
              gates[j].target == gates[i].control ||
              gates[j].target == gates[i].target) {
            touched = true;
            break;
          }
        }
        if (!touched && arch.adjacent(map.physOf(gates[i].control),
                                      map.physOf(gates[i].target))) {
          done[i] = true;
          progress = true;
        }
      }
    }
    return done;
  };

  auto allDone = [](const std::vector<bool>& done) {
    return std::all_of(done.begin(), done.end(), [](bool b) { return b; });
  };

  Mapping start = initial;
  std::vector<bool> done0 =
      retireAll(start, std::vector<bool>(circuit.gates().size(), false));
  if (allDone(done0)) {
    return 0;
  }

  std::set<State> visited;
  std::deque<std::pair<std::pair<Mapping, std::vector<bool>>, int>> queue;
  visited.insert({start.forward(), done0});
  queue.push_back({{start, done0}, 0});
  while (!queue.empty()) {
    auto [state, cost] = queue.front();
    queue.pop_front();
    for (const Edge& edge : arch.edges()) {
      Mapping next = state.first;
      next.applySwap(edge.first, edge.second);
      const std::vector<bool> done = retireAll(next, state.second);
      if (allDone(done)) {
        return cost + 1;
      }
      if (visited.insert({next.forward(), done}).second) {
        queue.push_back({{next, done}, cost + 1});
      }
    }
  }
  return -1; // unreachable on a connected architecture
}

/// Deterministic random two-qubit circuit.
inline LogicalCircuit randomCircuit(int qubits, int gates,
                                    std::mt19937& rng) {
  std::vector<TwoQubitGate> list;
  std::uniform_int_distribution<int> pick(0, qubits - 1);
  for (int i = 0; i < gates; ++i) {
    int a = pick(rng);
    int b = pick(rng);
    while (b == a) {
      b = pick(rng);
    }
    TwoQubitGate gate;
    gate.id = i;
    gate.control = a;
    gate.target = b;
    list.push_back(gate);
  }
  return LogicalCircuit(qubits, std::move(list));
}

/// Deterministic random connected architecture: a random spanning tree
/// plus a few extra edges.
inline Architecture randomArchitecture(int nodes, int extraEdges,
                                       std::mt19937& rng) {
  std::vector<Edge> edges;
  std::vector<int> order(static_cast<std::size_t>(nodes));
  for (int i = 0; i < nodes; ++i) {
    order[static_cast<std::size_t>(i)] = i;
  }
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < nodes; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.push_back(qroute::makeEdge(order[static_cast<std::size_t>(i)],
                                     order[static_cast<std::size_t>(
                                         pick(rng))]));
  }
  std::uniform_int_distribution<int> pick(0, nodes - 1);
  for (int i = 0; i < extraEdges; ++i) {
    const int a = pick(rng);
    const int b = pick(rng);
    if (a != b) {
      edges.push_back(qroute::makeEdge(a, b));
    }
  }
  return Architecture(nodes, edges);
}

/// Random complete mapping of `qubits` logical qubits onto the nodes.
inline Mapping randomMapping(int qubits, const Architecture& arch,
                             std::mt19937& rng) {
  std::vector<int> nodes(static_cast<std::size_t>(arch.nodeCount()));
  for (int v = 0; v < arch.nodeCount(); ++v) {
    nodes[static_cast<std::size_t>(v)] = v;
  }
  std::shuffle(nodes.begin(), nodes.end(), rng);
  Mapping map(qubits, arch.nodeCount());
  for (int q = 0; q < qubits; ++q) {
    map.assign(q, nodes[static_cast<std::size_t>(q)]);
  }
  return map;
}

} // namespace oracles
