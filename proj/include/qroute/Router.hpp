#pragma once

#include "qroute/Architecture.hpp"
#include "qroute/Circuit.hpp"
#include "qroute/Mapping.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qroute {

/// Exact rational, used for executable-gates-per-swap scores so tie
/// detection never goes through floating point.
struct Ratio {
  long long num = 0;
  long long den = 1; // > 0

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend bool operator<(const Ratio& a, const Ratio& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
};

enum class SearchMode {
  FixedDepth,       // exhaustive sequences of length 1..searchDepth
  PartialExtension, // depth-2 search; top-K length-2 sequences grow to 3
};

struct RouterConfig {
  int searchDepth = 3;
  int candidateLayers = 3;
  int wndBase = 30;
  int wndThreshold = 4000;
  double wndFactor = 1.5;
  SearchMode mode = SearchMode::FixedDepth;
  int topK = 50;
};

/// A scored swap sequence plus the mapping it produces.
struct SwapSequence {
  std::vector<Edge> swaps;
  Ratio score;
  Mapping resulting;
};

struct RoutedGate {
  int logicalId = -1; // -1 for an inserted swap
  int u = 0;          // physical node indices at execution time
  int v = 0;
  bool insertedSwap = false;
  TwoQubitGate::Op op = TwoQubitGate::Op::Cx;
};

struct RoutingStats {
  long long sequenceSteps = 0;     // select invocations
  long long candidatesTotal = 0;   // scored sequences across all steps
  long long candidatesMax = 0;     // largest per-step candidate count
  long long selectNanos = 0;       // wall time spent selecting sequences
  long long fallbacks = 0;
};

struct RoutingResult {
  std::vector<RoutedGate> physicalGates;
  int swapCount = 0; // inserted swaps only
  Mapping initialMap;
  Mapping finalMap;
  int fallbackCount = 0;
  RoutingStats stats;
};

/// Gates of `remaining` executable under `map` without any swap: a greedy
/// front-to-back pass retiring every gate whose mapped qubits are adjacent
/// and untouched by an earlier unretired gate. Returns ids in retirement
/// order.
std::vector<int> executableGates(const LogicalCircuit& remaining,
                                 const Mapping& map,
                                 const Architecture& arch);

/// Architecture edges touching a physical node that hosts a qubit from the
/// first `layers` layers of the remaining circuit.
std::vector<Edge> candidateSwapEdges(const LogicalCircuit& remaining,
                                     const Mapping& map,
                                     const Architecture& arch, int layers);

/// Executable-gate count after applying `swaps` to `map`, divided by the
/// sequence length. Pure scoring; nothing is retired.
Ratio sequenceScore(const Mapping& map, const std::vector<Edge>& swaps,
                    const LogicalCircuit& remaining,
                    const Architecture& arch);

/// Look-ahead tie-breaker: over the first min(wnd, remaining) gates, the
/// sum of layer weight times (diameter - mapped distance).
long long lookaheadScore(const Mapping& candidate,
                         const LogicalCircuit& remaining,
                         const Architecture& arch, int wnd);

/// Two-stage sequence selection for a deadlocked state: maximize the
/// executable-per-swap score, then break ties with the look-ahead score.
/// Returns nullopt when no sequence within the search limit enables any
/// gate (the caller falls back to a distance-reducing swap).
std::optional<SwapSequence> selectSequence(const Mapping& map,
                                           const LogicalCircuit& remaining,
                                           const Architecture& arch,
                                           const RouterConfig& cfg);

/// Distance-reducing swap for the closest blocked front-layer gate.
Edge fallbackSwap(const Mapping& map, const LogicalCircuit& remaining,
                  const Architecture& arch);

/// Full routing pass: retire executable gates, insert swap sequences (or
/// fallback swaps) until every gate has executed.
RoutingResult route(const LogicalCircuit& circuit, const Mapping& initial,
                    const Architecture& arch, const RouterConfig& cfg);

} // namespace qroute
