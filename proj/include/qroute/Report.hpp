#pragma once

#include "qroute/Optimizer.hpp"
#include "qroute/Router.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qroute {

/// Per-circuit benchmark record. `additionalCnots` is 3 * swapCount, the
/// primary cost metric.
struct CircuitReport {
  std::string circuitName;
  int qubitNum = 0;
  int gateNum = 0; // every operation in the input file, measures included
  int cnotNum = 0; // two-qubit gates
  int swapCount = 0;
  int additionalCnots = 0;
  int depthIn = 0;
  int depthOut = 0;
  double wallTimeMs = 0.0;
  std::string directionOfBest;
  int iterationsRun = 0;
  // 1 - ours/baseline; unset without a baseline, nullopt-with-flag when
  // the baseline is 0 and ours is not (division by zero).
  std::optional<double> deltaVsBaseline;
  bool deltaUndefined = false;
};

/// ASAP depth of the routed stream, counting executed gates and swaps as
/// units over their physical nodes.
int physicalDepth(const std::vector<RoutedGate>& gates, int nodeCount);

std::string reportToJson(const CircuitReport& report);
std::string reportsToJson(const std::vector<CircuitReport>& reports);

/// CSV with the fixed header
/// circuit,qubits,gates,cnots,swaps,additional_cnots,depth_in,depth_out,
/// ms,direction,delta_vs_baseline and one trailing TOTAL row whose delta
/// cell carries the ratio of the summed gate counts.
std::string reportsToCsv(const std::vector<CircuitReport>& reports,
                         const std::string& totalDeltaCell = "");

/// Baseline file: CSV lines `circuit,additional_cnots` (header optional).
std::map<std::string, long long> loadBaseline(const std::string& path);

/// 1 - ours/theirs as a percentage-ready fraction; 0/0 is defined as 0.
std::optional<double> optimizationRatio(long long ours, long long theirs);

/// Applies a baseline to the reports and returns the summed totals row
/// ratio (computed on summed gate counts) when any circuit matched.
std::optional<double> applyBaseline(
    std::vector<CircuitReport>& reports,
    const std::map<std::string, long long>& baseline);

} // namespace qroute
