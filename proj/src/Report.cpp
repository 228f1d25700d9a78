#include "qroute/Report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qroute {

int physicalDepth(const std::vector<RoutedGate>& gates, int nodeCount) {
  std::vector<int> lastLayer(static_cast<std::size_t>(nodeCount), 0);
  int depth = 0;
  for (const auto& gate : gates) {
    const int layer =
        std::max(lastLayer[static_cast<std::size_t>(gate.u)],
                 lastLayer[static_cast<std::size_t>(gate.v)]) +
        1;
    lastLayer[static_cast<std::size_t>(gate.u)] = layer;
    lastLayer[static_cast<std::size_t>(gate.v)] = layer;
    depth = std::max(depth, layer);
  }
  return depth;
}

namespace {

nlohmann::ordered_json toJson(const CircuitReport& r) {
  nlohmann::ordered_json j;
  j["circuit_name"] = r.circuitName;
  j["qubit_num"] = r.qubitNum;
  j["gate_num"] = r.gateNum;
  j["cnot_num"] = r.cnotNum;
  j["swap_count"] = r.swapCount;
  j["additional_cnots"] = r.additionalCnots;
  j["depth_in"] = r.depthIn;
  j["depth_out"] = r.depthOut;
  j["wall_time_ms"] = r.wallTimeMs;
  j["direction_of_best"] = r.directionOfBest;
  j["iterations_run"] = r.iterationsRun;
  if (r.deltaUndefined) {
    j["delta_vs_baseline"] = nullptr;
  } else if (r.deltaVsBaseline) {
    j["delta_vs_baseline"] = *r.deltaVsBaseline;
  }
  return j;
}

std::string formatDelta(const CircuitReport& r) {
  if (r.deltaUndefined) {
    return "undefined";
  }
  if (!r.deltaVsBaseline) {
    return "";
  }
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << (*r.deltaVsBaseline * 100.0) << "%";
  return out.str();
}

std::string formatMs(double ms) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << ms;
  return out.str();
}

} // namespace

std::string reportToJson(const CircuitReport& report) {
  return toJson(report).dump(2) + "\n";
}

std::string reportsToJson(const std::vector<CircuitReport>& reports) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& report : reports) {
    j.push_back(toJson(report));
  }
  return j.dump(2) + "\n";
}

std::string reportsToCsv(const std::vector<CircuitReport>& reports,
                         const std::string& totalDeltaCell) {
  std::ostringstream out;
  out << "circuit,qubits,gates,cnots,swaps,additional_cnots,depth_in,"
         "depth_out,ms,direction,delta_vs_baseline\n";
  long long gates = 0;
  long long cnots = 0;
  long long swaps = 0;
  long long additional = 0;
  double ms = 0.0;
  for (const auto& r : reports) {
    out << r.circuitName << "," << r.qubitNum << "," << r.gateNum << ","
        << r.cnotNum << "," << r.swapCount << "," << r.additionalCnots << ","
        << r.depthIn << "," << r.depthOut << "," << formatMs(r.wallTimeMs)
        << "," << r.directionOfBest << "," << formatDelta(r) << "\n";
    gates += r.gateNum;
    cnots += r.cnotNum;
    swaps += r.swapCount;
    additional += r.additionalCnots;
    ms += r.wallTimeMs;
  }
  out << "TOTAL,," << gates << "," << cnots << "," << swaps << ","
      << additional << ",,," << formatMs(ms) << ",," << totalDeltaCell
      << "\n";
  return out.str();
}

std::map<std::string, long long> loadBaseline(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open baseline file: " + path);
  }
  std::map<std::string, long long> baseline;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      continue;
    }
    const std::string name = line.substr(0, comma);
    std::string value = line.substr(comma + 1);
    const auto next = value.find(',');
    if (next != std::string::npos) {
      value = value.substr(0, next);
    }
    try {
      baseline[name] = std::stoll(value);
    } catch (const std::exception&) {
      // header or malformed row; skip
    }
  }
  return baseline;
}

std::optional<double> optimizationRatio(long long ours, long long theirs) {
  if (theirs == 0) {
    if (ours == 0) {
      return 0.0;
    }
    return std::nullopt;
  }
  return 1.0 - static_cast<double>(ours) / static_cast<double>(theirs);
}

std::optional<double> applyBaseline(
    std::vector<CircuitReport>& reports,
    const std::map<std::string, long long>& baseline) {
  long long oursSum = 0;
  long long theirsSum = 0;
  bool any = false;
  for (auto& report : reports) {
    const auto it = baseline.find(report.circuitName);
    if (it == baseline.end()) {
      continue;
    }
    any = true;
    const auto ratio = optimizationRatio(report.additionalCnots, it->second);
    if (ratio) {
      report.deltaVsBaseline = *ratio;
    } else {
      report.deltaUndefined = true;
    }
    oursSum += report.additionalCnots;
    theirsSum += it->second;
  }
  if (!any) {
    return std::nullopt;
  }
  return optimizationRatio(oursSum, theirsSum);
}

} // namespace qroute
