#pragma once

#include <vector>

namespace qroute {

/// Injective (possibly partial) assignment of logical qubits to physical
/// nodes with an inverse lookup. -1 marks an unmapped qubit / free node.
class Mapping {
public:
  Mapping() = default;
  Mapping(int qubitCount, int nodeCount)
      : logToPhys_(static_cast<std::size_t>(qubitCount), -1),
        physToLog_(static_cast<std::size_t>(nodeCount), -1) {}

  static Mapping identity(int qubitCount, int nodeCount) {
    Mapping map(qubitCount, nodeCount);
    for (int q = 0; q < qubitCount; ++q) {
      map.assign(q, q);
    }
    return map;
  }

  [[nodiscard]] int qubitCount() const {
    return static_cast<int>(logToPhys_.size());
  }
  [[nodiscard]] int nodeCount() const {
    return static_cast<int>(physToLog_.size());
  }
  [[nodiscard]] int physOf(int q) const {
    return logToPhys_[static_cast<std::size_t>(q)];
  }
  [[nodiscard]] int logAt(int v) const {
    return physToLog_[static_cast<std::size_t>(v)];
  }
  [[nodiscard]] bool mapped(int q) const { return physOf(q) >= 0; }
  [[nodiscard]] bool occupied(int v) const { return logAt(v) >= 0; }

  [[nodiscard]] bool complete() const {
    for (const int v : logToPhys_) {
      if (v < 0) {
        return false;
      }
    }
    return true;
  }

  void assign(int q, int v) {
    logToPhys_[static_cast<std::size_t>(q)] = v;
    physToLog_[static_cast<std::size_t>(v)] = q;
  }

  void unassign(int q) {
    const int v = physOf(q);
    if (v >= 0) {
      physToLog_[static_cast<std::size_t>(v)] = -1;
    }
    logToPhys_[static_cast<std::size_t>(q)] = -1;
  }

  /// Exchanges the logical occupants of two physical nodes. Either side
  /// may be free.
  void applySwap(int u, int v) {
    const int lu = logAt(u);
    const int lv = logAt(v);
    physToLog_[static_cast<std::size_t>(u)] = lv;
    physToLog_[static_cast<std::size_t>(v)] = lu;
    if (lu >= 0) {
      logToPhys_[static_cast<std::size_t>(lu)] = v;
    }
    if (lv >= 0) {
      logToPhys_[static_cast<std::size_t>(lv)] = u;
    }
  }

  [[nodiscard]] const std::vector<int>& forward() const { return logToPhys_; }
  [[nodiscard]] const std::vector<int>& inverse() const { return physToLog_; }

  friend bool operator==(const Mapping&, const Mapping&) = default;

private:
  std::vector<int> logToPhys_;
  std::vector<int> physToLog_;
};

} // namespace qroute
