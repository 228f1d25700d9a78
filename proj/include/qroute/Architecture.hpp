#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qroute {

/// Error raised for malformed or unusable coupling graphs.
class ArchitectureError : public std::runtime_error {
public:
  explicit ArchitectureError(const std::string& msg)
      : std::runtime_error(msg) {}
};

using Edge = std::pair<int, int>; // always stored as (min, max)

inline Edge makeEdge(int u, int v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

/// Undirected hardware coupling graph with precomputed all-pairs hop
/// distances and diameter. Immutable after construction and freely shared
/// across threads.
class Architecture {
public:
  /// Builds a graph from an undirected edge list. Edges are deduplicated.
  /// Throws ArchitectureError on self-loops, out-of-range indices, or a
  /// disconnected graph.
  Architecture(int nodeCount, const std::vector<Edge>& edges);

  /// Built-in coupling maps. Accepted names: "ibm_q20", "sycamore",
  /// "linear_<N>", "grid_<R>x<C>".
  static Architecture preset(const std::string& name);

  /// Loads a JSON file of the form {"n": <int>, "edges": [[u,v], ...]}.
  static Architecture fromJsonFile(const std::string& path);

  /// Resolves a CLI selector: a preset name, or a path to a JSON file.
  static Architecture fromSelector(const std::string& selector);

  [[nodiscard]] int nodeCount() const { return nodeCount_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] int distance(int u, int v) const {
    return dist_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
  }
  [[nodiscard]] const std::vector<int>& distanceRow(int u) const {
    return dist_[static_cast<std::size_t>(u)];
  }
  [[nodiscard]] int diameter() const { return diameter_; }
  [[nodiscard]] bool adjacent(int u, int v) const {
    return distance(u, v) == 1;
  }
  [[nodiscard]] const std::vector<int>& neighbours(int u) const {
    return adj_[static_cast<std::size_t>(u)];
  }
  [[nodiscard]] int degree(int u) const {
    return static_cast<int>(adj_[static_cast<std::size_t>(u)].size());
  }

private:
  int nodeCount_ = 0;
  std::vector<Edge> edges_;           // sorted, deduplicated
  std::vector<std::vector<int>> adj_; // sorted neighbour lists
  std::vector<std::vector<int>> dist_;
  int diameter_ = 0;
};

} // namespace qroute
