#include "qroute/Architecture.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qroute {

Architecture::Architecture(int nodeCount, const std::vector<Edge>& edges)
    : nodeCount_(nodeCount) {
  if (nodeCount <= 0) {
    throw ArchitectureError("architecture needs at least one node");
  }
  std::set<Edge> dedup;
  for (const auto& [u, v] : edges) {
    if (u == v) {
      throw ArchitectureError("self-loop on node " + std::to_string(u));
    }
    if (u < 0 || v < 0 || u >= nodeCount || v >= nodeCount) {
      throw ArchitectureError("edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ") out of range for " +
                              std::to_string(nodeCount) + " nodes");
    }
    dedup.insert(makeEdge(u, v));
  }
  edges_.assign(dedup.begin(), dedup.end());

  adj_.resize(static_cast<std::size_t>(nodeCount_));
  for (const auto& [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
  }

  // BFS from every node; also proves connectivity.
  const int unreachable = -1;
  dist_.assign(static_cast<std::size_t>(nodeCount_),
               std::vector<int>(static_cast<std::size_t>(nodeCount_),
                                unreachable));
  for (int src = 0; src < nodeCount_; ++src) {
    auto& row = dist_[static_cast<std::size_t>(src)];
    row[static_cast<std::size_t>(src)] = 0;
    std::deque<int> queue{src};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const int v : adj_[static_cast<std::size_t>(u)]) {
        if (row[static_cast<std::size_t>(v)] == unreachable) {
          row[static_cast<std::size_t>(v)] =
              row[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
      }
    }
    for (int v = 0; v < nodeCount_; ++v) {
      if (row[static_cast<std::size_t>(v)] == unreachable) {
        throw ArchitectureError("graph is disconnected: no path " +
                                std::to_string(src) + " -> " +
                                std::to_string(v));
      }
      diameter_ = std::max(diameter_, row[static_cast<std::size_t>(v)]);
    }
  }
}

namespace {

// IBM Q20 (Tokyo) coupling map, transcribed from the published 20-qubit
// device layout: a 4x5 grid with crossing diagonals inside alternating
// cells. 43 undirected couplers; treated as bidirectional.
const std::vector<Edge> kIbmQ20Edges = {
    {0, 1},   {0, 5},   {1, 2},   {1, 6},   {1, 7},   {2, 3},   {2, 6},
    {2, 7},   {3, 4},   {3, 8},   {3, 9},   {4, 8},   {4, 9},   {5, 6},
    {5, 10},  {5, 11},  {6, 7},   {6, 10},  {6, 11},  {7, 8},   {7, 12},
    {7, 13},  {8, 9},   {8, 12},  {8, 13},  {9, 14},  {10, 11}, {10, 15},
    {11, 12}, {11, 16}, {11, 17}, {12, 13}, {12, 16}, {12, 17}, {13, 14},
    {13, 18}, {13, 19}, {14, 18}, {14, 19}, {15, 16}, {16, 17}, {17, 18},
    {18, 19}};

// Google Sycamore, idealized 54-qubit diagonal lattice: 9 rows of 6
// qubits, alternating offset, 88 couplers. Qubit r*6+c couples to the two
// diagonally adjacent qubits in the next row.
std::vector<Edge> sycamoreEdges() {
  std::vector<Edge> edges;
  const int rows = 9;
  const int cols = 6;
  for (int r = 0; r + 1 < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int q = r * cols + c;
      const int below = (r + 1) * cols + c;
      edges.push_back(makeEdge(q, below));
      const int other = (r % 2 == 0) ? c + 1 : c - 1;
      if (other >= 0 && other < cols) {
        edges.push_back(makeEdge(q, (r + 1) * cols + other));
      }
    }
  }
  return edges;
}

std::vector<Edge> lineEdges(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) {
    edges.push_back({i, i + 1});
  }
  return edges;
}

std::vector<Edge> gridEdges(int rows, int cols) {
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int q = r * cols + c;
      if (c + 1 < cols) {
        edges.push_back({q, q + 1});
      }
      if (r + 1 < rows) {
        edges.push_back({q, q + cols});
      }
    }
  }
  return edges;
}

bool parsePositiveInt(const std::string& text, int& out) {
  if (text.empty()) {
    return false;
  }
  int value = 0;
  for (const char ch : text) {
    if (ch < '0' || ch > '9') {
      return false;
    }
    value = value * 10 + (ch - '0');
    if (value > 1000000) {
      return false;
    }
  }
  out = value;
  return value > 0;
}

} // namespace

Architecture Architecture::preset(const std::string& name) {
  if (name == "ibm_q20") {
    return Architecture(20, kIbmQ20Edges);
  }
  if (name == "sycamore") {
    return Architecture(54, sycamoreEdges());
  }
  if (name.rfind("linear_", 0) == 0) {
    int n = 0;
    if (parsePositiveInt(name.substr(7), n) && n >= 2) {
      return Architecture(n, lineEdges(n));
    }
  }
  if (name.rfind("grid_", 0) == 0) {
    const std::string dims = name.substr(5);
    const auto xPos = dims.find('x');
    int rows = 0;
    int cols = 0;
    if (xPos != std::string::npos &&
        parsePositiveInt(dims.substr(0, xPos), rows) &&
        parsePositiveInt(dims.substr(xPos + 1), cols) && rows * cols >= 2) {
      return Architecture(rows * cols, gridEdges(rows, cols));
    }
  }
  throw ArchitectureError("unknown architecture preset: " + name);
}

Architecture Architecture::fromJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ArchitectureError("cannot open architecture file: " + path);
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ArchitectureError("bad architecture JSON in " + path + ": " +
                            e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw ArchitectureError("architecture JSON must be {\"n\": ..., "
                            "\"edges\": [[u,v], ...]}");
  }
  std::vector<Edge> edges;
  for (const auto& pair : doc["edges"]) {
    if (!pair.is_array() || pair.size() != 2) {
      throw ArchitectureError("architecture edge must be a [u, v] pair");
    }
    edges.push_back(makeEdge(pair[0].get<int>(), pair[1].get<int>()));
  }
  return Architecture(doc["n"].get<int>(), edges);
}

Architecture Architecture::fromSelector(const std::string& selector) {
  if (selector.size() > 5 &&
      selector.compare(selector.size() - 5, 5, ".json") == 0) {
    return fromJsonFile(selector);
  }
  std::ifstream probe(selector);
  if (probe.good()) {
    return fromJsonFile(selector);
  }
  return preset(selector);
}

} // namespace qroute
