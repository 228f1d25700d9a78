#include "qroute/Router.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <span>

namespace qroute {

namespace {

using GateSpan = std::span<const TwoQubitGate>;

// Everything select/fallback needs about the current deadlock state,
// recomputed from the remaining circuit once per routing step.
struct StepContext {
  std::vector<int> layer;        // ASAP layer per remaining position
  int depth = 0;
  std::vector<long long> weight; // layer weight per remaining position
  std::vector<Edge> candidateEdges;
  int activeQubits = 0;          // distinct qubits in the remaining list
  int wnd = 0;
};

void layerRemaining(GateSpan gates, int qubitCount, std::vector<int>& layer,
                    int& depth, int& activeQubits) {
  layer.assign(gates.size(), 0);
  depth = 0;
  activeQubits = 0;
  std::vector<int> lastLayer(static_cast<std::size_t>(qubitCount), 0);
  std::vector<bool> seen(static_cast<std::size_t>(qubitCount), false);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto c = static_cast<std::size_t>(gates[i].control);
    const auto t = static_cast<std::size_t>(gates[i].target);
    const int l = std::max(lastLayer[c], lastLayer[t]) + 1;
    layer[i] = l;
    lastLayer[c] = l;
    lastLayer[t] = l;
    depth = std::max(depth, l);
    for (const auto q : {c, t}) {
      if (!seen[q]) {
        seen[q] = true;
        ++activeQubits;
      }
    }
  }
}

StepContext buildContext(GateSpan gates, int qubitCount, const Mapping& map,
                         const Architecture& arch, const RouterConfig& cfg) {
  StepContext ctx;
  layerRemaining(gates, qubitCount, ctx.layer, ctx.depth, ctx.activeQubits);
  ctx.weight.resize(gates.size());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    ctx.weight[i] = ctx.depth - ctx.layer[i] + 1;
  }

  std::vector<bool> front(static_cast<std::size_t>(qubitCount), false);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (ctx.layer[i] <= cfg.candidateLayers) {
      front[static_cast<std::size_t>(gates[i].control)] = true;
      front[static_cast<std::size_t>(gates[i].target)] = true;
    }
  }
  for (const Edge& edge : arch.edges()) {
    const int lu = map.logAt(edge.first);
    const int lv = map.logAt(edge.second);
    const bool hit =
        (lu >= 0 && lu < qubitCount && front[static_cast<std::size_t>(lu)]) ||
        (lv >= 0 && lv < qubitCount && front[static_cast<std::size_t>(lv)]);
    if (hit) {
      ctx.candidateEdges.push_back(edge);
    }
  }

  const auto rg = static_cast<long long>(gates.size());
  ctx.wnd = rg > cfg.wndThreshold
                ? static_cast<int>(std::floor(
                      cfg.wndFactor * std::sqrt(static_cast<double>(rg))))
                : cfg.wndBase;
  return ctx;
}

// One front-to-back pass: a gate retires iff its mapped qubits are
// adjacent and no earlier unretired gate touched either qubit. A blocked
// qubit never unblocks (the mapping is fixed during the pass), so a single
// pass reaches the fixpoint.
int executableCount(GateSpan gates, const std::vector<int>& logToPhys,
                    const Architecture& arch,
                    std::vector<std::uint8_t>& blockedScratch,
                    int activeQubits) {
  std::fill(blockedScratch.begin(), blockedScratch.end(), 0);
  int blockedCount = 0;
  int count = 0;
  for (const auto& gate : gates) {
    const auto c = static_cast<std::size_t>(gate.control);
    const auto t = static_cast<std::size_t>(gate.target);
    if (blockedScratch[c] == 0 && blockedScratch[t] == 0 &&
        arch.distance(logToPhys[c], logToPhys[t]) == 1) {
      ++count;
      continue;
    }
    if (blockedScratch[c] == 0) {
      blockedScratch[c] = 1;
      ++blockedCount;
    }
    if (blockedScratch[t] == 0) {
      blockedScratch[t] = 1;
      ++blockedCount;
    }
    if (blockedCount >= activeQubits) {
      break;
    }
  }
  return count;
}

void applySwapRaw(std::vector<int>& logToPhys, std::vector<int>& physToLog,
                  int u, int v) {
  const int lu = physToLog[static_cast<std::size_t>(u)];
  const int lv = physToLog[static_cast<std::size_t>(v)];
  physToLog[static_cast<std::size_t>(u)] = lv;
  physToLog[static_cast<std::size_t>(v)] = lu;
  if (lu >= 0) {
    logToPhys[static_cast<std::size_t>(lu)] = v;
  }
  if (lv >= 0) {
    logToPhys[static_cast<std::size_t>(lv)] = u;
  }
}

long long lookahead(GateSpan gates, const std::vector<long long>& weights,
                    const std::vector<int>& logToPhys,
                    const Architecture& arch, int wnd) {
  const std::size_t n =
      std::min(gates.size(), static_cast<std::size_t>(std::max(wnd, 0)));
  const int dia = arch.diameter();
  long long sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int pu = logToPhys[static_cast<std::size_t>(gates[i].control)];
    const int pv = logToPhys[static_cast<std::size_t>(gates[i].target)];
    sum += weights[i] * (dia - arch.distance(pu, pv));
  }
  return sum;
}

struct RawCandidate {
  std::array<std::uint16_t, 3> edgeIdx{};
  std::uint8_t len = 0;
  int count = 0;

  [[nodiscard]] Ratio score() const {
    return Ratio{count, static_cast<long long>(len)};
  }
};

// Ranking used both for the top-K cut and for final tie-breaking: higher
// score first, then shorter, then lexicographically smaller edge list
// (candidate edges are index-sorted, so index order is edge order).
bool rankBefore(const RawCandidate& a, const RawCandidate& b) {
  const long long lhs = static_cast<long long>(a.count) * b.len;
  const long long rhs = static_cast<long long>(b.count) * a.len;
  if (lhs != rhs) {
    return lhs > rhs;
  }
  if (a.len != b.len) {
    return a.len < b.len;
  }
  for (std::uint8_t i = 0; i < a.len; ++i) {
    if (a.edgeIdx[i] != b.edgeIdx[i]) {
      return a.edgeIdx[i] < b.edgeIdx[i];
    }
  }
  return false;
}

bool tieBefore(const RawCandidate& a, const RawCandidate& b) {
  if (a.len != b.len) {
    return a.len < b.len;
  }
  for (std::uint8_t i = 0; i < a.len; ++i) {
    if (a.edgeIdx[i] != b.edgeIdx[i]) {
      return a.edgeIdx[i] < b.edgeIdx[i];
    }
  }
  return false;
}

class SequenceSearch {
public:
  SequenceSearch(GateSpan gates, const Mapping& map, const Architecture& arch,
                 const RouterConfig& cfg, const StepContext& ctx)
      : gates_(gates), arch_(arch), cfg_(cfg), ctx_(ctx),
        logToPhys_(map.forward()), physToLog_(map.inverse()),
        blocked_(map.forward().size(), 0) {}

  std::optional<SwapSequence> run(RoutingStats* stats) {
    const bool partial = cfg_.mode == SearchMode::PartialExtension;
    const int enumDepth = partial ? std::min(cfg_.searchDepth, 2)
                                  : cfg_.searchDepth;
    storeZeroScores_ = partial;
    std::array<std::uint16_t, 3> path{};
    enumerate(path, 0, -1, enumDepth);
    if (partial) {
      extendTop();
    }
    if (stats != nullptr) {
      ++stats->sequenceSteps;
      stats->candidatesTotal += scored_;
      stats->candidatesMax = std::max(stats->candidatesMax, scored_);
    }
    return pick();
  }

private:
  void enumerate(std::array<std::uint16_t, 3>& path, int len, int last,
                 int maxLen) {
    const auto edgeCount = static_cast<int>(ctx_.candidateEdges.size());
    for (int idx = 0; idx < edgeCount; ++idx) {
      if (idx == last) {
        continue; // an immediate undo can never raise the score
      }
      const Edge& edge = ctx_.candidateEdges[static_cast<std::size_t>(idx)];
      applySwapRaw(logToPhys_, physToLog_, edge.first, edge.second);
      path[static_cast<std::size_t>(len)] = static_cast<std::uint16_t>(idx);
      const int count = executableCount(gates_, logToPhys_, arch_, blocked_,
                                        ctx_.activeQubits);
      ++scored_;
      if (count > 0 || storeZeroScores_) {
        RawCandidate cand;
        cand.edgeIdx = path;
        cand.len = static_cast<std::uint8_t>(len + 1);
        cand.count = count;
        candidates_.push_back(cand);
      }
      if (len + 1 < maxLen) {
        enumerate(path, len + 1, idx, maxLen);
      }
      applySwapRaw(logToPhys_, physToLog_, edge.first, edge.second);
    }
  }

  // Partially extended strategy: keep the top-K depth<=2 sequences and
  // grow every length-2 member by one more candidate swap.
  void extendTop() {
    std::vector<RawCandidate> ranked = candidates_;
    std::sort(ranked.begin(), ranked.end(), rankBefore);
    const std::size_t keep =
        std::min(ranked.size(), static_cast<std::size_t>(cfg_.topK));
    for (std::size_t i = 0; i < keep; ++i) {
      const RawCandidate& base = ranked[i];
      if (base.len != 2) {
        continue;
      }
      for (const std::uint8_t k : {0, 1}) {
        const Edge& e = ctx_.candidateEdges[base.edgeIdx[k]];
        applySwapRaw(logToPhys_, physToLog_, e.first, e.second);
      }
      const auto edgeCount = static_cast<int>(ctx_.candidateEdges.size());
      for (int idx = 0; idx < edgeCount; ++idx) {
        if (idx == base.edgeIdx[1]) {
          continue;
        }
        const Edge& edge =
            ctx_.candidateEdges[static_cast<std::size_t>(idx)];
        applySwapRaw(logToPhys_, physToLog_, edge.first, edge.second);
        const int count = executableCount(gates_, logToPhys_, arch_,
                                          blocked_, ctx_.activeQubits);
        ++scored_;
        if (count > 0) {
          RawCandidate cand = base;
          cand.edgeIdx[2] = static_cast<std::uint16_t>(idx);
          cand.len = 3;
          cand.count = count;
          candidates_.push_back(cand);
        }
        applySwapRaw(logToPhys_, physToLog_, edge.first, edge.second);
      }
      for (const std::uint8_t k : {1, 0}) {
        const Edge& e = ctx_.candidateEdges[base.edgeIdx[k]];
        applySwapRaw(logToPhys_, physToLog_, e.first, e.second);
      }
    }
  }

  std::optional<SwapSequence> pick() {
    Ratio best{0, 1};
    for (const RawCandidate& cand : candidates_) {
      if (cand.count > 0 && cand.score() > best) {
        best = cand.score();
      }
    }
    if (best.num == 0) {
      return std::nullopt;
    }

    // Sequences with the same resulting mapping are interchangeable for
    // the look-ahead score; keep one representative per mapping.
    std::map<std::vector<int>, RawCandidate> byMapping;
    for (const RawCandidate& cand : candidates_) {
      if (cand.count == 0 || !(cand.score() == best)) {
        continue;
      }
      std::vector<int> fwd = logToPhys_;
      std::vector<int> inv = physToLog_;
      for (std::uint8_t i = 0; i < cand.len; ++i) {
        const Edge& e = ctx_.candidateEdges[cand.edgeIdx[i]];
        applySwapRaw(fwd, inv, e.first, e.second);
      }
      auto [it, inserted] = byMapping.try_emplace(std::move(fwd), cand);
      if (!inserted && tieBefore(cand, it->second)) {
        it->second = cand;
      }
    }

    const RawCandidate* winner = nullptr;
    long long winnerLookahead = std::numeric_limits<long long>::min();
    for (const auto& [fwd, cand] : byMapping) {
      const long long la =
          lookahead(gates_, ctx_.weight, fwd, arch_, ctx_.wnd);
      if (winner == nullptr || la > winnerLookahead ||
          (la == winnerLookahead && tieBefore(cand, *winner))) {
        winner = &cand;
        winnerLookahead = la;
      }
    }

    SwapSequence result;
    result.score = winner->score();
    std::vector<int> fwd = logToPhys_;
    std::vector<int> inv = physToLog_;
    for (std::uint8_t i = 0; i < winner->len; ++i) {
      const Edge& e = ctx_.candidateEdges[winner->edgeIdx[i]];
      result.swaps.push_back(e);
      applySwapRaw(fwd, inv, e.first, e.second);
    }
    Mapping resulting(static_cast<int>(fwd.size()),
                      static_cast<int>(inv.size()));
    for (int q = 0; q < static_cast<int>(fwd.size()); ++q) {
      if (fwd[static_cast<std::size_t>(q)] >= 0) {
        resulting.assign(q, fwd[static_cast<std::size_t>(q)]);
      }
    }
    result.resulting = std::move(resulting);
    return result;
  }

  GateSpan gates_;
  const Architecture& arch_;
  const RouterConfig& cfg_;
  const StepContext& ctx_;
  std::vector<int> logToPhys_;
  std::vector<int> physToLog_;
  std::vector<std::uint8_t> blocked_;
  std::vector<RawCandidate> candidates_;
  long long scored_ = 0;
  bool storeZeroScores_ = false;
};

Edge fallbackImpl(const Mapping& map, GateSpan gates,
                  const StepContext& ctx, const Architecture& arch) {
  int bestDist = std::numeric_limits<int>::max();
  int bestPos = -1;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (ctx.layer[i] != 1) {
      continue;
    }
    const int d = arch.distance(map.physOf(gates[i].control),
                                map.physOf(gates[i].target));
    if (d < bestDist) {
      bestDist = d;
      bestPos = static_cast<int>(i);
    }
  }
  assert(bestPos >= 0 && bestDist >= 2);
  const int a = map.physOf(gates[static_cast<std::size_t>(bestPos)].control);
  const int b = map.physOf(gates[static_cast<std::size_t>(bestPos)].target);

  Edge best{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
  auto consider = [&](int from, int to, int other) {
    if (arch.distance(to, other) == arch.distance(from, other) - 1) {
      best = std::min(best, makeEdge(from, to));
    }
  };
  for (const int w : arch.neighbours(a)) {
    consider(a, w, b);
  }
  for (const int w : arch.neighbours(b)) {
    consider(b, w, a);
  }
  return best;
}

std::vector<int> executablePositions(GateSpan gates, const Mapping& map,
                                     const Architecture& arch) {
  std::vector<std::uint8_t> blocked(
      static_cast<std::size_t>(map.qubitCount()), 0);
  std::vector<int> retired;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto c = static_cast<std::size_t>(gates[i].control);
    const auto t = static_cast<std::size_t>(gates[i].target);
    if (blocked[c] == 0 && blocked[t] == 0 &&
        arch.adjacent(map.physOf(gates[i].control),
                      map.physOf(gates[i].target))) {
      retired.push_back(static_cast<int>(i));
    } else {
      blocked[c] = 1;
      blocked[t] = 1;
    }
  }
  return retired;
}

} // namespace

std::vector<int> executableGates(const LogicalCircuit& remaining,
                                 const Mapping& map,
                                 const Architecture& arch) {
  const auto positions =
      executablePositions(GateSpan(remaining.gates()), map, arch);
  std::vector<int> ids;
  ids.reserve(positions.size());
  for (const int pos : positions) {
    ids.push_back(remaining.gates()[static_cast<std::size_t>(pos)].id);
  }
  return ids;
}

std::vector<Edge> candidateSwapEdges(const LogicalCircuit& remaining,
                                     const Mapping& map,
                                     const Architecture& arch, int layers) {
  RouterConfig cfg;
  cfg.candidateLayers = layers;
  const StepContext ctx = buildContext(GateSpan(remaining.gates()),
                                       remaining.qubitCount(), map, arch,
                                       cfg);
  return ctx.candidateEdges;
}

Ratio sequenceScore(const Mapping& map, const std::vector<Edge>& swaps,
                    const LogicalCircuit& remaining,
                    const Architecture& arch) {
  assert(!swaps.empty());
  std::vector<int> fwd = map.forward();
  std::vector<int> inv = map.inverse();
  for (const auto& [u, v] : swaps) {
    applySwapRaw(fwd, inv, u, v);
  }
  std::vector<std::uint8_t> blocked(fwd.size(), 0);
  const int count =
      executableCount(GateSpan(remaining.gates()), fwd, arch, blocked,
                      remaining.qubitCount());
  return Ratio{count, static_cast<long long>(swaps.size())};
}

long long lookaheadScore(const Mapping& candidate,
                         const LogicalCircuit& remaining,
                         const Architecture& arch, int wnd) {
  const GateSpan gates(remaining.gates());
  std::vector<int> layer;
  int depth = 0;
  int active = 0;
  layerRemaining(gates, remaining.qubitCount(), layer, depth, active);
  std::vector<long long> weights(gates.size());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    weights[i] = depth - layer[i] + 1;
  }
  return lookahead(gates, weights, candidate.forward(), arch, wnd);
}

std::optional<SwapSequence> selectSequence(const Mapping& map,
                                           const LogicalCircuit& remaining,
                                           const Architecture& arch,
                                           const RouterConfig& cfg) {
  const GateSpan gates(remaining.gates());
  const StepContext ctx =
      buildContext(gates, remaining.qubitCount(), map, arch, cfg);
  SequenceSearch search(gates, map, arch, cfg, ctx);
  return search.run(nullptr);
}

Edge fallbackSwap(const Mapping& map, const LogicalCircuit& remaining,
                  const Architecture& arch) {
  RouterConfig cfg;
  const GateSpan gates(remaining.gates());
  const StepContext ctx =
      buildContext(gates, remaining.qubitCount(), map, arch, cfg);
  return fallbackImpl(map, gates, ctx, arch);
}

RoutingResult route(const LogicalCircuit& circuit, const Mapping& initial,
                    const Architecture& arch, const RouterConfig& cfg) {
  RoutingResult result;
  result.initialMap = initial;
  Mapping cur = initial;
  std::vector<TwoQubitGate> remaining = circuit.gates();

  while (true) {
    const auto retired =
        executablePositions(GateSpan(remaining), cur, arch);
    if (!retired.empty()) {
      std::vector<bool> gone(remaining.size(), false);
      for (const int pos : retired) {
        const auto& gate = remaining[static_cast<std::size_t>(pos)];
        RoutedGate routed;
        routed.logicalId = gate.id;
        routed.u = cur.physOf(gate.control);
        routed.v = cur.physOf(gate.target);
        routed.op = gate.op;
        result.physicalGates.push_back(routed);
        gone[static_cast<std::size_t>(pos)] = true;
      }
      std::vector<TwoQubitGate> rest;
      rest.reserve(remaining.size() - retired.size());
      for (std::size_t i = 0; i < remaining.size(); ++i) {
        if (!gone[i]) {
          rest.push_back(remaining[i]);
        }
      }
      remaining = std::move(rest);
    }
    if (remaining.empty()) {
      break;
    }

    const GateSpan gates(remaining);
    const StepContext ctx =
        buildContext(gates, circuit.qubitCount(), cur, arch, cfg);
    const auto start = std::chrono::steady_clock::now();
    SequenceSearch search(gates, cur, arch, cfg, ctx);
    const auto choice = search.run(&result.stats);
    result.stats.selectNanos +=
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now() - start)
            .count();

    if (choice) {
      for (const auto& [u, v] : choice->swaps) {
        RoutedGate swap;
        swap.u = u;
        swap.v = v;
        swap.insertedSwap = true;
        swap.op = TwoQubitGate::Op::Swap;
        result.physicalGates.push_back(swap);
        cur.applySwap(u, v);
        ++result.swapCount;
      }
    } else {
      const Edge edge = fallbackImpl(cur, gates, ctx, arch);
      RoutedGate swap;
      swap.u = edge.first;
      swap.v = edge.second;
      swap.insertedSwap = true;
      swap.op = TwoQubitGate::Op::Swap;
      result.physicalGates.push_back(swap);
      cur.applySwap(edge.first, edge.second);
      ++result.swapCount;
      ++result.fallbackCount;
      ++result.stats.fallbacks;
    }
  }

  result.finalMap = cur;
  return result;
}

} // namespace qroute
