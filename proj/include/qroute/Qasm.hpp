#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qroute {

/// Parse failure, carrying the 1-based source line it occurred on.
class QasmError : public std::runtime_error {
public:
  QasmError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  [[nodiscard]] int line() const { return line_; }

private:
  int line_;
};

enum class GateKind {
  SingleQubit, // any one-operand named gate (h, t, u1, rz, ...)
  TwoQubit,    // cx or swap
  Measure,     // opaque marker, re-emitted after mapping
  Barrier,     // opaque marker, re-emitted after mapping
};

/// One parsed statement. Parameters are kept verbatim as text tokens so
/// emission never drifts through a float round-trip; `params` holds their
/// numeric values for callers that want them.
struct RawGate {
  GateKind kind = GateKind::SingleQubit;
  std::string name;
  std::vector<std::string> paramText;
  std::vector<double> params;
  std::vector<int> qubits; // pairwise distinct, 0-based
  int cbit = -1;           // measure target, -1 otherwise
  int sourceLine = 1;
};

struct ParsedProgram {
  int qubitCount = 0;
  std::vector<RawGate> gates; // textual order
  std::string cregName;       // empty when the program has no creg
  int cregSize = 0;
};

/// Parses a single-register OpenQASM 2.0 program. Supported operations:
/// cx, swap, any named single-qubit gate, measure and barrier (preserved
/// as markers). Throws QasmError on anything else.
ParsedProgram parseQasm(const std::string& text);

ParsedProgram parseQasmFile(const std::string& path);

/// A gate of the routed output: either an executed two-qubit gate on
/// physical nodes, an inserted SWAP, or a rewritten pass-through gate.
struct PhysicalOp {
  RawGate gate;          // qubits hold physical node indices
  bool insertedSwap = false;
};

/// Serializes a routed physical circuit. With decomposeSwaps set, every
/// swap (inserted or input) becomes three back-to-back cx.
std::string emitQasm(const std::vector<PhysicalOp>& ops, int qubitCount,
                     const std::string& cregName = "", int cregSize = 0,
                     bool decomposeSwaps = false);

} // namespace qroute
