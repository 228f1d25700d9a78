#include "qroute/Architecture.hpp"
#include "qroute/Circuit.hpp"
#include "qroute/InitialMap.hpp"
#include "qroute/Optimizer.hpp"
#include "qroute/Output.hpp"
#include "qroute/Qasm.hpp"
#include "qroute/Report.hpp"
#include "qroute/Router.hpp"
#include "qroute/Verify.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace {

namespace fs = std::filesystem;
using namespace qroute;

constexpr int kExitParseError = 1;
constexpr int kExitArchError = 2;
constexpr int kExitInternalError = 3;

struct CommonOptions {
  std::string arch = "ibm_q20";
  int depth = 3;
  std::string mode = "fixed";
  int topK = 50;
  int iters = 5;
  int layers = 3;
  int wnd = 30;
  int wndThreshold = 4000;
  bool decomposeSwaps = false;
  std::string out;
  std::string report;
};

void addCommonFlags(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--arch", opts.arch,
                  "architecture preset or JSON edge-list file");
  cmd->add_option("--depth", opts.depth, "swap sequence search depth");
  cmd->add_option("--mode", opts.mode, "search mode: fixed or imp")
      ->check(CLI::IsMember({"fixed", "imp"}));
  cmd->add_option("--k", opts.topK,
                  "top-K sequences extended in imp mode");
  cmd->add_option("--iters", opts.iters,
                  "forward/backward refinement iterations");
  cmd->add_option("--layers", opts.layers,
                  "look-ahead layers for candidate swaps");
  cmd->add_option("--wnd", opts.wnd, "look-ahead window size");
  cmd->add_option("--wnd-threshold", opts.wndThreshold,
                  "remaining-gate count above which the window scales");
  cmd->add_option("--decompose-swaps", opts.decomposeSwaps,
                  "emit swaps as three cx gates");
  cmd->add_option("--out", opts.out, "output path");
  cmd->add_option("--report", opts.report, "JSON report path");
}

RouterConfig makeConfig(const CommonOptions& opts) {
  RouterConfig cfg;
  cfg.searchDepth = opts.depth;
  cfg.candidateLayers = opts.layers;
  cfg.wndBase = opts.wnd;
  cfg.wndThreshold = opts.wndThreshold;
  cfg.mode = opts.mode == "imp" ? SearchMode::PartialExtension
                                : SearchMode::FixedDepth;
  cfg.topK = opts.topK;
  return cfg;
}

struct RunResult {
  CircuitReport report;
  OptimizeOutcome outcome;
};

RunResult runCircuit(const std::string& name, const ParsedProgram& program,
                     const Architecture& arch, const RouterConfig& cfg,
                     int iterations) {
  const LogicalCircuit circuit = LogicalCircuit::fromProgram(program);
  const auto start = std::chrono::steady_clock::now();
  RunResult run;
  run.outcome = optimize(circuit, arch, cfg, iterations);
  const std::chrono::duration<double, std::milli> elapsed =
      std::chrono::steady_clock::now() - start;

  const ReplayReport replay = verifyRouting(
      circuit, run.outcome.physicalGates, run.outcome.initialMap, arch);
  if (!replay.ok) {
    throw std::logic_error("equivalence replay failed for " + name + ": " +
                           replay.error);
  }

  CircuitReport& rep = run.report;
  rep.circuitName = name;
  rep.qubitNum = program.qubitCount;
  rep.gateNum = static_cast<int>(program.gates.size());
  for (const auto& gate : program.gates) {
    if (gate.kind == GateKind::TwoQubit) {
      ++rep.cnotNum;
    }
  }
  rep.swapCount = run.outcome.best().swapCount;
  rep.additionalCnots = 3 * rep.swapCount;
  rep.depthIn = partition(circuit).depth;
  rep.depthOut =
      physicalDepth(run.outcome.physicalGates, arch.nodeCount());
  rep.wallTimeMs = elapsed.count();
  rep.directionOfBest =
      run.outcome.best().direction == Direction::Forward ? "forward"
                                                         : "backward";
  rep.iterationsRun = run.outcome.iterationsRun;
  return run;
}

void writeFileOrDie(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << content;
}

int runMap(const CommonOptions& opts, const std::string& input) {
  ParsedProgram program;
  try {
    program = parseQasmFile(input);
  } catch (const QasmError& e) {
    std::cerr << "parse error: " << input << ": " << e.what() << "\n";
    return kExitParseError;
  }

  try {
    const Architecture arch = Architecture::fromSelector(opts.arch);
    const RouterConfig cfg = makeConfig(opts);
    RunResult run;
    try {
      run = runCircuit(fs::path(input).stem().string(), program, arch, cfg,
                       opts.iters);
    } catch (const std::logic_error& e) {
      std::cerr << "internal error: " << e.what() << "\n";
      return kExitInternalError;
    }

    const LogicalCircuit circuit = LogicalCircuit::fromProgram(program);
    const auto ops = buildPhysicalOps(circuit, run.outcome.physicalGates,
                                      run.outcome.initialMap);
    const std::string qasm =
        emitQasm(ops, arch.nodeCount(), program.cregName, program.cregSize,
                 opts.decomposeSwaps);
    if (opts.out.empty()) {
      std::cout << qasm;
    } else {
      writeFileOrDie(opts.out, qasm);
    }
    if (!opts.report.empty()) {
      writeFileOrDie(opts.report, reportToJson(run.report));
    }
    std::cerr << run.report.circuitName << ": " << run.report.swapCount
              << " swaps (" << run.report.additionalCnots
              << " additional cx), best " << run.report.directionOfBest
              << " pass\n";
    return 0;
  } catch (const ArchitectureError& e) {
    std::cerr << "architecture error: " << e.what() << "\n";
    return kExitArchError;
  }
}

int runBench(const CommonOptions& opts, const std::string& dir,
             const std::string& baselinePath, int jobs) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".qasm") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "no .qasm files in " << dir << "\n";
    return kExitParseError;
  }

  Architecture arch = Architecture::fromSelector(opts.arch);
  const RouterConfig cfg = makeConfig(opts);

  std::vector<std::optional<CircuitReport>> slots(files.size());
  std::vector<std::string> failures;
  std::mutex failureLock;
  std::atomic<std::size_t> cursor{0};

  const int workers = std::max(
      1, std::min(jobs, static_cast<int>(files.size())));
  auto work = [&]() {
    while (true) {
      const std::size_t index = cursor.fetch_add(1);
      if (index >= files.size()) {
        return;
      }
      const fs::path& path = files[index];
      try {
        const ParsedProgram program = parseQasmFile(path.string());
        RunResult run = runCircuit(path.stem().string(), program, arch, cfg,
                                   opts.iters);
        slots[index] = std::move(run.report);
      } catch (const std::exception& e) {
        const std::lock_guard<std::mutex> guard(failureLock);
        failures.push_back(path.string() + ": " + e.what());
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < workers; ++i) {
    pool.emplace_back(work);
  }
  work();
  for (auto& thread : pool) {
    thread.join();
  }

  std::vector<CircuitReport> reports;
  for (auto& slot : slots) {
    if (slot) {
      reports.push_back(std::move(*slot));
    }
  }

  std::string totalDeltaCell;
  if (!baselinePath.empty()) {
    const auto baseline = loadBaseline(baselinePath);
    const auto total = applyBaseline(reports, baseline);
    if (total) {
      std::ostringstream cell;
      cell.setf(std::ios::fixed);
      cell.precision(2);
      cell << (*total * 100.0) << "%";
      totalDeltaCell = cell.str();
    }
  }

  const std::string csv = reportsToCsv(reports, totalDeltaCell);
  if (opts.out.empty()) {
    std::cout << csv;
  } else {
    writeFileOrDie(opts.out, csv);
  }
  if (!opts.report.empty()) {
    writeFileOrDie(opts.report, reportsToJson(reports));
  }

  for (const auto& failure : failures) {
    std::cerr << "failed: " << failure << "\n";
  }
  return failures.empty() ? 0 : kExitParseError;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"qubit mapping and routing for coupling-limited devices"};
  app.require_subcommand(1);

  CommonOptions mapOpts;
  std::string mapInput;
  CLI::App* mapCmd =
      app.add_subcommand("map", "route one OpenQASM circuit");
  addCommonFlags(mapCmd, mapOpts);
  mapCmd->add_option("input", mapInput, "input .qasm file")->required();

  CommonOptions benchOpts;
  std::string benchDir;
  std::string baselinePath;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  CLI::App* benchCmd =
      app.add_subcommand("bench", "route a directory of circuits");
  addCommonFlags(benchCmd, benchOpts);
  benchCmd->add_option("dir", benchDir, "directory of .qasm files")
      ->required();
  benchCmd->add_option("--baseline", baselinePath,
                       "CSV of competitor additional-gate counts");
  benchCmd->add_option("--jobs", jobs, "worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (mapCmd->parsed()) {
      return runMap(mapOpts, mapInput);
    }
    return runBench(benchOpts, benchDir, baselinePath, jobs);
  } catch (const QasmError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const ArchitectureError& e) {
    std::cerr << "architecture error: " << e.what() << "\n";
    return kExitArchError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternalError;
  }
}
