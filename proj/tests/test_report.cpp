#include "qroute/Report.hpp"

#include <doctest.h>

#include <fstream>

using namespace qroute;

namespace {

CircuitReport sample(const std::string& name, int additional) {
  CircuitReport r;
  r.circuitName = name;
  r.qubitNum = 5;
  r.gateNum = 20;
  r.cnotNum = 10;
  r.swapCount = additional / 3;
  r.additionalCnots = additional;
  r.depthIn = 7;
  r.depthOut = 9;
  r.wallTimeMs = 1.25;
  r.directionOfBest = "forward";
  r.iterationsRun = 5;
  return r;
}

} // namespace

TEST_SUITE("report") {

TEST_CASE("optimization ratio") {
  SUBCASE("equal counts give zero") {
    CHECK(*optimizationRatio(42, 42) == doctest::Approx(0.0));
  }
  SUBCASE("the summed-counts example rounds to 20.62%") {
    const auto ratio = optimizationRatio(13047, 16437);
    REQUIRE(ratio.has_value());
    CHECK(*ratio * 100.0 == doctest::Approx(20.62).epsilon(1e-3));
  }
  SUBCASE("zero against zero is defined as zero") {
    CHECK(*optimizationRatio(0, 0) == doctest::Approx(0.0));
  }
  SUBCASE("nonzero against zero is undefined") {
    CHECK_FALSE(optimizationRatio(3, 0).has_value());
  }
}

TEST_CASE("csv header and totals row") {
  std::vector<CircuitReport> reports{sample("a", 3), sample("b", 9)};
  const std::string csv = reportsToCsv(reports);
  CHECK(csv.rfind("circuit,qubits,gates,cnots,swaps,additional_cnots,"
                  "depth_in,depth_out,ms,direction,delta_vs_baseline\n",
                  0) == 0);
  CHECK(csv.find("a,5,20,10,1,3,7,9,1.250,forward,\n") !=
        std::string::npos);
  CHECK(csv.find("TOTAL,,40,20,4,12,,,2.500,,\n") != std::string::npos);
}

TEST_CASE("baseline application fills per-circuit deltas and the total") {
  std::vector<CircuitReport> reports{sample("x", 30), sample("y", 0),
                                     sample("z", 6)};
  const std::map<std::string, long long> baseline{
      {"x", 30}, {"y", 0}, {"z", 0}};
  const auto total = applyBaseline(reports, baseline);
  CHECK(*reports[0].deltaVsBaseline == doctest::Approx(0.0));
  CHECK(*reports[1].deltaVsBaseline == doctest::Approx(0.0));
  CHECK(reports[2].deltaUndefined);
  REQUIRE(total.has_value());
  // 1 - 36/30 = -0.2
  CHECK(*total == doctest::Approx(-0.2));

  const std::string csv = reportsToCsv(reports, "-20.00%");
  CHECK(csv.find("z,5,20,10,2,6,7,9,1.250,forward,undefined\n") !=
        std::string::npos);
  CHECK(csv.find(",,-20.00%\n") != std::string::npos);
}

TEST_CASE("baseline csv loads name,count rows and skips headers") {
  const std::string path = "baseline_test_tmp.csv";
  {
    std::ofstream out(path);
    out << "circuit,additional_cnots\nfoo,12\nbar,0\n\nbaz,7,extra\n";
  }
  const auto baseline = loadBaseline(path);
  CHECK(baseline.size() == 3);
  CHECK(baseline.at("foo") == 12);
  CHECK(baseline.at("bar") == 0);
  CHECK(baseline.at("baz") == 7);
  std::remove(path.c_str());
}

TEST_CASE("json report carries every field") {
  CircuitReport r = sample("demo", 9);
  r.deltaVsBaseline = 0.25;
  const std::string json = reportToJson(r);
  CHECK(json.find("\"circuit_name\": \"demo\"") != std::string::npos);
  CHECK(json.find("\"additional_cnots\": 9") != std::string::npos);
  CHECK(json.find("\"direction_of_best\": \"forward\"") !=
        std::string::npos);
  CHECK(json.find("\"delta_vs_baseline\": 0.25") != std::string::npos);
}

TEST_CASE("physical depth layers gates over their nodes") {
  std::vector<RoutedGate> gates;
  auto add = [&](int u, int v, bool swap) {
    RoutedGate g;
    g.u = u;
    g.v = v;
    g.insertedSwap = swap;
    gates.push_back(g);
  };
  add(0, 1, false);
  add(2, 3, false); // parallel with the first
  add(1, 2, true);  // depends on both
  add(0, 1, false);
  CHECK(physicalDepth(gates, 4) == 3);
  CHECK(physicalDepth({}, 4) == 0);
}

} // TEST_SUITE
