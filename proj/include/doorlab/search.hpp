#pragma once

#include "doorlab/classify.hpp"
#include "doorlab/filters.hpp"
#include "doorlab/kernels.hpp"
#include "doorlab/topology.hpp"
#include "doorlab/valuations.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace doorlab {

using kernels::Equation;

enum class TopologyMode { RawScan, ClosureDfs };
enum class SolveMode { Brute, Modular };

inline constexpr int kRawScanCap = 4;
inline constexpr int kBruteSolveCap = 4;

std::string to_string(TopologyMode m);
std::string to_string(SolveMode m);
std::string to_string(Equation e);

struct EnumerationReport {
  int n = 0;
  std::string mode;
  std::uint64_t total_families_scanned = 0;
  std::optional<std::uint64_t> topologies;
  std::optional<std::uint64_t> door;
  std::optional<std::uint64_t> connected_door;
  std::optional<std::uint64_t> occ_door;
  double elapsed_seconds = 0.0; // not serialized: output must be reproducible
};

nlohmann::json to_json(const EnumerationReport& r);

struct TopologyEnumeration {
  std::vector<Topology> topologies; // ascending family mask
  EnumerationReport report;
};

// Every topology on n labeled points exactly once. workers <= 0 means the
// default parallelism. Throws CapabilityError beyond a mode's cap.
TopologyEnumeration enumerate_topologies(int n, TopologyMode mode, int workers = 0);

// Connected-door topologies, each checked against the point-topology labels.
// Throws std::logic_error if any instance fails to classify as a point
// topology (that would falsify the classification).
std::vector<Topology> enumerate_connected_door(int n, int workers = 0);

struct OccDoorResult {
  std::vector<Topology> topologies;
  // Set when n < 4: OCC cannot fail on fewer than four points.
  std::optional<std::string> capability_note;
};

// Door topologies satisfying OCC (4 <= n <= 5 for the converse claim; smaller
// n returns a note and no enumeration).
OccDoorResult enumerate_occ_door(int n, int workers = 0);

// All solutions on P(X) (Eq2) or P(X) \ {empty} (Eq1Disjoint) that are
// surjective onto exactly `values`, in canonical order.
std::vector<SetFunction> enumerate_solutions(int n, const std::vector<ExactComplex>& values, Equation eq,
                                             SolveMode mode, int workers = 0);

// Two-valued (or k-valued) valuations on an algebra, surjective onto values.
std::vector<SetFunction> enumerate_algebra_solutions(const Algebra& sigma, const std::vector<ExactComplex>& values,
                                                     int workers = 0);

struct SurveyReport {
  int n = 0;
  SolveMode mode = SolveMode::Brute;
  std::size_t solutions = 0;
  std::vector<FamilyMask> induced;         // distinct topologies, ascending
  std::vector<FamilyMask> expected;        // Form1A/1B/3 constructions, ascending
  std::size_t unmatched = 0;               // induced but not a Form 1/3 instance
  std::size_t form2_instances = 0;         // always 0 on finite sets
  std::map<std::uint64_t, int> realizers;  // (f, v) pairs per induced topology
  bool equal() const { return induced == expected && unmatched == 0 && form2_instances == 0; }
};

SurveyReport induced_topology_survey(int n, SolveMode mode, int workers = 0);
nlohmann::json to_json(const SurveyReport& r);

// Counts of topologies, door, connected-door and OCC-door topologies for
// n <= 5, with the mode and scan size used.
EnumerationReport counts_report(int n, int workers = 0);

// Golden files: <dir>/n<N>_<predicate>.json with
// {"n", "predicate", "count", "mode", "scan_cardinality"}.
std::string golden_dir_default();
void write_golden(const EnumerationReport& r, const std::string& dir);
nlohmann::json read_golden(int n, const std::string& predicate, const std::string& dir);

} // namespace doorlab
