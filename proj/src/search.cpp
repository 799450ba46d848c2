#include "doorlab/search.hpp"

#include "doorlab/error.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <set>

#ifndef DOORLAB_GOLDEN_DEFAULT
#define DOORLAB_GOLDEN_DEFAULT "golden/v1"
#endif

namespace doorlab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_cap(int n, int cap, const std::string& what) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (n > cap) throw CapabilityError(what + ": n exceeds cap " + std::to_string(cap));
}

std::vector<Topology> wrap(GroundSet g, const std::vector<std::uint64_t>& families) {
  std::vector<Topology> out;
  out.reserve(families.size());
  for (auto bits : families) out.push_back(trusted_topology(FamilyMask(g, bits)));
  return out;
}

} // namespace

std::string to_string(TopologyMode m) { return m == TopologyMode::RawScan ? "raw_scan" : "closure_dfs"; }
std::string to_string(SolveMode m) { return m == SolveMode::Brute ? "brute" : "modular_param"; }
std::string to_string(Equation e) { return e == Equation::Eq2 ? "eq2" : "eq1_disjoint"; }

nlohmann::json to_json(const EnumerationReport& r) {
  auto opt = [](const std::optional<std::uint64_t>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  nlohmann::json j = {{"n", r.n},
                      {"mode", r.mode},
                      {"total_families_scanned", r.total_families_scanned},
                      {"topologies", opt(r.topologies)},
                      {"door", opt(r.door)},
                      {"connected_door", opt(r.connected_door)},
                      {"occ_door", opt(r.occ_door)}};
  if (r.n == 1) j["degenerate"] = true;
  return j;
}

TopologyEnumeration enumerate_topologies(int n, TopologyMode mode, int workers) {
  require_cap(n, mode == TopologyMode::RawScan ? kRawScanCap : kMaxPoints, to_string(mode));
  GroundSet g(n);
  auto start = Clock::now();
  kernels::TopologyScan scan =
      mode == TopologyMode::RawScan ? kernels::omp::raw_scan(g, workers) : kernels::omp::closure_dfs(g, workers);
  TopologyEnumeration out;
  out.topologies = wrap(g, scan.families);
  out.report.n = n;
  out.report.mode = to_string(mode);
  out.report.total_families_scanned = scan.scanned;
  out.report.topologies = scan.families.size();
  out.report.elapsed_seconds = seconds_since(start);
  return out;
}

namespace {

TopologyMode natural_mode(int n) { return n <= kRawScanCap ? TopologyMode::RawScan : TopologyMode::ClosureDfs; }

std::size_t expected_connected_door_count(int n) {
  if (n == 1) return 1;
  if (n == 2) return 2;
  return 2 * static_cast<std::size_t>(n);
}

} // namespace

std::vector<Topology> enumerate_connected_door(int n, int workers) {
  require_cap(n, kMaxPoints, "enumerate_connected_door");
  auto all = enumerate_topologies(n, TopologyMode::ClosureDfs, workers);
  std::vector<Topology> out;
  for (const auto& t : all.topologies)
    if (is_connected_door(t)) out.push_back(t);

  for (const auto& t : out) {
    auto label = classify_connected_door(t);
    bool point_only = !label.labels.empty() && std::all_of(label.labels.begin(), label.labels.end(), [](auto& d) {
      return std::holds_alternative<ExcludedPoint>(d) || std::holds_alternative<IncludedPoint>(d);
    });
    if (!point_only || label.free_ultrafilter_type)
      throw TheoremViolation("connected door topology " + to_hex(t.opens()) + " is not a point topology");
  }
  if (out.size() != expected_connected_door_count(n))
    throw TheoremViolation("connected door count " + std::to_string(out.size()) + " at n=" + std::to_string(n));
  return out;
}

OccDoorResult enumerate_occ_door(int n, int workers) {
  require_cap(n, kMaxPoints, "enumerate_occ_door");
  OccDoorResult out;
  if (n < 4) {
    out.capability_note = "OCC holds vacuously on fewer than four points; the converse is stated for n >= 4";
    return out;
  }
  auto all = enumerate_topologies(n, natural_mode(n), workers);
  for (const auto& t : all.topologies)
    if (is_door(t) && occ_satisfied(t).satisfied) out.topologies.push_back(t);
  for (const auto& t : out.topologies)
    if (!is_connected_door(t))
      throw TheoremViolation("door space " + to_hex(t.opens()) + " satisfies OCC but is not connected-door");
  return out;
}

namespace {

void check_values(const std::vector<ExactComplex>& values) {
  if (values.size() < 2 || values.size() > 3) throw DomainError("value set must have 2 or 3 values");
}

FamilyMask solve_domain(GroundSet g, Equation eq) {
  FamilyMask domain = powerset(g);
  if (eq == Equation::Eq1Disjoint) domain.erase(SubsetMask::empty());
  return domain;
}

std::vector<SetFunction> to_functions(const FamilyMask& domain, const kernels::ValueTable& table,
                                      const std::vector<kernels::Assignment>& solutions) {
  std::vector<SetFunction> out;
  out.reserve(solutions.size());
  GroundSet g = domain.ground();
  for (const auto& a : solutions) {
    std::vector<ExactComplex> values(g.subset_count());
    domain.for_each([&](SubsetMask s) { values[s.bits()] = table.values()[a[s.bits()]]; });
    out.push_back(SetFunction::from_table(g, domain, std::move(values)));
  }
  return out;
}

std::vector<SetFunction> solve_modular(GroundSet g, const kernels::ValueTable& table, Equation eq) {
  const auto& vals = table.values();
  const int k = table.size();
  const int n = g.size();
  std::set<ExactComplex> target(vals.begin(), vals.end());
  std::vector<SetFunction> out;

  // f(empty) = c (0 for the additive case); f({x}) ranges over the values.
  std::vector<ExactComplex> bases = eq == Equation::Eq2 ? vals : std::vector<ExactComplex>{ExactComplex{}};
  std::int64_t combos = 1;
  for (int x = 0; x < n; ++x) combos *= k;
  for (const auto& c : bases) {
    for (std::int64_t code = 0; code < combos; ++code) {
      ModularParams p{c, {}};
      std::int64_t rest = code;
      for (int x = 0; x < n; ++x) {
        p.weights.push_back(vals[rest % k] - c);
        rest /= k;
      }
      SetFunction f = modular_compose(g, p, eq == Equation::Eq2);
      auto vs = f.value_set();
      if (std::set<ExactComplex>(vs.begin(), vs.end()) == target) out.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace

std::vector<SetFunction> enumerate_solutions(int n, const std::vector<ExactComplex>& values, Equation eq,
                                             SolveMode mode, int workers) {
  check_values(values);
  require_cap(n, mode == SolveMode::Brute ? kBruteSolveCap : kMaxPoints, "enumerate_solutions " + to_string(mode));
  GroundSet g(n);
  kernels::ValueTable table(values);
  if (mode == SolveMode::Modular) return solve_modular(g, table, eq);
  FamilyMask domain = solve_domain(g, eq);
  auto scan = kernels::omp::solve_backtrack(domain, eq, table, workers);
  return to_functions(domain, table, scan.solutions);
}

std::vector<SetFunction> enumerate_algebra_solutions(const Algebra& sigma, const std::vector<ExactComplex>& values,
                                                     int workers) {
  kernels::ValueTable table(values);
  auto scan = kernels::omp::solve_backtrack(sigma.members(), Equation::Eq2, table, workers);
  return to_functions(sigma.members(), table, scan.solutions);
}

SurveyReport induced_topology_survey(int n, SolveMode mode, int workers) {
  require_cap(n, mode == SolveMode::Brute ? kBruteSolveCap : 5, "induced_topology_survey " + to_string(mode));
  GroundSet g(n);
  const std::vector<ExactComplex> values = {-1, 0, 1};
  auto solutions = enumerate_solutions(n, values, Equation::Eq2, mode, workers);

  SurveyReport r;
  r.n = n;
  r.mode = mode;
  r.solutions = solutions.size();
  std::set<std::uint64_t> induced;
  SubsetMask full = SubsetMask::full(g);
  for (const auto& f : solutions) {
    for (int v : {-1, 1}) {
      FamilyMask fam = induced_family(f, v);
      if (!kernels::is_topology_bits(fam.bits(), g.full_bits())) continue;
      induced.insert(fam.bits());
      ++r.realizers[fam.bits()];
      // The only branch that could produce two free ultrafilters: f(empty) = -1,
      // f(X) = 1, designated value 1 and every singleton at -1.
      bool singletons_low = true;
      for (Point x = 0; x < n; ++x)
        if (f(SubsetMask::singleton(x)) != ExactComplex(-1)) singletons_low = false;
      if (v == 1 && f(SubsetMask::empty()) == ExactComplex(-1) && f(full) == ExactComplex(1) && singletons_low)
        ++r.form2_instances;
    }
  }
  std::set<std::uint64_t> expected;
  for (auto* family : {&all_form1a, &all_form1b, &all_form3})
    for (const auto& d : (*family)(g)) expected.insert(construct_topology(d, g).opens().bits());

  for (auto bits : induced) {
    r.induced.emplace_back(g, bits);
    if (!expected.contains(bits)) ++r.unmatched;
  }
  for (auto bits : expected) r.expected.emplace_back(g, bits);
  return r;
}

nlohmann::json to_json(const SurveyReport& r) {
  auto topologies = nlohmann::json::array();
  for (const auto& f : r.induced) {
    auto labels = recognize_form(trusted_topology(f));
    auto kinds = nlohmann::json::array();
    for (const auto& d : labels.labels) kinds.push_back(to_json(d));
    topologies.push_back({{"hex", to_hex(f)}, {"realizers", r.realizers.at(f.bits())}, {"forms", kinds}});
  }
  return {{"n", r.n},
          {"mode", to_string(r.mode)},
          {"solutions", r.solutions},
          {"induced_count", r.induced.size()},
          {"expected_count", r.expected.size()},
          {"unmatched", r.unmatched},
          {"form2_instances", r.form2_instances},
          {"equal", r.equal()},
          {"topologies", topologies}};
}

EnumerationReport counts_report(int n, int workers) {
  require_cap(n, 5, "counts_report");
  auto start = Clock::now();
  auto all = enumerate_topologies(n, natural_mode(n), workers);
  EnumerationReport r = all.report;
  std::uint64_t door = 0, cd = 0, occ_door = 0;
  for (const auto& t : all.topologies) {
    if (!is_door(t)) continue;
    ++door;
    if (is_connected(t)) ++cd;
    if (n >= 4 && occ_satisfied(t).satisfied) ++occ_door;
  }
  r.door = door;
  r.connected_door = cd;
  if (n >= 4) r.occ_door = occ_door;
  r.elapsed_seconds = seconds_since(start);
  return r;
}

std::string golden_dir_default() {
  if (const char* env = std::getenv("DOORLAB_GOLDEN_DIR"); env != nullptr && *env != '\0') return env;
  return DOORLAB_GOLDEN_DEFAULT;
}

namespace {
std::string golden_path(int n, const std::string& predicate, const std::string& dir) {
  return dir + "/n" + std::to_string(n) + "_" + predicate + ".json";
}
} // namespace

void write_golden(const EnumerationReport& r, const std::string& dir) {
  auto emit = [&](const std::string& predicate, const std::optional<std::uint64_t>& count) {
    if (!count) return;
    nlohmann::json j = {{"n", r.n},
                        {"predicate", predicate},
                        {"count", *count},
                        {"mode", r.mode},
                        {"scan_cardinality", r.total_families_scanned}};
    std::ofstream out(golden_path(r.n, predicate, dir));
    if (!out) throw DomainError("cannot write golden file under " + dir);
    out << j.dump(2) << "\n";
  };
  emit("topologies", r.topologies);
  emit("door", r.door);
  emit("connected_door", r.connected_door);
  emit("occ_door", r.occ_door);
}

nlohmann::json read_golden(int n, const std::string& predicate, const std::string& dir) {
  std::ifstream in(golden_path(n, predicate, dir));
  if (!in) throw DomainError("missing golden file " + golden_path(n, predicate, dir));
  return nlohmann::json::parse(in);
}

} // namespace doorlab
