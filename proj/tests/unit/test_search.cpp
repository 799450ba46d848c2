#include "doorlab/error.hpp"
#include "doorlab/search.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <set>

using namespace doorlab;

namespace {

std::set<std::uint64_t> bits_of(const std::vector<Topology>& ts) {
  std::set<std::uint64_t> out;
  for (const auto& t : ts) out.insert(t.opens().bits());
  return out;
}

SetFunction indicator_difference(int n, Point plus, Point minus) {
  return SetFunction::on_powerset(GroundSet(n), false, [=](SubsetMask s) {
    return ExactComplex((s.contains(plus) ? 1 : 0) - (s.contains(minus) ? 1 : 0));
  });
}

} // namespace

TEST_SUITE("search") {

TEST_CASE("topology totals in both modes") {
  const std::size_t totals[] = {0, 1, 4, 29, 355, 6942};
  for (int n = 1; n <= 5; ++n) {
    auto c = enumerate_topologies(n, TopologyMode::ClosureDfs);
    CHECK(c.topologies.size() == totals[n]);
    CHECK(*c.report.topologies == totals[n]);
    if (n <= 4) {
      auto r = enumerate_topologies(n, TopologyMode::RawScan);
      CHECK(r.topologies == c.topologies);
      CHECK(r.report.total_families_scanned == (std::uint64_t{1} << (1u << n)));
    }
  }
  CHECK_THROWS_AS(enumerate_topologies(5, TopologyMode::RawScan), CapabilityError);
  CHECK_THROWS_AS(enumerate_topologies(7, TopologyMode::ClosureDfs), CapabilityError);
}

TEST_CASE("n = 6 total") {
  CHECK(enumerate_topologies(6, TopologyMode::ClosureDfs).topologies.size() == 209527);
}

TEST_CASE("connected door counts") {
  CHECK(enumerate_connected_door(1).size() == 1);
  CHECK(enumerate_connected_door(2).size() == 2);
  CHECK(enumerate_connected_door(3).size() == 6);
  CHECK(enumerate_connected_door(4).size() == 8);
  CHECK(enumerate_connected_door(5).size() == 10);
  CHECK(enumerate_connected_door(6).size() == 12);
  try {
    enumerate_connected_door(7);
    FAIL("expected a capability error");
  } catch (const CapabilityError& e) {
    CHECK(std::string(e.what()).find("n exceeds cap 6") != std::string::npos);
  }
}

TEST_CASE("occ door topologies") {
  auto small = enumerate_occ_door(3);
  CHECK(small.capability_note);
  CHECK(small.topologies.empty());
  for (int n : {4, 5}) {
    auto r = enumerate_occ_door(n);
    CHECK_FALSE(r.capability_note);
    CHECK(bits_of(r.topologies) == bits_of(enumerate_connected_door(n)));
  }
}

TEST_CASE("solution examples") {
  auto two = enumerate_solutions(3, {0, 1}, Equation::Eq1Disjoint, SolveMode::Brute);
  CHECK(two.size() == 3);
  for (Point p = 0; p < 3; ++p) {
    auto ind = SetFunction::on_powerset(GroundSet(3), false, [p](SubsetMask s) { return ExactComplex(s.contains(p) ? 1 : 0); });
    CHECK(std::find(two.begin(), two.end(), ind) != two.end());
  }
  CHECK(enumerate_solutions(3, {1, 2}, Equation::Eq1Disjoint, SolveMode::Brute).empty());

  auto t1 = enumerate_solutions(4, {-1, 0, 1}, Equation::Eq1Disjoint, SolveMode::Brute);
  CHECK(t1.size() == 12);
  for (Point p = 0; p < 4; ++p)
    for (Point q = 0; q < 4; ++q)
      if (p != q) CHECK(std::find(t1.begin(), t1.end(), indicator_difference(4, q, p)) != t1.end());

  auto t2 = enumerate_solutions(4, {0, 1, 2}, Equation::Eq1Disjoint, SolveMode::Brute);
  CHECK(t2.size() == 6);
  CHECK(enumerate_solutions(4, {0, 1, 3}, Equation::Eq1Disjoint, SolveMode::Brute).empty());
  CHECK(enumerate_solutions(4, {1, 2, 3}, Equation::Eq1Disjoint, SolveMode::Brute).empty());
  CHECK(enumerate_solutions(3, {1, 2, 3}, Equation::Eq1Disjoint, SolveMode::Brute).size() == 1);
  CHECK(enumerate_solutions(2, {1, 2}, Equation::Eq1Disjoint, SolveMode::Brute).size() == 1);
}

TEST_CASE("solver caps and value-set validation") {
  CHECK_THROWS_AS(enumerate_solutions(5, {0, 1}, Equation::Eq2, SolveMode::Brute), CapabilityError);
  CHECK_NOTHROW(enumerate_solutions(5, {0, 1}, Equation::Eq2, SolveMode::Modular));
  CHECK_THROWS_AS(enumerate_solutions(3, {0}, Equation::Eq2, SolveMode::Brute), DomainError);
  CHECK_THROWS_AS(enumerate_solutions(3, {0, 1, 2, 3}, Equation::Eq2, SolveMode::Brute), DomainError);
}

TEST_CASE("brute and modular modes agree") {
  for (int n = 1; n <= 4; ++n)
    for (Equation eq : {Equation::Eq2, Equation::Eq1Disjoint})
      for (const auto& vs : std::vector<std::vector<ExactComplex>>{
               {0, 1}, {-1, 1}, {-1, 0, 1}, {0, 1, 2}, {0, Rational(1, 2), 1}, {ExactComplex(0, -1), 0, ExactComplex(0, 1)}})
        CHECK(enumerate_solutions(n, vs, eq, SolveMode::Brute) == enumerate_solutions(n, vs, eq, SolveMode::Modular));
}

TEST_CASE("modular mode at n = 5, 6 follows the closed forms") {
  for (int n : {5, 6}) {
    CHECK(enumerate_solutions(n, {0, 1}, Equation::Eq1Disjoint, SolveMode::Modular).size() == static_cast<std::size_t>(n));
    CHECK(enumerate_solutions(n, {-1, 0, 1}, Equation::Eq1Disjoint, SolveMode::Modular).size() ==
          static_cast<std::size_t>(n * (n - 1)));
    CHECK(enumerate_solutions(n, {0, 1, 2}, Equation::Eq1Disjoint, SolveMode::Modular).size() ==
          static_cast<std::size_t>(n * (n - 1) / 2));
  }
}

TEST_CASE("worker count does not change results") {
  auto base = enumerate_solutions(4, {-1, 0, 1}, Equation::Eq2, SolveMode::Brute, 1);
  for (int w : {2, 3, 8}) CHECK(enumerate_solutions(4, {-1, 0, 1}, Equation::Eq2, SolveMode::Brute, w) == base);
  auto t1 = enumerate_topologies(5, TopologyMode::ClosureDfs, 1);
  auto t3 = enumerate_topologies(5, TopologyMode::ClosureDfs, 3);
  CHECK(t1.topologies == t3.topologies);
  CHECK(to_json(t1.report) == to_json(t3.report));
}

TEST_CASE("induced topology survey") {
  auto s3 = induced_topology_survey(3, SolveMode::Brute);
  CHECK(s3.equal());
  CHECK(s3.induced.size() == 12);
  CHECK(s3.form2_instances == 0);
  auto s4 = induced_topology_survey(4, SolveMode::Modular);
  CHECK(s4.equal());
  CHECK(s4.form2_instances == 0);
  auto s4b = induced_topology_survey(4, SolveMode::Brute);
  CHECK(s4b.induced == s4.induced);
  CHECK(s4b.realizers == s4.realizers);
  CHECK(induced_topology_survey(5, SolveMode::Modular).equal());
}

TEST_CASE("counts report") {
  auto r1 = counts_report(1);
  CHECK(*r1.topologies == 1);
  CHECK(*r1.connected_door == 1);
  CHECK(to_json(r1)["degenerate"] == true);
  auto r2 = counts_report(2);
  CHECK(*r2.topologies == 4);
  CHECK(*r2.door == 3);
  CHECK(*r2.connected_door == 2);
  CHECK_FALSE(r2.occ_door);
  auto r4 = counts_report(4);
  CHECK(*r4.occ_door == *r4.connected_door);
  CHECK_THROWS_AS(counts_report(6), CapabilityError);
}

TEST_CASE("counts match the frozen golden files") {
  const std::string dir = DOORLAB_GOLDEN_DIR_TEST;
  for (int n = 1; n <= 5; ++n) {
    auto r = counts_report(n);
    auto check = [&](const std::string& predicate, const std::optional<std::uint64_t>& count) {
      if (!count) return;
      auto g = read_golden(n, predicate, dir);
      CHECK(g["count"].get<std::uint64_t>() == *count);
      CHECK(g["mode"] == r.mode);
      CHECK(g["scan_cardinality"].get<std::uint64_t>() == r.total_families_scanned);
      CHECK(g["n"] == n);
    };
    check("topologies", r.topologies);
    check("door", r.door);
    check("connected_door", r.connected_door);
    check("occ_door", r.occ_door);
  }
}

TEST_CASE("golden write and read round trip") {
  auto dir = std::filesystem::temp_directory_path() / "doorlab_golden_test";
  std::filesystem::create_directories(dir);
  auto r = counts_report(3);
  write_golden(r, dir.string());
  auto j = read_golden(3, "topologies", dir.string());
  CHECK(j["count"] == 29);
  CHECK(j["predicate"] == "topologies");
  CHECK_THROWS_AS(read_golden(3, "occ_door", dir.string()), DomainError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("golden directory override") {
  setenv("DOORLAB_GOLDEN_DIR", "/tmp/elsewhere", 1);
  CHECK(golden_dir_default() == "/tmp/elsewhere");
  unsetenv("DOORLAB_GOLDEN_DIR");
  CHECK(golden_dir_default() != "/tmp/elsewhere");
}

}
