#include "doorlab/error.hpp"
#include "doorlab/search.hpp"
#include "doorlab/topology.hpp"

#include <doctest.h>

#include <string>

using namespace doorlab;

namespace {

Topology top(int n, const std::vector<std::vector<Point>>& sets) { return validate_topology(parse_family(GroundSet(n), sets)); }

std::string error_of(int n, const std::vector<std::vector<Point>>& sets) {
  try {
    validate_topology(parse_family(GroundSet(n), sets));
  } catch (const DomainError& e) {
    return e.what();
  }
  return "";
}

// Definition-level checks, independent of the library's implementations.
bool naive_connected(const Topology& t) {
  GroundSet g = t.ground();
  for (std::uint32_t s = 1; s < g.full_bits(); ++s)
    if (t.is_open(SubsetMask(s)) && t.is_closed(SubsetMask(s))) return false;
  return true;
}

bool naive_door(const Topology& t) {
  for (std::uint32_t s = 0; s < t.ground().subset_count(); ++s)
    if (!t.is_open(SubsetMask(s)) && !t.is_closed(SubsetMask(s))) return false;
  return true;
}

} // namespace

TEST_SUITE("topology") {

TEST_CASE("validate_topology examples") {
  CHECK_NOTHROW(top(2, {{}, {0}, {0, 1}}));
  CHECK(error_of(2, {{}, {0}, {1}}).find("X missing") != std::string::npos);
  CHECK(error_of(3, {{}, {0}, {1}, {0, 1, 2}}).find("{0} u {1} = {0,1} missing") != std::string::npos);
  CHECK(error_of(2, {{0}, {0, 1}}).find("missing") != std::string::npos);
}

TEST_CASE("space_report examples") {
  auto s = space_report(top(2, {{}, {0}, {0, 1}}));
  CHECK(s.connected);
  CHECK(s.door);
  CHECK(s.connected_door);

  auto d = space_report(validate_topology(powerset(GroundSet(2))));
  CHECK_FALSE(d.connected);
  CHECK(d.door);
  CHECK_FALSE(d.connected_door);
  CHECK(d.t1);

  auto i = space_report(top(3, {{}, {0, 1, 2}}));
  CHECK(i.connected);
  CHECK_FALSE(i.door);
}

TEST_CASE("one point space is connected door") {
  auto s = space_report(top(1, {{}, {0}}));
  CHECK(s.connected_door);
}

TEST_CASE("predicates agree with definitions on all small topologies") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& t : enumerate_topologies(n, TopologyMode::RawScan).topologies) {
      auto s = space_report(t);
      CHECK(s.connected == naive_connected(t));
      CHECK(s.door == naive_door(t));
      CHECK(s.connected_door == (naive_connected(t) && naive_door(t)));
      CHECK(is_connected_door(t) == s.connected_door);
    }
  }
}

TEST_CASE("occ examples") {
  GroundSet g4(4);
  auto discrete = occ_satisfied(validate_topology(powerset(g4)));
  CHECK_FALSE(discrete.satisfied);
  REQUIRE(discrete.witness);
  CHECK((*discrete.witness)[0] == SubsetMask::of({0}));
  CHECK((*discrete.witness)[1] == SubsetMask::of({1}));
  CHECK((*discrete.witness)[2] == SubsetMask::of({2}));
  CHECK((*discrete.witness)[3] == SubsetMask::of({3}));

  FamilyMask excluded(g4);
  for (std::uint32_t s = 0; s < 8; ++s) excluded.insert(SubsetMask(s));
  excluded.insert(SubsetMask::full(g4));
  CHECK(occ_satisfied(validate_topology(excluded)).satisfied);

  for (const auto& t : enumerate_topologies(3, TopologyMode::RawScan).topologies) CHECK(occ_satisfied(t).satisfied);
}

TEST_CASE("occ witness is a genuine violation") {
  for (const auto& t : enumerate_topologies(4, TopologyMode::RawScan).topologies) {
    auto r = occ_satisfied(t);
    if (r.satisfied) continue;
    const auto& w = *r.witness;
    for (int i = 0; i < 4; ++i) {
      CHECK_FALSE(w[i].is_empty());
      for (int j = i + 1; j < 4; ++j) CHECK(w[i].disjoint(w[j]));
    }
    CHECK(t.is_open(w[0]));
    CHECK(t.is_open(w[1]));
    CHECK(t.is_closed(w[2]));
    CHECK(t.is_closed(w[3]));
  }
}

TEST_CASE("lemma1 examples") {
  auto included0 = top(3, {{}, {0}, {0, 1}, {0, 2}, {0, 1, 2}});
  CHECK(lemma1_check(included0).holds);
  CHECK(included0.is_open(SubsetMask::of({0, 2})));
  CHECK(included0.is_closed(SubsetMask::of({1, 2})));

  GroundSet g4(4);
  FamilyMask excluded(g4);
  for (std::uint32_t s = 0; s < 8; ++s) excluded.insert(SubsetMask(s));
  excluded.insert(SubsetMask::full(g4));
  CHECK(lemma1_check(validate_topology(excluded)).holds);

  CHECK_THROWS_AS(lemma1_check(validate_topology(powerset(GroundSet(2)))), PreconditionError);
}

TEST_CASE("connected door spaces satisfy both lemmas up to n = 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_connected_door(n)) {
      CHECK(lemma1_check(t).holds);
      CHECK(occ_satisfied(t).satisfied);
    }
  }
}

TEST_CASE("closed singleton properties") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& t : enumerate_connected_door(n)) {
      auto s = space_report(t);
      CHECK_FALSE(s.closed_singletons.empty());
      bool two_open = s.open_singletons.size() >= 2;
      bool one_closed = s.closed_singletons.size() == 1;
      if (n >= 3) CHECK(two_open == one_closed);
    }
  }
  // Two points: the Sierpinski space has one open point and one closed point,
  // so the equivalence does not extend down to n = 2.
  auto s = space_report(top(2, {{}, {0}, {0, 1}}));
  CHECK(s.open_singletons.size() == 1);
  CHECK(s.closed_singletons.size() == 1);
}

TEST_CASE("no T1 connected door space on a finite set") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& t : enumerate_connected_door(n)) CHECK_FALSE(space_report(t).t1);
}

TEST_CASE("json shape") {
  auto j = to_json(top(2, {{}, {0}, {0, 1}}));
  CHECK(j["open_count"] == 3);
  CHECK(j["hex"] == "b");
  CHECK(j["opens"].dump() == "[[],[0],[0,1]]");
}

}
