#include "doorlab/error.hpp"
#include "doorlab/filters.hpp"

#include <doctest.h>

#include <set>
#include <string>

using namespace doorlab;

namespace {

// Brute oracle: every subfamily of sigma that meets the ultrafilter definition.
std::set<std::uint64_t> brute_ultrafilters(const Algebra& sigma) {
  GroundSet g = sigma.ground();
  std::set<std::uint64_t> out;
  std::uint64_t sb = sigma.members().bits();
  auto members = sigma.members().members();
  for (std::uint64_t sub = sb;; sub = (sub - 1) & sb) {
    FamilyMask f(g, sub);
    bool ok = !f.empty() && !f.contains(SubsetMask::empty());
    for (auto u : f.members())
      for (auto v : f.members())
        if (!f.contains(u & v)) ok = false;
    for (auto u : f.members())
      for (auto a : members)
        if (u.subset_of(a) && !f.contains(a)) ok = false;
    for (auto u : members)
      if (f.contains(u) == f.contains(u.complement(g))) ok = false;
    if (ok) out.insert(sub);
    if (sub == 0) break;
  }
  return out;
}

std::size_t bell(int n) {
  static const std::size_t b[] = {1, 1, 2, 5, 15, 52, 203};
  return b[n];
}

} // namespace

TEST_SUITE("filters") {

TEST_CASE("is_algebra examples") {
  GroundSet g3(3);
  CHECK(is_algebra(powerset(g3)));
  CHECK(is_algebra(parse_family(g3, {{}, {0, 1}, {2}, {0, 1, 2}})));
  CHECK_FALSE(is_algebra(parse_family(GroundSet(2), {{}, {0}, {0, 1}})));
  CHECK_THROWS_AS(Algebra(parse_family(GroundSet(2), {{}, {0}, {0, 1}})), DomainError);
}

TEST_CASE("algebra_from_partition examples") {
  GroundSet g(3);
  CHECK(algebra_from_partition(g, {SubsetMask::of({0}), SubsetMask::of({1}), SubsetMask::of({2})}) ==
        powerset_algebra(g));
  CHECK(algebra_from_partition(g, {SubsetMask::of({0, 1}), SubsetMask::of({2})}).members() ==
        parse_family(g, {{}, {0, 1}, {2}, {0, 1, 2}}));
  try {
    algebra_from_partition(g, {SubsetMask::of({0}), SubsetMask::of({0, 1})});
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("point 0 covered twice") != std::string::npos);
  }
  CHECK_THROWS_AS(algebra_from_partition(g, {SubsetMask::of({0})}), DomainError);
}

TEST_CASE("atoms recover the partition") {
  GroundSet g(4);
  auto a = algebra_from_partition(g, {SubsetMask::of({0, 2}), SubsetMask::of({1}), SubsetMask::of({3})});
  auto atoms = a.atoms();
  REQUIRE(atoms.size() == 3);
  CHECK(atoms[0] == SubsetMask::of({1}));
  CHECK(atoms[1] == SubsetMask::of({0, 2}));
  CHECK(atoms[2] == SubsetMask::of({3}));
}

TEST_CASE("all_algebras counts match the Bell numbers") {
  for (int n = 1; n <= 5; ++n) {
    auto all = all_algebras(GroundSet(n));
    CHECK(all.size() == bell(n));
    std::set<std::uint64_t> distinct;
    for (const auto& a : all) {
      CHECK(is_algebra(a.members()));
      distinct.insert(a.members().bits());
    }
    CHECK(distinct.size() == all.size());
  }
}

TEST_CASE("is_algebra agrees with brute enumeration at n = 3") {
  GroundSet g(3);
  std::set<std::uint64_t> from_partitions;
  for (const auto& a : all_algebras(g)) from_partitions.insert(a.members().bits());
  for (std::uint64_t bits = 0; bits < 256; ++bits)
    CHECK(is_algebra(FamilyMask(g, bits)) == from_partitions.contains(bits));
}

TEST_CASE("ultrafilter examples") {
  GroundSet g3(3);
  auto p = powerset_algebra(g3);
  CHECK(is_ultrafilter(supersets_of(g3, SubsetMask::of({1})), p));
  FamilyMask only_x(g3);
  only_x.insert(SubsetMask::full(g3));
  CHECK_FALSE(is_ultrafilter(only_x, p));
  CHECK(is_filter(only_x, p));

  auto block = algebra_from_partition(g3, {SubsetMask::of({0, 1}), SubsetMask::of({2})});
  CHECK(is_ultrafilter(parse_family(g3, {{0, 1}, {0, 1, 2}}), block));
  CHECK_THROWS_AS(is_ultrafilter(parse_family(g3, {{0}, {0, 1, 2}}), block), DomainError);
}

TEST_CASE("principal ultrafilter examples") {
  GroundSet g2(2), g3(3);
  CHECK(principal_ultrafilter(0, powerset_algebra(g2)).members == parse_family(g2, {{0}, {0, 1}}));
  CHECK(principal_ultrafilter(2, powerset_algebra(g3)).members.size() == 4);
  auto block = algebra_from_partition(g3, {SubsetMask::of({0, 1}), SubsetMask::of({2})});
  auto u = principal_ultrafilter(0, block);
  CHECK(u.members == parse_family(g3, {{0, 1}, {0, 1, 2}}));
  CHECK_FALSE(u.is_free);
}

TEST_CASE("enumerate_ultrafilters examples") {
  auto u3 = enumerate_ultrafilters(powerset_algebra(GroundSet(3)));
  CHECK(u3.size() == 3);
  for (const auto& u : u3) CHECK_FALSE(u.is_free);
  auto u4 = enumerate_ultrafilters(powerset_algebra(GroundSet(4)));
  CHECK(u4.size() == 4);
  auto two = enumerate_ultrafilters(algebra_from_partition(GroundSet(4), {SubsetMask::of({0, 1}), SubsetMask::of({2, 3})}));
  CHECK(two.size() == 2);
}

TEST_CASE("ultrafilters equal the brute oracle on every algebra up to n = 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& sigma : all_algebras(GroundSet(n))) {
      auto oracle = brute_ultrafilters(sigma);
      std::set<std::uint64_t> found;
      for (const auto& u : enumerate_ultrafilters(sigma)) {
        found.insert(u.members.bits());
        CHECK_FALSE(u.is_free);
        CHECK(is_ultrafilter(u.members, sigma));
      }
      CHECK(found == oracle);
      CHECK(oracle.size() == sigma.atoms().size());
      for (std::uint64_t bits : oracle) CHECK(is_ultrafilter(FamilyMask(GroundSet(n), bits), sigma));
    }
  }
}

TEST_CASE("every ultrafilter on P(X) is principal at exactly one point") {
  for (int n = 1; n <= 4; ++n) {
    GroundSet g(n);
    auto p = powerset_algebra(g);
    for (std::uint64_t bits : brute_ultrafilters(p)) {
      int hits = 0;
      for (Point x = 0; x < n; ++x)
        if (principal_ultrafilter(x, p).members.bits() == bits) ++hits;
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("exactly one of U and its complement") {
  for (int n = 1; n <= 4; ++n) {
    GroundSet g(n);
    for (const auto& sigma : all_algebras(g))
      for (const auto& u : enumerate_ultrafilters(sigma))
        sigma.members().for_each([&](SubsetMask s) { CHECK(u.members.contains(s) != u.members.contains(s.complement(g))); });
  }
}

TEST_CASE("restriction of a principal ultrafilter") {
  GroundSet g(4);
  auto u = principal_ultrafilter(1, powerset_algebra(g)).members;
  SubsetMask a = SubsetMask::of({1, 3});
  auto r = restrict_family(u, a);
  // Point 1 is index 0 on A.
  CHECK(r == principal_ultrafilter(0, powerset_algebra(GroundSet(2))).members);
}

TEST_CASE("filter json") {
  auto u = principal_ultrafilter(0, powerset_algebra(GroundSet(2)));
  auto j = to_json(u);
  CHECK(j["principal_at"] == 0);
  CHECK(j["is_free"] == false);
  CHECK(j["members"].dump() == "[[0],[0,1]]");
}

TEST_CASE("total intersection") {
  GroundSet g(3);
  CHECK(total_intersection(FamilyMask(g)) == SubsetMask::full(g));
  CHECK(total_intersection(parse_family(g, {{0, 1}, {1, 2}})) == SubsetMask::of({1}));
}

}
