#include "doorlab/error.hpp"
#include "doorlab/set_core.hpp"

#include <doctest.h>

#include <string>

using namespace doorlab;

TEST_SUITE("set_core") {

TEST_CASE("ground set bounds") {
  CHECK_THROWS_AS(GroundSet(0), DomainError);
  CHECK_THROWS_AS(GroundSet(7), CapabilityError);
  try {
    GroundSet g(7);
  } catch (const CapabilityError& e) {
    CHECK(std::string(e.what()).find("n exceeds cap 6") != std::string::npos);
  }
  CHECK(GroundSet(6).subset_count() == 64);
}

TEST_CASE("parse_family examples") {
  GroundSet g2(2);
  auto sierpinski = parse_family(g2, {{}, {0}, {0, 1}});
  CHECK(sierpinski.size() == 3);
  CHECK(sierpinski.contains(SubsetMask(0b00)));
  CHECK(sierpinski.contains(SubsetMask(0b01)));
  CHECK(sierpinski.contains(SubsetMask(0b11)));

  auto dedup = parse_family(GroundSet(3), {{0, 1}, {0, 1}});
  CHECK(dedup.size() == 1);
  CHECK(dedup.contains(SubsetMask(0b011)));

  try {
    parse_family(g2, {{5}});
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("point 5 out of range") != std::string::npos);
  }
}

TEST_CASE("restrict_family examples") {
  GroundSet g(3);
  auto up0 = supersets_of(g, SubsetMask::of({0}));
  auto r = restrict_family(up0, SubsetMask::of({0, 1}));
  // Re-indexed onto {0,1}: {0} -> {0}, {0,1} -> {0,1}.
  CHECK(r.ground().size() == 2);
  CHECK(r == parse_family(GroundSet(2), {{0}, {0, 1}}));

  auto p2 = restrict_family(powerset(g), SubsetMask::of({2}));
  CHECK(p2.ground().size() == 1);
  CHECK(p2 == powerset(GroundSet(1)));

  FamilyMask only_x(g);
  only_x.insert(SubsetMask::full(g));
  CHECK(restrict_family(only_x, SubsetMask::of({0, 1})).empty());
}

TEST_CASE("restricting to X is the identity") {
  for (int n = 1; n <= 3; ++n) {
    GroundSet g(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.subset_count()); ++bits) {
      FamilyMask f(g, bits);
      CHECK(restrict_family(f, SubsetMask::full(g)) == f);
    }
  }
}

TEST_CASE("compress and expand are inverse") {
  GroundSet g(5);
  for (std::uint32_t a = 1; a < g.subset_count(); ++a)
    for (std::uint32_t s = 0; s < g.subset_count(); ++s) {
      SubsetMask sub(s & a);
      SubsetMask c = compress_to(sub, SubsetMask(a));
      CHECK(c.size() == sub.size());
      CHECK(expand_from(c, SubsetMask(a)) == sub);
    }
}

TEST_CASE("powerset sizes") {
  CHECK(powerset(GroundSet(1)) == parse_family(GroundSet(1), {{}, {0}}));
  for (int n = 1; n <= 6; ++n) CHECK(powerset(GroundSet(n)).size() == (1 << n));
}

TEST_CASE("JSON and hex round trips, exhaustive to n = 3") {
  for (int n = 1; n <= 3; ++n) {
    GroundSet g(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.subset_count()); ++bits) {
      FamilyMask f(g, bits);
      CHECK(family_from_json(g, to_json(f)) == f);
      CHECK(family_from_hex(g, to_hex(f)) == f);
    }
  }
}

TEST_CASE("serialization order and format") {
  GroundSet g(3);
  auto f = parse_family(g, {{0, 1, 2}, {2}, {0, 2}, {}, {1}, {0, 1}});
  CHECK(to_json(f).dump() == "[[],[1],[2],[0,1],[0,2],[0,1,2]]");
  CHECK(to_hex(powerset(GroundSet(2))) == "f");
  CHECK(to_hex(FamilyMask(GroundSet(1), 0b11)) == "3");
  CHECK(to_hex(FamilyMask(GroundSet(3), 0x81)) == "81");
  CHECK(to_hex(FamilyMask(GroundSet(4), 0x8001)) == "8001");
  CHECK(to_string(SubsetMask::of({0, 2})) == "{0,2}");
  CHECK_THROWS_AS(family_from_hex(g, "zz"), DomainError);
}

TEST_CASE("subset orderings") {
  CHECK(card_lex_less(SubsetMask::of({2}), SubsetMask::of({0, 1})));
  CHECK(card_lex_less(SubsetMask::of({0, 2}), SubsetMask::of({1, 2})));
  // {0,3} (mask 9) vs {1,2} (mask 6): lexicographic puts {0,3} first, mask order {1,2}.
  CHECK(card_lex_less(SubsetMask::of({0, 3}), SubsetMask::of({1, 2})));
  CHECK(card_mask_less(SubsetMask::of({1, 2}), SubsetMask::of({0, 3})));
}

TEST_CASE("supersets and subsets") {
  GroundSet g(4);
  CHECK(supersets_of(g, SubsetMask::of({0, 1})).size() == 4);
  CHECK(subsets_of(g, SubsetMask::of({0, 1, 2})).size() == 8);
  CHECK(supersets_of(g, SubsetMask::empty()) == powerset(g));
}

}
