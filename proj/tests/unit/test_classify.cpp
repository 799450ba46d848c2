#include "doorlab/classify.hpp"
#include "doorlab/error.hpp"
#include "doorlab/search.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace doorlab;

namespace {

bool has_label(const ClassificationLabel& c, const FormDescriptor& d) {
  return std::find(c.labels.begin(), c.labels.end(), d) != c.labels.end();
}

std::vector<FormDescriptor> every_form(GroundSet g) {
  std::vector<FormDescriptor> out = all_point_topologies(g);
  for (auto* gen : {&all_form1a, &all_form1b, &all_form3, &all_t2shape})
    for (const auto& d : (*gen)(g)) out.push_back(d);
  return out;
}

} // namespace

TEST_SUITE("classify") {

TEST_CASE("construct_topology examples") {
  GroundSet g3(3), g4(4);
  CHECK(construct_topology(ExcludedPoint{2}, g3).opens() == parse_family(g3, {{}, {0}, {1}, {0, 1}, {0, 1, 2}}));
  CHECK(construct_topology(Form3{0, 1}, g4).opens() == parse_family(g4, {{}, {2}, {3}, {2, 3}, {0, 1, 2, 3}}));
  CHECK(construct_topology(Form1A{0, Seed::principal(1)}, g3).opens() ==
        parse_family(g3, {{}, {1}, {1, 2}, {0, 1, 2}}));
  FamilyMask expected = supersets_of(g4, SubsetMask::of({0, 2}));
  expected.insert(SubsetMask::empty());
  CHECK(construct_topology(T2Shape{SubsetMask::of({0, 1}), Seed::principal(0), Seed::principal(2)}, g4).opens() ==
        expected);
}

TEST_CASE("free seeds and Form2 are unconstructible") {
  GroundSet g(4);
  CHECK_THROWS_AS(construct_topology(Form2{SubsetMask::of({0, 1}), Seed::free(), Seed::free()}, g), UnconstructibleError);
  CHECK_THROWS_AS(construct_topology(Form2{SubsetMask::of({0, 1}), Seed::principal(0), Seed::principal(2)}, g),
                  UnconstructibleError);
  CHECK_THROWS_AS(construct_topology(UltrafilterType{Seed::free()}, g), UnconstructibleError);
  CHECK_THROWS_AS(construct_topology(Form1A{0, Seed::free()}, g), UnconstructibleError);
  try {
    construct_topology(Form2{SubsetMask::of({0, 1}), Seed::free(), Seed::free()}, g);
  } catch (const UnconstructibleError& e) {
    CHECK(std::string(e.what()) == "unconstructible: free ultrafilters do not exist on finite sets");
  }
  CHECK_FALSE(is_constructible(Form2{SubsetMask::of({0, 1}), Seed::free(), Seed::free()}, g));
}

TEST_CASE("bad parameters are domain errors") {
  GroundSet g(3);
  CHECK_THROWS_AS(construct_topology(ExcludedPoint{3}, g), DomainError);
  CHECK_THROWS_AS(construct_topology(Form3{1, 1}, g), DomainError);
  CHECK_THROWS_AS(construct_topology(Form1A{0, Seed::principal(0)}, g), DomainError);
  CHECK_THROWS_AS(construct_topology(T2Shape{SubsetMask::full(g), Seed::principal(0), Seed::principal(1)}, g),
                  DomainError);
  CHECK_THROWS_AS(construct_topology(T2Shape{SubsetMask::of({0}), Seed::principal(1), Seed::principal(2)}, g),
                  DomainError);
}

TEST_CASE("classify examples") {
  GroundSet g3(3), g2(2), g4(4);
  auto inc = classify_connected_door(construct_topology(IncludedPoint{0}, g3));
  CHECK(inc.labels.size() == 1);
  CHECK(has_label(inc, IncludedPoint{0}));
  CHECK(inc.principal_ultrafilter_type);
  CHECK_FALSE(inc.free_ultrafilter_type);

  auto sierp = classify_connected_door(validate_topology(parse_family(g2, {{}, {0}, {0, 1}})));
  CHECK(sierp.labels.size() == 2);
  CHECK(has_label(sierp, IncludedPoint{0}));
  CHECK(has_label(sierp, ExcludedPoint{1}));

  auto exc = classify_connected_door(construct_topology(ExcludedPoint{3}, g4));
  CHECK(exc.labels.size() == 1);
  CHECK(has_label(exc, ExcludedPoint{3}));

  auto one = classify_connected_door(validate_topology(powerset(GroundSet(1))));
  CHECK(one.degenerate);
  CHECK(has_label(one, ExcludedPoint{0}));
  CHECK(has_label(one, IncludedPoint{0}));

  CHECK_THROWS_AS(classify_connected_door(validate_topology(powerset(g2))), PreconditionError);
}

TEST_CASE("ultrafilter type coincides with included point") {
  for (int n = 2; n <= 5; ++n) {
    GroundSet g(n);
    for (Point p = 0; p < n; ++p)
      CHECK(construct_topology(UltrafilterType{Seed::principal(p)}, g) == construct_topology(IncludedPoint{p}, g));
  }
}

TEST_CASE("recognize examples") {
  GroundSet g4(4), g3(3);
  auto f3 = recognize_form(construct_topology(Form3{0, 1}, g4));
  CHECK(has_label(f3, Form3{0, 1}));
  CHECK(has_label(f3, Form3{1, 0}));

  FamilyMask sup(g4);
  sup = supersets_of(g4, SubsetMask::of({0, 2}));
  sup.insert(SubsetMask::empty());
  auto t2 = recognize_form(validate_topology(sup));
  std::size_t t2_labels = 0;
  for (const auto& d : t2.labels) {
    const auto* x = std::get_if<T2Shape>(&d);
    if (!x) continue;
    ++t2_labels;
    CHECK(x->part.contains(0) != x->part.contains(2));
  }
  // Parts separating 0 from 2: 4 containing 0 and not 2, 4 the other way round.
  CHECK(t2_labels == 8);

  CHECK(recognize_form(validate_topology(parse_family(g3, {{}, {0, 1, 2}}))).labels.empty());
}

TEST_CASE("round trip: recognition contains the constructing descriptor") {
  for (int n = 1; n <= 5; ++n) {
    GroundSet g(n);
    for (const auto& d : every_form(g)) {
      Topology t = construct_topology(d, g);
      if (std::holds_alternative<ExcludedPoint>(d) || std::holds_alternative<IncludedPoint>(d)) {
        CHECK(has_label(classify_connected_door(t), d));
      } else {
        CHECK(has_label(recognize_form(t), d));
      }
    }
  }
}

TEST_CASE("Form1B and Form3 share a function but not a topology") {
  GroundSet g(4);
  auto b = construct_topology(Form1B{0, Seed::principal(1)}, g);
  auto three = construct_topology(Form3{0, 1}, g);
  CHECK(b != three);
  FamilyMask expected = supersets_of(g, SubsetMask::of({0, 1}));
  expected.insert(SubsetMask::empty());
  CHECK(b.opens() == expected);
}

TEST_CASE("connected door spaces are exactly the point topologies") {
  for (int n = 2; n <= 5; ++n) {
    GroundSet g(n);
    std::set<std::uint64_t> found, built;
    for (const auto& t : enumerate_connected_door(n)) found.insert(t.opens().bits());
    for (const auto& d : all_point_topologies(g)) built.insert(construct_topology(d, g).opens().bits());
    CHECK(found == built);
    CHECK(found.size() == (n == 2 ? 2u : 2u * n));
  }
}

TEST_CASE("descriptor json round trip") {
  for (int n = 2; n <= 4; ++n) {
    GroundSet g(n);
    for (const auto& d : every_form(g)) CHECK(descriptor_from_json(to_json(d)) == d);
  }
  FormDescriptor f2 = Form2{SubsetMask::of({0, 1}), Seed::free(), Seed::free()};
  CHECK(descriptor_from_json(to_json(f2)) == f2);
  CHECK(to_json(FormDescriptor{Form3{0, 1}}).dump() == R"({"a":0,"b":1,"kind":"Form3"})");
  CHECK_THROWS_AS(descriptor_from_json(nlohmann::json{{"kind", "Nope"}}), DomainError);
}

}
