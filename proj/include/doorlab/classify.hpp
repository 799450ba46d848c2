#pragma once

#include "doorlab/set_core.hpp"
#include "doorlab/topology.hpp"

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace doorlab {

// Symbolic ultrafilter parameter: principal at a point, or free. A free seed
// can be written down but never constructed on a finite set.
struct Seed {
  std::optional<Point> principal_at;

  static Seed principal(Point p) { return Seed{p}; }
  static Seed free() { return Seed{}; }
  bool is_free() const { return !principal_at.has_value(); }
  friend auto operator<=>(const Seed&, const Seed&) = default;
};

// {A : a not in A} u {X}
struct ExcludedPoint {
  Point a;
  friend auto operator<=>(const ExcludedPoint&, const ExcludedPoint&) = default;
};
// {A : a in A} u {empty}
struct IncludedPoint {
  Point a;
  friend auto operator<=>(const IncludedPoint&, const IncludedPoint&) = default;
};
// {empty} u F for an ultrafilter F on X.
struct UltrafilterType {
  Seed seed;
  friend auto operator<=>(const UltrafilterType&, const UltrafilterType&) = default;
};
// {empty, X} u F' with F' an ultrafilter on X \ {a}.
struct Form1A {
  Point a;
  Seed seed;
  friend auto operator<=>(const Form1A&, const Form1A&) = default;
};
// {empty, X} u {{a} u F : F in F'} with F' an ultrafilter on X \ {a}.
struct Form1B {
  Point a;
  Seed seed;
  friend auto operator<=>(const Form1B&, const Form1B&) = default;
};
// Unions of members of two free ultrafilters on A and X \ A.
struct Form2 {
  SubsetMask part;
  Seed first;
  Seed second;
  friend auto operator<=>(const Form2&, const Form2&) = default;
};
// {empty, X} u P(X \ {a, b}), a != b.
struct Form3 {
  Point a;
  Point b;
  friend auto operator<=>(const Form3&, const Form3&) = default;
};
// {empty, X} u {F' u F'' : F' in F', F'' in F''} with F' on A, F'' on X \ A.
struct T2Shape {
  SubsetMask part;
  Seed first;
  Seed second;
  friend auto operator<=>(const T2Shape&, const T2Shape&) = default;
};

using FormDescriptor =
    std::variant<ExcludedPoint, IncludedPoint, UltrafilterType, Form1A, Form1B, Form2, Form3, T2Shape>;

struct ClassificationLabel {
  std::vector<FormDescriptor> labels;
  // |X| = 1: both point topologies coincide with the only topology.
  bool degenerate = false;
  // T \ {empty} is a free ultrafilter. Never true on a finite set.
  bool free_ultrafilter_type = false;
  // T \ {empty} is a principal ultrafilter (coincides with IncludedPoint).
  bool principal_ultrafilter_type = false;
};

// Throws UnconstructibleError for free seeds and Form2, DomainError for
// out-of-range or inconsistent parameters.
Topology construct_topology(const FormDescriptor& d, GroundSet g);

// Descriptors are constructible on g (parameters in range, no free seed).
bool is_constructible(const FormDescriptor& d, GroundSet g);

// Matching point-topology labels of a connected-door topology. Throws
// PreconditionError otherwise.
ClassificationLabel classify_connected_door(const Topology& t);

// Every Form1A / Form1B / Form3 / T2Shape descriptor (principal seeds) whose
// construction equals t, in canonical descriptor order.
ClassificationLabel recognize_form(const Topology& t);

// Every constructible descriptor of the given kinds on g, canonical order.
std::vector<FormDescriptor> all_form1a(GroundSet g);
std::vector<FormDescriptor> all_form1b(GroundSet g);
std::vector<FormDescriptor> all_form3(GroundSet g);
std::vector<FormDescriptor> all_t2shape(GroundSet g);
std::vector<FormDescriptor> all_point_topologies(GroundSet g);

std::string kind_name(const FormDescriptor& d);
nlohmann::json to_json(const FormDescriptor& d);
FormDescriptor descriptor_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ClassificationLabel& c);

} // namespace doorlab
