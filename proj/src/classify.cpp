#include "doorlab/classify.hpp"

#include "doorlab/error.hpp"
#include "doorlab/filters.hpp"

#include <algorithm>

namespace doorlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_point(Point p, GroundSet g, const char* what) {
  if (p < 0 || p >= g.size())
    throw DomainError(std::string(what) + " " + std::to_string(p) + " out of range");
}

// Members of the principal ultrafilter on `domain` seeded at s.
FamilyMask seed_family(const Seed& s, SubsetMask domain, GroundSet g) {
  if (s.is_free()) throw UnconstructibleError();
  Point p = *s.principal_at;
  check_point(p, g, "seed");
  if (!domain.contains(p)) throw DomainError("seed " + std::to_string(p) + " lies outside the ultrafilter's domain");
  FamilyMask f(g);
  for (std::uint32_t bits = 0; bits < g.subset_count(); ++bits) {
    SubsetMask u(bits);
    if (u.subset_of(domain) && u.contains(p)) f.insert(u);
  }
  return f;
}

FamilyMask trivial(GroundSet g) {
  FamilyMask f(g);
  f.insert(SubsetMask::empty());
  f.insert(SubsetMask::full(g));
  return f;
}

FamilyMask build(const FormDescriptor& d, GroundSet g) {
  SubsetMask full = SubsetMask::full(g);
  return std::visit(
      overloaded{
          [&](const ExcludedPoint& x) {
            check_point(x.a, g, "point");
            FamilyMask f = subsets_of(g, full - SubsetMask::singleton(x.a));
            f.insert(full);
            return f;
          },
          [&](const IncludedPoint& x) {
            check_point(x.a, g, "point");
            FamilyMask f = supersets_of(g, SubsetMask::singleton(x.a));
            f.insert(SubsetMask::empty());
            return f;
          },
          [&](const UltrafilterType& x) {
            FamilyMask f = seed_family(x.seed, full, g);
            f.insert(SubsetMask::empty());
            return f;
          },
          [&](const Form1A& x) {
            check_point(x.a, g, "point");
            return trivial(g) | seed_family(x.seed, full - SubsetMask::singleton(x.a), g);
          },
          [&](const Form1B& x) {
            check_point(x.a, g, "point");
            FamilyMask f = trivial(g);
            seed_family(x.seed, full - SubsetMask::singleton(x.a), g)
                .for_each([&](SubsetMask u) { f.insert(u | SubsetMask::singleton(x.a)); });
            return f;
          },
          [&](const Form2&) -> FamilyMask { throw UnconstructibleError(); },
          [&](const Form3& x) {
            check_point(x.a, g, "point");
            check_point(x.b, g, "point");
            if (x.a == x.b) throw DomainError("Form3 requires a != b");
            return trivial(g) | subsets_of(g, full - SubsetMask::of({x.a, x.b}));
          },
          [&](const T2Shape& x) {
            if (x.part.is_empty() || !x.part.subset_of(full) || x.part == full)
              throw DomainError("T2Shape part must be a proper nonempty subset");
            FamilyMask first = seed_family(x.first, x.part, g);
            FamilyMask second = seed_family(x.second, full - x.part, g);
            FamilyMask f = trivial(g);
            first.for_each([&](SubsetMask u) { second.for_each([&](SubsetMask v) { f.insert(u | v); }); });
            return f;
          },
      },
      d);
}

} // namespace

Topology construct_topology(const FormDescriptor& d, GroundSet g) { return validate_topology(build(d, g)); }

bool is_constructible(const FormDescriptor& d, GroundSet g) {
  try {
    construct_topology(d, g);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

std::vector<FormDescriptor> all_point_topologies(GroundSet g) {
  std::vector<FormDescriptor> out;
  for (Point a = 0; a < g.size(); ++a) out.emplace_back(ExcludedPoint{a});
  for (Point a = 0; a < g.size(); ++a) out.emplace_back(IncludedPoint{a});
  return out;
}

std::vector<FormDescriptor> all_form1a(GroundSet g) {
  std::vector<FormDescriptor> out;
  for (Point a = 0; a < g.size(); ++a)
    for (Point p = 0; p < g.size(); ++p)
      if (p != a) out.emplace_back(Form1A{a, Seed::principal(p)});
  return out;
}

std::vector<FormDescriptor> all_form1b(GroundSet g) {
  std::vector<FormDescriptor> out;
  for (Point a = 0; a < g.size(); ++a)
    for (Point p = 0; p < g.size(); ++p)
      if (p != a) out.emplace_back(Form1B{a, Seed::principal(p)});
  return out;
}

std::vector<FormDescriptor> all_form3(GroundSet g) {
  std::vector<FormDescriptor> out;
  for (Point a = 0; a < g.size(); ++a)
    for (Point b = 0; b < g.size(); ++b)
      if (a != b) out.emplace_back(Form3{a, b});
  return out;
}

std::vector<FormDescriptor> all_t2shape(GroundSet g) {
  std::vector<FormDescriptor> out;
  for (std::uint32_t bits = 1; bits < g.full_bits(); ++bits) {
    SubsetMask part(bits);
    for (Point p : part.points())
      for (Point q : part.complement(g).points())
        out.emplace_back(T2Shape{part, Seed::principal(p), Seed::principal(q)});
  }
  return out;
}

ClassificationLabel classify_connected_door(const Topology& t) {
  if (!is_connected_door(t)) throw PreconditionError("classify_connected_door requires a connected door topology");
  GroundSet g = t.ground();
  ClassificationLabel out;
  if (g.size() == 1) {
    out.degenerate = true;
    out.labels = {ExcludedPoint{0}, IncludedPoint{0}};
    return out;
  }
  for (const auto& d : all_point_topologies(g))
    if (construct_topology(d, g) == t) out.labels.push_back(d);

  FamilyMask rest = t.opens();
  rest.erase(SubsetMask::empty());
  Algebra p = powerset_algebra(g);
  if (is_ultrafilter(rest, p)) {
    bool free = total_intersection(rest).is_empty();
    out.free_ultrafilter_type = free;
    out.principal_ultrafilter_type = !free;
  }
  return out;
}

ClassificationLabel recognize_form(const Topology& t) {
  GroundSet g = t.ground();
  ClassificationLabel out;
  for (auto* family : {&all_form1a, &all_form1b, &all_form3, &all_t2shape})
    for (const auto& d : (*family)(g))
      if (construct_topology(d, g) == t) out.labels.push_back(d);
  std::sort(out.labels.begin(), out.labels.end());
  return out;
}

std::string kind_name(const FormDescriptor& d) {
  static constexpr const char* kNames[] = {"ExcludedPoint", "IncludedPoint", "UltrafilterType", "Form1A",
                                           "Form1B",        "Form2",         "Form3",           "T2Shape"};
  return kNames[d.index()];
}

namespace {

nlohmann::json seed_json(const Seed& s) {
  return s.principal_at ? nlohmann::json(*s.principal_at) : nlohmann::json(nullptr);
}

Seed seed_from(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return Seed::free();
  return Seed::principal(j.at(key).get<Point>());
}

SubsetMask part_from(const nlohmann::json& j) {
  std::uint32_t bits = 0;
  for (const auto& p : j.at("A")) {
    Point v = p.get<Point>();
    if (v < 0 || v >= kMaxPoints) throw DomainError("point " + std::to_string(v) + " out of range");
    bits |= 1u << v;
  }
  return SubsetMask(bits);
}

} // namespace

nlohmann::json to_json(const FormDescriptor& d) {
  nlohmann::json j = {{"kind", kind_name(d)}};
  std::visit(overloaded{
                 [&](const ExcludedPoint& x) { j["a"] = x.a; },
                 [&](const IncludedPoint& x) { j["a"] = x.a; },
                 [&](const UltrafilterType& x) { j["p"] = seed_json(x.seed); },
                 [&](const Form1A& x) {
                   j["a"] = x.a;
                   j["p"] = seed_json(x.seed);
                 },
                 [&](const Form1B& x) {
                   j["a"] = x.a;
                   j["p"] = seed_json(x.seed);
                 },
                 [&](const Form2& x) {
                   j["A"] = to_json(x.part);
                   j["p"] = seed_json(x.first);
                   j["q"] = seed_json(x.second);
                 },
                 [&](const Form3& x) {
                   j["a"] = x.a;
                   j["b"] = x.b;
                 },
                 [&](const T2Shape& x) {
                   j["A"] = to_json(x.part);
                   j["p"] = seed_json(x.first);
                   j["q"] = seed_json(x.second);
                 },
             },
             d);
  return j;
}

FormDescriptor descriptor_from_json(const nlohmann::json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "ExcludedPoint") return ExcludedPoint{j.at("a").get<Point>()};
    if (kind == "IncludedPoint") return IncludedPoint{j.at("a").get<Point>()};
    if (kind == "UltrafilterType") return UltrafilterType{seed_from(j, "p")};
    if (kind == "Form1A") return Form1A{j.at("a").get<Point>(), seed_from(j, "p")};
    if (kind == "Form1B") return Form1B{j.at("a").get<Point>(), seed_from(j, "p")};
    if (kind == "Form2") return Form2{part_from(j), seed_from(j, "p"), seed_from(j, "q")};
    if (kind == "Form3") return Form3{j.at("a").get<Point>(), j.at("b").get<Point>()};
    if (kind == "T2Shape") return T2Shape{part_from(j), seed_from(j, "p"), seed_from(j, "q")};
    throw DomainError("unknown form kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed form descriptor: ") + e.what());
  }
}

nlohmann::json to_json(const ClassificationLabel& c) {
  auto labels = nlohmann::json::array();
  for (const auto& d : c.labels) labels.push_back(to_json(d));
  return {{"labels", labels},
          {"degenerate", c.degenerate},
          {"free_ultrafilter_type", c.free_ultrafilter_type},
          {"principal_ultrafilter_type", c.principal_ultrafilter_type}};
}

} // namespace doorlab
