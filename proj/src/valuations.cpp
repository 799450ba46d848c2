#include "doorlab/valuations.hpp"

#include "doorlab/error.hpp"
#include "doorlab/topology.hpp"

#include <algorithm>
#include <set>

namespace doorlab {

SetFunction::SetFunction(FamilyMask domain, std::vector<ExactComplex> values)
    : domain_(domain), values_(std::move(values)) {
  values_.resize(domain_.ground().subset_count());
  // Unused slots are zeroed so equality and ordering only see the domain.
  for (std::uint32_t s = 0; s < values_.size(); ++s)
    if (!domain_.contains(SubsetMask(s))) values_[s] = ExactComplex{};
}

SetFunction SetFunction::on_powerset(GroundSet g, bool includes_empty, const Generator& gen) {
  FamilyMask domain = powerset(g);
  if (!includes_empty) domain.erase(SubsetMask::empty());
  std::vector<ExactComplex> values(g.subset_count());
  domain.for_each([&](SubsetMask s) { values[s.bits()] = gen(s); });
  return SetFunction(domain, std::move(values));
}

SetFunction SetFunction::on_algebra(const Algebra& sigma, const Generator& gen) {
  std::vector<ExactComplex> values(sigma.ground().subset_count());
  sigma.members().for_each([&](SubsetMask s) { values[s.bits()] = gen(s); });
  return SetFunction(sigma.members(), std::move(values));
}

SetFunction SetFunction::from_table(GroundSet g, const FamilyMask& domain, std::vector<ExactComplex> values) {
  if (domain.ground() != g) throw DomainError("domain ground set mismatch");
  if (values.size() != g.subset_count()) throw DomainError("value table must have 2^n entries");
  return SetFunction(domain, std::move(values));
}

bool SetFunction::is_powerset_domain() const { return domain_ == powerset(ground()); }

const ExactComplex& SetFunction::operator()(SubsetMask s) const {
  if (!domain_.contains(s)) throw DomainError("subset " + to_string(s) + " outside the function's domain");
  return values_[s.bits()];
}

std::vector<ExactComplex> SetFunction::value_set() const {
  std::set<ExactComplex> seen;
  domain_.for_each([&](SubsetMask s) { seen.insert(values_[s.bits()]); });
  return {seen.begin(), seen.end()};
}

FamilyMask SetFunction::preimage(const ExactComplex& v) const {
  FamilyMask out(ground());
  domain_.for_each([&](SubsetMask s) {
    if (values_[s.bits()] == v) out.insert(s);
  });
  return out;
}

SetFunction SetFunction::scaled(const ExactComplex& factor) const {
  auto values = values_;
  for (auto& v : values) v = v * factor;
  return SetFunction(domain_, std::move(values));
}

SetFunction SetFunction::extend_by_zero_at_empty() const {
  FamilyMask domain = domain_;
  domain.insert(SubsetMask::empty());
  auto values = values_;
  values[0] = ExactComplex{};
  return SetFunction(domain, std::move(values));
}

bool operator==(const SetFunction& a, const SetFunction& b) {
  return a.domain_ == b.domain_ && a.values_ == b.values_;
}

bool operator<(const SetFunction& a, const SetFunction& b) {
  if (a.domain_ != b.domain_) return a.domain_ < b.domain_;
  return a.values_ < b.values_;
}

nlohmann::json to_json(const SetFunction& f) {
  auto values = nlohmann::json::array();
  for (SubsetMask s : f.domain().members_card_lex())
    values.push_back({{"set", to_json(s)}, {"re", f(s).re.to_string()}, {"im", f(s).im.to_string()}});
  nlohmann::json j = {{"n", f.ground().size()}, {"includes_empty", f.includes_empty()}, {"values", values}};
  FamilyMask full = powerset(f.ground());
  FamilyMask nonempty = full;
  nonempty.erase(SubsetMask::empty());
  if (f.domain() != full && f.domain() != nonempty) j["domain"] = to_json(f.domain());
  return j;
}

SetFunction set_function_from_json(const nlohmann::json& j) {
  try {
    GroundSet g(j.at("n").get<int>());
    bool includes_empty = j.at("includes_empty").get<bool>();
    FamilyMask domain = powerset(g);
    if (j.contains("domain")) {
      domain = family_from_json(g, j.at("domain"));
    } else if (!includes_empty) {
      domain.erase(SubsetMask::empty());
    }
    std::vector<ExactComplex> values(g.subset_count());
    FamilyMask seen(g);
    for (const auto& entry : j.at("values")) {
      FamilyMask one = family_from_json(g, nlohmann::json::array({entry.at("set")}));
      SubsetMask s = one.members().front();
      if (!domain.contains(s)) throw DomainError("value given for " + to_string(s) + " outside the domain");
      values[s.bits()] = {Rational::parse(entry.at("re").get<std::string>()),
                          Rational::parse(entry.at("im").get<std::string>())};
      seen.insert(s);
    }
    if (seen != domain) throw DomainError("set function is not total on its domain");
    return SetFunction::from_table(g, domain, std::move(values));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed set function: ") + e.what());
  }
}

IdentityCheck satisfies_valuation(const SetFunction& f) {
  const FamilyMask& dom = f.domain();
  auto members = dom.members();
  for (SubsetMask a : members) {
    for (SubsetMask b : members) {
      SubsetMask u = a | b;
      SubsetMask i = a & b;
      if (!dom.contains(u) || !dom.contains(i)) continue;
      if (f(a) + f(b) != f(u) + f(i)) return {false, PairWitness{a, b}};
    }
  }
  return {};
}

IdentityCheck satisfies_disjoint_additivity(const SetFunction& f) {
  const FamilyMask& dom = f.domain();
  auto members = dom.members();
  for (SubsetMask a : members) {
    if (a.is_empty()) continue;
    for (SubsetMask b : members) {
      if (b.is_empty() || !a.disjoint(b) || !dom.contains(a | b)) continue;
      if (f(a) + f(b) != f(a | b)) return {false, PairWitness{a, b}};
    }
  }
  return {};
}

DecomposeResult modular_decompose(const SetFunction& f) {
  if (!f.is_powerset_domain()) throw PreconditionError("modular_decompose requires a P(X) domain");
  if (auto check = satisfies_valuation(f); !check.holds) return {std::nullopt, check.witness};
  GroundSet g = f.ground();
  ModularParams p;
  p.c = f(SubsetMask::empty());
  for (Point x = 0; x < g.size(); ++x) p.weights.push_back(f(SubsetMask::singleton(x)) - p.c);
  if (modular_compose(g, p, true) != f) throw std::logic_error("internal: valuation is not modular");
  return {p, std::nullopt};
}

SetFunction modular_compose(GroundSet g, const ModularParams& p, bool includes_empty) {
  if (static_cast<int>(p.weights.size()) != g.size()) throw DomainError("need one weight per point");
  return SetFunction::on_powerset(g, includes_empty, [&](SubsetMask s) {
    ExactComplex v = p.c;
    for (Point x : s.points()) v += p.weights[x];
    return v;
  });
}

FamilyMask induced_family(const SetFunction& f, const ExactComplex& v) {
  FamilyMask out = f.preimage(v);
  out.insert(SubsetMask::empty());
  out.insert(SubsetMask::full(f.ground()));
  return out;
}

Theorem2Report verify_theorem2(const SetFunction& f) {
  Theorem2Report r;
  GroundSet g = f.ground();
  auto values = f.value_set();
  std::vector<std::string> problems;
  if (g.size() < 3) problems.push_back("n < 3");
  if (f.includes_empty()) problems.push_back("domain must exclude the empty set");
  if (values.size() != 2) problems.push_back("f must take exactly two values");
  if (!satisfies_disjoint_additivity(f).holds) problems.push_back("f violates disjoint additivity");
  r.preconditions_met = problems.empty();
  for (const auto& p : problems) r.precondition_note += (r.precondition_note.empty() ? "" : "; ") + p;

  r.zero_in_values = std::find(values.begin(), values.end(), ExactComplex{}) != values.end();
  FamilyMask top = f.preimage(f(SubsetMask::full(g)));
  top.erase(SubsetMask::empty());
  r.ultrafilter = is_ultrafilter(top, powerset_algebra(g));
  FamilyMask induced = top;
  induced.insert(SubsetMask::empty());
  r.connected_door = is_topology(induced) && is_connected_door(validate_topology(induced));
  return r;
}

ValueShape classify_value_shape(const std::vector<ExactComplex>& values) {
  std::set<ExactComplex> distinct(values.begin(), values.end());
  if (distinct.size() != 3 || values.size() != 3) throw DomainError("value shape needs exactly 3 distinct values");
  if (!distinct.contains(ExactComplex{})) return {};
  distinct.erase(ExactComplex{});
  ExactComplex u = *distinct.begin();
  ExactComplex v = *distinct.rbegin();
  if (u + v == ExactComplex{}) return {ValueShape::Kind::NegZeroPos, v};
  if (u == v + v) return {ValueShape::Kind::ZeroZ2Z, v};
  if (v == u + u) return {ValueShape::Kind::ZeroZ2Z, u};
  return {};
}

std::string to_string(ValueShape::Kind k) {
  switch (k) {
  case ValueShape::Kind::NegZeroPos: return "NegZeroPos";
  case ValueShape::Kind::ZeroZ2Z: return "ZeroZ2Z";
  case ValueShape::Kind::Other: break;
  }
  return "Other";
}

int designated_value(const FormDescriptor& d) {
  if (std::holds_alternative<ExcludedPoint>(d)) return 0;
  if (std::holds_alternative<IncludedPoint>(d) || std::holds_alternative<UltrafilterType>(d)) return 1;
  if (std::holds_alternative<Form3>(d)) return -1;
  if (std::holds_alternative<Form1A>(d) || std::holds_alternative<Form1B>(d) || std::holds_alternative<T2Shape>(d) ||
      std::holds_alternative<Form2>(d))
    return 1;
  throw DomainError(kind_name(d) + " has no three-valued construction");
}

namespace {

Point seed_point(const Seed& s) {
  if (s.is_free()) throw UnconstructibleError();
  return *s.principal_at;
}

// Case tables of the three-valued constructions. Membership of an
// ultrafilter seeded at p is "p in U".
SetFunction::Generator form_generator(const FormDescriptor& d, GroundSet g) {
  SubsetMask full = SubsetMask::full(g);
  // Point topologies come from two-valued indicators.
  if (const auto* x = std::get_if<ExcludedPoint>(&d)) {
    Point a = x->a;
    return [a](SubsetMask u) -> ExactComplex { return u.contains(a) ? -1 : 0; };
  }
  if (const auto* x = std::get_if<IncludedPoint>(&d)) {
    Point a = x->a;
    return [a](SubsetMask u) -> ExactComplex { return u.contains(a) ? 1 : 0; };
  }
  if (const auto* x = std::get_if<UltrafilterType>(&d)) {
    Point p = seed_point(x->seed);
    return [p](SubsetMask u) -> ExactComplex { return u.contains(p) ? 1 : 0; };
  }
  if (const auto* x = std::get_if<Form1A>(&d)) {
    Point a = x->a;
    Point p = seed_point(x->seed);
    return [a, p](SubsetMask u) -> ExactComplex {
      bool has_a = u.contains(a);
      bool rest_in = (u - SubsetMask::singleton(a)).contains(p);
      if (!has_a && rest_in) return 1;
      if ((!has_a && !rest_in) || (has_a && rest_in)) return 0;
      return -1;
    };
  }
  if (const auto* x = std::get_if<Form1B>(&d)) {
    Point a = x->a;
    Point p = seed_point(x->seed);
    return [a, p](SubsetMask u) -> ExactComplex {
      bool has_a = u.contains(a);
      bool rest_in = (u - SubsetMask::singleton(a)).contains(p);
      if (has_a && rest_in) return 1;
      if ((!has_a && rest_in) || (has_a && !rest_in)) return 0;
      return -1;
    };
  }
  if (const auto* x = std::get_if<T2Shape>(&d)) {
    SubsetMask part = x->part;
    Point p = seed_point(x->first);
    Point q = seed_point(x->second);
    return [part, full, p, q](SubsetMask u) -> ExactComplex {
      bool first = (u & part).contains(p);
      bool second = (u & (full - part)).contains(q);
      if (first && second) return 1;
      if (first || second) return 0;
      return -1;
    };
  }
  if (const auto* x = std::get_if<Form3>(&d)) {
    SubsetMask ab = SubsetMask::of({x->a, x->b});
    return [ab](SubsetMask u) -> ExactComplex {
      if (ab.subset_of(u)) return 1;
      if (!u.disjoint(ab)) return 0;
      return -1;
    };
  }
  if (std::holds_alternative<Form2>(d)) throw UnconstructibleError();
  throw DomainError(kind_name(d) + " has no three-valued construction");
}

} // namespace

SetFunction f_from_form(const FormDescriptor& d, GroundSet g) {
  Topology target = construct_topology(d, g);
  SetFunction f = SetFunction::on_powerset(g, true, form_generator(d, g));
  if (!satisfies_valuation(f).holds)
    throw std::logic_error("internal: construction for " + kind_name(d) + " violates the valuation identity");
  if (induced_family(f, designated_value(d)) != target.opens())
    throw std::logic_error("internal: construction for " + kind_name(d) + " does not reproduce its topology");
  return f;
}

int form1a_category(const Form1A& d, SubsetMask s) {
  Point p = seed_point(d.seed);
  bool has_a = s.contains(d.a);
  bool rest_in = (s - SubsetMask::singleton(d.a)).contains(p);
  if (!has_a) return rest_in ? 1 : 2;
  return rest_in ? 3 : 4;
}

namespace {
// Table rows as (category of A, category of B).
constexpr std::array<std::array<int, 2>, 10> kSubcaseRows = {{
    {1, 1}, {1, 2}, {1, 3}, {1, 4}, {3, 2}, {3, 3}, {3, 4}, {2, 2}, {2, 4}, {4, 4},
}};
} // namespace

SubcaseMatch form1a_subcase(const Form1A& d, SubsetMask a, SubsetMask b) {
  int ca = form1a_category(d, a);
  int cb = form1a_category(d, b);
  for (int row = 0; row < 10; ++row) {
    if (kSubcaseRows[row][0] == ca && kSubcaseRows[row][1] == cb) return {row + 1, false};
    if (kSubcaseRows[row][0] == cb && kSubcaseRows[row][1] == ca) return {row + 1, true};
  }
  throw std::logic_error("internal: category pair outside the table");
}

std::array<int, 4> form1a_subcase_values(int subcase) {
  // {f(A), f(B), f(A n B), f(A u B)}
  static constexpr std::array<std::array<int, 4>, 10> kValues = {{
      {1, 1, 1, 1},
      {1, 0, 0, 1},
      {1, 0, 1, 0},
      {1, -1, 0, 0},
      {0, 0, 0, 0},
      {0, 0, 0, 0},
      {0, -1, -1, 0},
      {0, 0, 0, 0},
      {0, -1, 0, -1},
      {-1, -1, -1, -1},
  }};
  if (subcase < 1 || subcase > 10) throw DomainError("subcase must be in 1..10");
  return kValues[subcase - 1];
}

InclusionExclusionCheck check_inclusion_exclusion3(const SetFunction& f) {
  if (!f.is_powerset_domain()) throw PreconditionError("inclusion-exclusion check requires a P(X) domain");
  std::uint32_t count = f.ground().subset_count();
  for (std::uint32_t ia = 0; ia < count; ++ia) {
    for (std::uint32_t ib = 0; ib < count; ++ib) {
      for (std::uint32_t ic = 0; ic < count; ++ic) {
        SubsetMask a(ia), b(ib), c(ic);
        ExactComplex rhs = f(a) + f(b) + f(c) - f(a & b) - f(b & c) - f(a & c) + f(a & b & c);
        if (f(a | b | c) != rhs) return {false, TripleWitness{a, b, c}};
      }
    }
  }
  return {};
}

IncreasingReport increasing_filter_check(const SetFunction& f) {
  if (!f.is_powerset_domain()) throw PreconditionError("increasing_filter_check requires a P(X) domain");
  for (const auto& v : f.table())
    if (!v.is_real()) throw DomainError("increasing_filter_check needs real values");
  GroundSet g = f.ground();
  IncreasingReport r;
  r.is_increasing = true;
  for (std::uint32_t a = 0; a < g.subset_count() && r.is_increasing; ++a)
    for (std::uint32_t b = 0; b < g.subset_count(); ++b)
      if (SubsetMask(a).subset_of(SubsetMask(b)) && f(SubsetMask(a)).re > f(SubsetMask(b)).re) {
        r.is_increasing = false;
        break;
      }
  r.is_valuation = satisfies_valuation(f).holds;
  r.constant = f.value_set().size() == 1;
  if (r.is_increasing && r.is_valuation && !r.constant)
    r.top_preimage_is_filter = is_filter(f.preimage(f(SubsetMask::full(g))), powerset_algebra(g));
  return r;
}

namespace {
bool lattice_closed(const FamilyMask& f) {
  auto m = f.members();
  for (SubsetMask a : m)
    for (SubsetMask b : m)
      if (!f.contains(a | b) || !f.contains(a & b)) return false;
  return true;
}
} // namespace

Lemma3Report lemma3_check(const SetFunction& f, const Algebra& sigma) {
  if (f.domain() != sigma.members()) throw PreconditionError("lemma3_check: domain must equal the algebra");
  if (f.value_set().size() != 2) throw PreconditionError("lemma3_check: f must be two-valued");
  if (!satisfies_valuation(f).holds) throw PreconditionError("lemma3_check: f must satisfy the valuation identity");
  GroundSet g = f.ground();
  Lemma3Report r;
  r.complement_pairs = true;
  sigma.members().for_each([&](SubsetMask a) {
    if (f(a) == f(a.complement(g))) r.complement_pairs = false;
  });
  FamilyMask bottom = f.preimage(f(SubsetMask::empty()));
  FamilyMask top = f.preimage(f(SubsetMask::full(g)));
  r.bottom_downward = true;
  r.top_upward = true;
  bottom.for_each([&](SubsetMask y) {
    sigma.members().for_each([&](SubsetMask a) {
      if (a.subset_of(y) && !bottom.contains(a)) r.bottom_downward = false;
    });
  });
  top.for_each([&](SubsetMask u) {
    sigma.members().for_each([&](SubsetMask v) {
      if (u.subset_of(v) && !top.contains(v)) r.top_upward = false;
    });
  });
  r.lattice_closed = lattice_closed(bottom) && lattice_closed(top);
  return r;
}

nlohmann::json to_json(const ModularParams& p) {
  auto w = nlohmann::json::array();
  for (const auto& x : p.weights) w.push_back(x.to_string());
  return {{"c", p.c.to_string()}, {"weights", w}};
}

nlohmann::json to_json(const IdentityCheck& c) {
  return {{"holds", c.holds},
          {"witness", c.witness ? nlohmann::json::array({to_json(c.witness->a), to_json(c.witness->b)})
                                : nlohmann::json(nullptr)}};
}

nlohmann::json to_json(const Theorem2Report& r) {
  return {{"preconditions_met", r.preconditions_met},
          {"precondition_note", r.precondition_note},
          {"zero_in_values", r.zero_in_values},
          {"ultrafilter", r.ultrafilter},
          {"connected_door", r.connected_door},
          {"holds", r.holds()}};
}

nlohmann::json to_json(const ValueShape& s) {
  nlohmann::json j = {{"kind", to_string(s.kind)}};
  if (s.kind != ValueShape::Kind::Other) j["z"] = s.z.to_string();
  return j;
}

} // namespace doorlab
