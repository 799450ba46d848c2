#include "doorlab/verify.hpp"

#include "doorlab/error.hpp"
#include "doorlab/search.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

namespace doorlab {

namespace {

using nlohmann::json;
using Values = std::vector<ExactComplex>;

struct Claim {
  const char* id;
  const char* title;
  std::function<void(ClaimReport&, const VerifyOptions&)> run;
};

// Records a named check in the report; the claim holds only if all do.
void expect(ClaimReport& r, const std::string& name, bool ok) {
  r.details["checks"][name] = ok;
  if (!ok) r.holds = false;
}

json values_json(const Values& vs) {
  auto out = json::array();
  for (const auto& v : vs) out.push_back(v.to_string());
  return out;
}

std::set<std::uint64_t> bits_of(const std::vector<Topology>& ts) {
  std::set<std::uint64_t> out;
  for (const auto& t : ts) out.insert(t.opens().bits());
  return out;
}

std::set<std::uint64_t> constructions(GroundSet g, const std::vector<FormDescriptor>& ds) {
  std::set<std::uint64_t> out;
  for (const auto& d : ds) out.insert(construct_topology(d, g).opens().bits());
  return out;
}

std::vector<int> sizes(const VerifyOptions& o, int lo, int hi, int cap_lo, int cap_hi) {
  if (o.n) {
    if (*o.n < cap_lo || *o.n > cap_hi)
      throw DomainError("n must be in " + std::to_string(cap_lo) + ".." + std::to_string(cap_hi) + " for this claim");
    return {*o.n};
  }
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

void no_values(const VerifyOptions& o) {
  if (o.values) throw DomainError("this claim does not take --values");
}

SolveMode solve_mode_for(int n) { return n <= kBruteSolveCap ? SolveMode::Brute : SolveMode::Modular; }

// ---------------------------------------------------------------------------

void claim_classification(ClaimReport& r, const VerifyOptions& o) {
  no_values(o);
  auto ns = sizes(o, 2, 5, 1, 6);
  auto rows = json::array();
  for (int n : ns) {
    GroundSet g(n);
    auto all = enumerate_topologies(n, TopologyMode::ClosureDfs, o.workers).topologies;
    std::vector<Topology> cd;
    for (const auto& t : all)
      if (is_connected_door(t)) cd.push_back(t);

    std::size_t point_only = 0, free_type = 0, t1 = 0, closed_singleton = 0, open_points_rule = 0;
    for (const auto& t : cd) {
      auto label = classify_connected_door(t);
      bool only_points = !label.labels.empty();
      for (const auto& d : label.labels)
        if (!std::holds_alternative<ExcludedPoint>(d) && !std::holds_alternative<IncludedPoint>(d))
          only_points = false;
      if (only_points) ++point_only;
      if (label.free_ultrafilter_type) ++free_type;
      auto sr = space_report(t);
      if (sr.t1) ++t1;
      if (!sr.closed_singletons.empty()) ++closed_singleton;
      if ((sr.open_singletons.size() >= 2) == (sr.closed_singletons.size() == 1)) ++open_points_rule;
    }
    std::size_t expected = n == 1 ? 1 : n == 2 ? 2 : 2 * static_cast<std::size_t>(n);
    bool same_set = bits_of(cd) == constructions(g, all_point_topologies(g));
    std::string tag = "n" + std::to_string(n);
    expect(r, tag + "_count", cd.size() == expected);
    expect(r, tag + "_all_point_topologies", point_only == cd.size());
    expect(r, tag + "_no_free_ultrafilter_type", free_type == 0);
    expect(r, tag + "_t1_case_empty", n == 1 || t1 == 0);
    expect(r, tag + "_equals_point_constructions", same_set);
    if (n >= 2) expect(r, tag + "_has_closed_singleton", closed_singleton == cd.size());
    // On two points the Sierpinski space has one open and one closed point.
    if (n >= 3) expect(r, tag + "_two_open_points_iff_one_closed_singleton", open_points_rule == cd.size());
    rows.push_back({{"n", n},
                    {"topologies", all.size()},
                    {"connected_door", cd.size()},
                    {"expected", expected},
                    {"point_topology_instances", point_only},
                    {"free_ultrafilter_type", free_type},
                    {"t1_connected_door", t1}});
  }
  r.details["by_n"] = rows;
}

void claim_lemmas(ClaimReport& r, const VerifyOptions& o) {
  no_values(o);
  auto rows = json::array();
  for (int n : sizes(o, 1, 5, 1, 6)) {
    auto cd = enumerate_connected_door(n, o.workers);
    std::size_t lemma1 = 0, occ = 0;
    json first_failure = nullptr;
    for (const auto& t : cd) {
      auto l1 = lemma1_check(t);
      auto oc = occ_satisfied(t);
      if (l1.holds) ++lemma1;
      if (oc.satisfied) ++occ;
      if ((!l1.holds || !oc.satisfied) && first_failure.is_null())
        first_failure = {{"topology", to_json(t)}, {"lemma1", to_json(l1)}, {"occ", to_json(oc)}};
    }
    std::string tag = "n" + std::to_string(n);
    expect(r, tag + "_lemma1", lemma1 == cd.size());
    expect(r, tag + "_occ", occ == cd.size());
    rows.push_back({{"n", n},
                    {"connected_door", cd.size()},
                    {"lemma1_pass", lemma1},
                    {"occ_pass", occ},
                    {"first_failure", first_failure}});
  }
  r.details["by_n"] = rows;
}

void claim_occ_converse(ClaimReport& r, const VerifyOptions& o) {
  no_values(o);
  auto rows = json::array();
  for (int n : sizes(o, 4, 5, 4, 6)) {
    auto occ = enumerate_occ_door(n, o.workers);
    auto cd = enumerate_connected_door(n, o.workers);
    auto lhs = bits_of(occ.topologies);
    auto rhs = bits_of(cd);
    expect(r, "n" + std::to_string(n) + "_sets_equal", lhs == rhs);
    rows.push_back({{"n", n}, {"door_and_occ", lhs.size()}, {"connected_door", rhs.size()}});
  }
  r.details["by_n"] = rows;
}

// One two-valued configuration. Returns the per-configuration JSON.
json theorem2_case(ClaimReport& r, int n, const Values& values, int workers, bool list_solutions) {
  auto sols = enumerate_solutions(n, values, Equation::Eq1Disjoint, solve_mode_for(n), workers);
  bool has_zero = std::find(values.begin(), values.end(), ExactComplex{}) != values.end();
  std::string tag = "n" + std::to_string(n) + "_" + values[0].to_string() + "_" + values[1].to_string();
  std::size_t passing = 0;
  auto listed = json::array();
  for (const auto& f : sols) {
    auto rep = verify_theorem2(f);
    if (rep.preconditions_met && rep.holds()) ++passing;
    if (list_solutions) listed.push_back({{"function", to_json(f)}, {"report", to_json(rep)}});
  }
  json row = {{"n", n}, {"values", values_json(values)}, {"solutions", sols.size()}, {"passing", passing}};
  if (list_solutions) row["listing"] = listed;
  if (n >= 3) {
    expect(r, tag + "_all_pass", passing == sols.size());
    expect(r, tag + "_count", sols.size() == (has_zero ? static_cast<std::size_t>(n) : 0u));
  } else {
    row["note"] = "n < 3: outside the claim's hypothesis";
  }
  return row;
}

void claim_two_valued_additive(ClaimReport& r, const VerifyOptions& o) {
  auto rows = json::array();
  if (o.n || o.values) {
    int n = o.n.value_or(3);
    if (n < 1 || n > kMaxPoints) throw DomainError("n must be in 1..6");
    Values vs = o.values.value_or(Values{0, 1});
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.size() != 2) throw DomainError("thm2 needs exactly two distinct values");
    rows.push_back(theorem2_case(r, n, vs, o.workers, true));
    r.details["by_case"] = rows;
    return;
  }
  for (int n : {3, 4}) rows.push_back(theorem2_case(r, n, {0, 1}, o.workers, false));
  for (int n : {3, 4}) rows.push_back(theorem2_case(r, n, {1, 2}, o.workers, false));
  rows.push_back(theorem2_case(r, 3, {0, Rational(3, 2)}, o.workers, false));
  rows.push_back(theorem2_case(r, 4, {0, ExactComplex(2, 1)}, o.workers, false));
  // Sharpness: on two points {1, 2} is reachable.
  auto sharp = enumerate_solutions(2, {1, 2}, Equation::Eq1Disjoint, SolveMode::Brute, o.workers);
  expect(r, "n2_1/1_2/1_sharpness_single_solution", sharp.size() == 1);
  json row = {{"n", 2}, {"values", values_json({1, 2})}, {"solutions", sharp.size()}};
  if (!sharp.empty()) row["witness"] = to_json(sharp.front());
  rows.push_back(row);
  r.details["by_case"] = rows;
}

// Induced topology of a three-valued Eq1 solution at the shape's top value.
std::optional<std::uint64_t> three_valued_induced(const SetFunction& f, const ValueShape& shape) {
  ExactComplex top = shape.kind == ValueShape::Kind::ZeroZ2Z ? shape.z + shape.z : shape.z;
  FamilyMask fam = induced_family(f, top);
  if (!is_topology(fam)) return std::nullopt;
  return fam.bits();
}

json theorem4_case(ClaimReport& r, int n, const Values& values, int workers, bool cross_check) {
  GroundSet g(n);
  SolveMode mode = solve_mode_for(n);
  auto sols = enumerate_solutions(n, values, Equation::Eq1Disjoint, mode, workers);
  std::string tag = "n" + std::to_string(n);
  for (const auto& v : values) tag += "_" + v.to_string();
  json row = {{"n", n}, {"values", values_json(values)}, {"solutions", sols.size()}, {"mode", to_string(mode)}};
  if (cross_check && mode == SolveMode::Brute) {
    auto other = enumerate_solutions(n, values, Equation::Eq1Disjoint, SolveMode::Modular, workers);
    expect(r, tag + "_brute_equals_modular", other == sols);
  }
  ValueShape shape = classify_value_shape(values);
  row["shape"] = to_json(shape);
  if (sols.empty()) return row;

  std::size_t extension_ok = 0;
  std::set<std::uint64_t> induced;
  std::size_t non_topology = 0;
  for (const auto& f : sols) {
    if (shape.kind != ValueShape::Kind::Other) {
      SetFunction h = f.scaled(ExactComplex(1) / shape.z).extend_by_zero_at_empty();
      if (satisfies_valuation(h).holds) ++extension_ok;
      if (auto bits = three_valued_induced(f, shape)) induced.insert(*bits);
      else ++non_topology;
    }
  }
  row["induced_topologies"] = induced.size();
  if (n < 4) {
    row["note"] = "n < 4: outside the claim's hypothesis";
    return row;
  }
  expect(r, tag + "_shape_admissible", shape.kind != ValueShape::Kind::Other);
  expect(r, tag + "_zero_extension_is_valuation", extension_ok == sols.size());
  expect(r, tag + "_induced_are_topologies", non_topology == 0);
  if (shape.kind == ValueShape::Kind::NegZeroPos)
    expect(r, tag + "_induced_equal_ultrafilter_form", induced == constructions(g, all_form1a(g)));
  if (shape.kind == ValueShape::Kind::ZeroZ2Z)
    expect(r, tag + "_induced_equal_pair_superset_form", induced == constructions(g, all_t2shape(g)));
  return row;
}

void claim_three_valued_additive(ClaimReport& r, const VerifyOptions& o) {
  auto rows = json::array();
  if (o.n || o.values) {
    int n = o.n.value_or(4);
    if (n < 1 || n > kMaxPoints) throw DomainError("n must be in 1..6");
    Values vs = o.values.value_or(Values{-1, 0, 1});
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.size() != 3) throw DomainError("thm4 needs exactly three distinct values");
    auto sols = enumerate_solutions(n, vs, Equation::Eq1Disjoint, solve_mode_for(n), o.workers);
    bool admissible = classify_value_shape(vs).kind != ValueShape::Kind::Other;
    if (n >= 4 && !admissible) expect(r, "no_solutions_for_inadmissible_shape", sols.empty());
    if (n >= 4 && admissible) rows.push_back(theorem4_case(r, n, vs, o.workers, false));
    else rows.push_back({{"n", n}, {"values", values_json(vs)}, {"solutions", sols.size()}});
    r.details["by_case"] = rows;
    return;
  }
  const std::vector<std::pair<Values, std::size_t>> main_sets = {
      {{-1, 0, 1}, 12}, {{0, 1, 2}, 6}, {{0, 1, 3}, 0}, {{1, 2, 3}, 0}};
  for (const auto& [vs, count] : main_sets) {
    rows.push_back(theorem4_case(r, 4, vs, o.workers, true));
    std::string tag = "n4";
    for (const auto& v : vs) tag += "_" + v.to_string();
    expect(r, tag + "_count", rows.back()["solutions"].get<std::size_t>() == count);
  }
  rows.push_back(theorem4_case(r, 4, {ExactComplex(0, -1), 0, ExactComplex(0, 1)}, o.workers, true));
  rows.push_back(theorem4_case(r, 4, {0, Rational(1, 2), 1}, o.workers, true));
  // Sharpness: the cardinality function on three points.
  auto sharp = enumerate_solutions(3, {1, 2, 3}, Equation::Eq1Disjoint, SolveMode::Brute, o.workers);
  SetFunction card = SetFunction::on_powerset(GroundSet(3), false, [](SubsetMask s) { return ExactComplex(s.size()); });
  expect(r, "n3_sharpness_cardinality_only", sharp.size() == 1 && sharp.front() == card);
  rows.push_back({{"n", 3}, {"values", values_json({1, 2, 3})}, {"solutions", sharp.size()}});
  r.details["by_case"] = rows;
}

void claim_three_valued_topologies(ClaimReport& r, const VerifyOptions& o) {
  no_values(o);
  auto rows = json::array();
  for (int n : sizes(o, 3, 4, 1, 5)) {
    SolveMode mode = n <= 3 ? SolveMode::Brute : SolveMode::Modular;
    auto survey = induced_topology_survey(n, mode, o.workers);
    std::string tag = "n" + std::to_string(n);
    expect(r, tag + "_induced_equal_forms", survey.induced == survey.expected);
    expect(r, tag + "_no_unmatched", survey.unmatched == 0);
    expect(r, tag + "_no_form2_instances", survey.form2_instances == 0);
    if (n <= kBruteSolveCap) {
      auto brute = enumerate_solutions(n, {-1, 0, 1}, Equation::Eq2, SolveMode::Brute, o.workers);
      auto modular = enumerate_solutions(n, {-1, 0, 1}, Equation::Eq2, SolveMode::Modular, o.workers);
      expect(r, tag + "_brute_equals_modular", brute == modular);
    }
    rows.push_back(to_json(survey));
  }
  r.details["by_n"] = rows;
}

void claim_constructions(ClaimReport& r, const VerifyOptions& o) {
  no_values(o);
  auto rows = json::array();
  for (int n : sizes(o, 1, 5, 1, 6)) {
    GroundSet g(n);
    std::vector<FormDescriptor> ds = all_point_topologies(g);
    for (Point p = 0; p < n; ++p) ds.emplace_back(UltrafilterType{Seed::principal(p)});
    for (auto* gen : {&all_form1a, &all_form1b, &all_form3, &all_t2shape})
      for (auto& d : (*gen)(g)) ds.push_back(d);
    std::size_t ok = 0;
    json first_failure = nullptr;
    for (const auto& d : ds) {
      bool good = false;
      try {
        SetFunction f = f_from_form(d, g);
        good = satisfies_valuation(f).holds &&
               induced_family(f, designated_value(d)) == construct_topology(d, g).opens();
      } catch (const std::logic_error&) {
        good = false;
      }
      if (good) ++ok;
      else if (first_failure.is_null()) first_failure = to_json(d);
    }
    expect(r, "n" + std::to_string(n) + "_all_descriptors", ok == ds.size());
    rows.push_back({{"n", n}, {"descriptors", ds.size()}, {"passing", ok}, {"first_failure", first_failure}});
  }
  r.details["by_n"] = rows;

  // Free seeds and two free ultrafilters cannot be built.
  GroundSet g4(4);
  bool form2_rejected = false, free_seed_rejected = false;
  try {
    f_from_form(Form2{SubsetMask::of({0, 1}), Seed::free(), Seed::free()}, g4);
  } catch (const UnconstructibleError&) {
    form2_rejected = true;
  }
  try {
    f_from_form(Form1A{0, Seed::free()}, g4);
  } catch (const UnconstructibleError&) {
    free_seed_rejected = true;
  }
  expect(r, "form2_unconstructible", form2_rejected);
  expect(r, "free_seed_unconstructible", free_seed_rejected);

  // Every row of the pairwise case table at n = 4.
  std::array<std::size_t, 10> hits{};
  std::size_t mismatches = 0;
  for (const auto& d : all_form1a(g4)) {
    const auto& form = std::get<Form1A>(d);
    SetFunction f = f_from_form(d, g4);
    for (std::uint32_t ia = 0; ia < g4.subset_count(); ++ia) {
      for (std::uint32_t ib = 0; ib < g4.subset_count(); ++ib) {
        SubsetMask a(ia), b(ib);
        auto m = form1a_subcase(form, a, b);
        if (m.swapped) std::swap(a, b);
        auto want = form1a_subcase_values(m.subcase);
        std::array<ExactComplex, 4> got = {f(a), f(b), f(a & b), f(a | b)};
        bool same = true;
        for (int k = 0; k < 4; ++k)
          if (got[k] != ExactComplex(want[k])) same = false;
        if (!same) ++mismatches;
        ++hits[m.subcase - 1];
      }
    }
  }
  expect(r, "n4_all_ten_subcases_hit", std::all_of(hits.begin(), hits.end(), [](auto h) { return h > 0; }));
  expect(r, "n4_subcase_values_match", mismatches == 0);
  r.details["subcase_hits"] = hits;
}

// Topology inside sigma where every proper nonempty member of sigma is open
// or closed but not both.
bool connected_door_within(const FamilyMask& t, const Algebra& sigma) {
  if (!is_topology(t) || !t.subset_of(sigma.members())) return false;
  GroundSet g = t.ground();
  SubsetMask full = SubsetMask::full(g);
  bool ok = true;
  sigma.members().for_each([&](SubsetMask a) {
    if (a.is_empty() || a == full) return;
    bool open = t.contains(a);
    bool closed = t.contains(a.complement(g));
    if (open == closed) ok = false;
  });
  return ok;
}

void claim_algebra_relative(ClaimReport& r, const VerifyOptions& o) {
  no_values(o);
  const std::vector<Values> pairs = {{0, 1}, {-1, Rational(1, 2)}, {1, ExactComplex(2, 1)}};
  auto rows = json::array();
  std::size_t converse_gaps = 0;
  json converse_example = nullptr;
  for (int n : sizes(o, 1, 4, 1, 4)) {
    GroundSet g(n);
    std::size_t algebras = 0, solutions = 0, lemma3 = 0, s1 = 0, s2 = 0, s3_checked = 0, s3 = 0;
    for (const auto& sigma : all_algebras(g)) {
      ++algebras;
      // Brute ultrafilter oracle: every subfamily of sigma.
      std::set<std::uint64_t> ultra;
      std::set<std::uint64_t> cd_within;
      std::uint64_t sb = sigma.members().bits();
      for (std::uint64_t sub = sb;; sub = (sub - 1) & sb) {
        FamilyMask fam(g, sub);
        if (!fam.empty() && is_ultrafilter(fam, sigma)) ultra.insert(sub);
        if (connected_door_within(fam, sigma)) cd_within.insert(sub);
        if (sub == 0) break;
      }
      bool is_powerset = sigma == powerset_algebra(g);
      for (const auto& vs : pairs) {
        auto sols = enumerate_algebra_solutions(sigma, vs, o.workers);
        std::set<std::uint64_t> tops;
        std::set<std::uint64_t> induced;
        for (const auto& f : sols) {
          ++solutions;
          if (lemma3_check(f, sigma).holds()) ++lemma3;
          FamilyMask top = f.preimage(f(SubsetMask::full(g)));
          tops.insert(top.bits());
          FamilyMask t = top;
          t.insert(SubsetMask::empty());
          induced.insert(t.bits());
          if (connected_door_within(t, sigma)) ++s2;
          if (is_powerset) {
            ++s3_checked;
            if (is_topology(t) && is_connected_door(trusted_topology(t))) ++s3;
          }
        }
        if (tops == ultra) ++s1;
        for (auto bits : cd_within) {
          if (induced.contains(bits)) continue;
          ++converse_gaps;
          if (converse_example.is_null())
            converse_example = {{"n", n}, {"sigma", to_json(sigma.members())}, {"topology", to_json(FamilyMask(g, bits))}};
        }
      }
    }
    std::string tag = "n" + std::to_string(n);
    expect(r, tag + "_lemma3", lemma3 == solutions);
    expect(r, tag + "_s1_biconditional", s1 == algebras * pairs.size());
    expect(r, tag + "_s2_induced_connected_door_within_sigma", s2 == solutions);
    expect(r, tag + "_s3_classical_connected_door", s3 == s3_checked);
    rows.push_back({{"n", n}, {"algebras", algebras}, {"solutions", solutions}, {"lemma3_pass", lemma3},
                    {"s1_algebra_pairs_matching", s1}, {"s2_pass", s2}, {"s3_pass", s3}});
  }
  r.details["by_n"] = rows;
  // Data only: connected-door topologies within sigma that no two-valued
  // valuation induces (the excluded point topologies, for instance).
  r.details["reverse_direction"] = {{"uninduced_connected_door_within_sigma", converse_gaps},
                                    {"example", converse_example}};
}

void claim_remarks(ClaimReport& r, const VerifyOptions& o) {
  no_values(o);
  // Three-set identity against the valuation identity, all {-1,0,1} tables at n = 3.
  GroundSet g3(3);
  std::size_t agree = 0, valuations = 0, total = 0;
  std::vector<ExactComplex> table(g3.subset_count());
  std::uint32_t combos = 1;
  for (std::uint32_t s = 0; s < g3.subset_count(); ++s) combos *= 3;
  for (std::uint32_t code = 0; code < combos; ++code) {
    std::uint32_t rest = code;
    for (auto& v : table) {
      v = ExactComplex(static_cast<std::int64_t>(rest % 3) - 1);
      rest /= 3;
    }
    SetFunction f = SetFunction::from_table(g3, powerset(g3), table);
    bool ie = check_inclusion_exclusion3(f).holds;
    bool val = satisfies_valuation(f).holds;
    if (ie == val) ++agree;
    if (val) ++valuations;
    ++total;
  }
  expect(r, "n3_inclusion_exclusion_iff_valuation", agree == total);
  r.details["inclusion_exclusion"] = {{"functions", total}, {"valuations", valuations}, {"agree", agree}};

  // Increasing valuations: modular sample and brute range scan.
  auto rows = json::array();
  const Values cs = {-1, 0, Rational(1, 2)};
  const Values ws = {-1, 0, Rational(1, 2), 1, 2};
  for (int n : sizes(o, 1, 4, 1, 4)) {
    GroundSet g(n);
    std::size_t sampled = 0, increasing = 0, alarms = 0;
    std::size_t combos_w = 1;
    for (int x = 0; x < n; ++x) combos_w *= ws.size();
    for (const auto& c : cs) {
      for (std::size_t code = 0; code < combos_w; ++code) {
        ModularParams p{c, {}};
        std::size_t rest = code;
        for (int x = 0; x < n; ++x) {
          p.weights.push_back(ws[rest % ws.size()]);
          rest /= ws.size();
        }
        auto rep = increasing_filter_check(modular_compose(g, p, true));
        ++sampled;
        if (rep.top_preimage_is_filter) ++increasing;
        if (rep.alarm()) ++alarms;
      }
    }
    std::size_t scanned = 0, scan_increasing = 0, scan_alarms = 0;
    for (const Values& vs : std::vector<Values>{{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}) {
      for (const auto& f : enumerate_solutions(n, vs, Equation::Eq2, SolveMode::Brute, o.workers)) {
        auto rep = increasing_filter_check(f);
        ++scanned;
        if (rep.top_preimage_is_filter) ++scan_increasing;
        if (rep.alarm()) ++scan_alarms;
      }
    }
    std::string tag = "n" + std::to_string(n);
    expect(r, tag + "_modular_sample_no_alarm", alarms == 0);
    expect(r, tag + "_range_scan_no_alarm", scan_alarms == 0);
    rows.push_back({{"n", n}, {"modular_sampled", sampled}, {"modular_increasing_nonconstant", increasing},
                    {"scan_solutions", scanned}, {"scan_increasing_nonconstant", scan_increasing}});
  }
  r.details["increasing_by_n"] = rows;
}

void claim_infrastructure(ClaimReport& r, const VerifyOptions& o) {
  no_values(o);
  const std::map<int, std::size_t> totals = {{1, 1}, {2, 4}, {3, 29}, {4, 355}, {5, 6942}};
  auto rows = json::array();
  for (int n = 1; n <= 5; ++n) {
    auto closure = enumerate_topologies(n, TopologyMode::ClosureDfs, o.workers);
    std::string tag = "n" + std::to_string(n);
    json row = {{"n", n}, {"closure_dfs", closure.topologies.size()}};
    if (n <= kRawScanCap) {
      auto raw = enumerate_topologies(n, TopologyMode::RawScan, o.workers);
      expect(r, tag + "_raw_equals_closure", raw.topologies == closure.topologies);
      row["raw_scan"] = raw.topologies.size();
    }
    expect(r, tag + "_total", closure.topologies.size() == totals.at(n));
    rows.push_back(row);
  }
  r.details["topology_totals"] = rows;

  std::size_t pairs = 0, agree = 0;
  for (int n = 1; n <= kBruteSolveCap; ++n)
    for (Equation eq : {Equation::Eq2, Equation::Eq1Disjoint})
      for (const Values& vs : std::vector<Values>{{0, 1}, {1, 2}, {-1, 0, 1}, {0, 1, 2}}) {
        ++pairs;
        auto b = enumerate_solutions(n, vs, eq, SolveMode::Brute, o.workers);
        auto m = enumerate_solutions(n, vs, eq, SolveMode::Modular, o.workers);
        if (b == m) ++agree;
      }
  expect(r, "brute_equals_modular", agree == pairs);
  r.details["solver_agreement"] = {{"configurations", pairs}, {"agree", agree}};

  // Same results whatever the worker count.
  bool same_topologies = true, same_solutions = true, same_counts = true;
  auto base_t = enumerate_topologies(5, TopologyMode::ClosureDfs, 1);
  auto base_s = enumerate_solutions(4, {-1, 0, 1}, Equation::Eq2, SolveMode::Brute, 1);
  auto base_c = to_json(counts_report(4, 1)).dump();
  for (int w : {3, kernels::default_workers()}) {
    auto t = enumerate_topologies(5, TopologyMode::ClosureDfs, w);
    if (t.topologies != base_t.topologies || t.report.total_families_scanned != base_t.report.total_families_scanned)
      same_topologies = false;
    if (enumerate_solutions(4, {-1, 0, 1}, Equation::Eq2, SolveMode::Brute, w) != base_s) same_solutions = false;
    if (to_json(counts_report(4, w)).dump() != base_c) same_counts = false;
  }
  expect(r, "deterministic_topologies", same_topologies);
  expect(r, "deterministic_solutions", same_solutions);
  expect(r, "deterministic_counts_json", same_counts);
}

const std::vector<Claim>& claims() {
  static const std::vector<Claim> all = {
      {"thm1", "connected door spaces are the excluded and included point topologies", claim_classification},
      {"lemma1-2", "connected door spaces pass the extension lemma and the open-closed condition", claim_lemmas},
      {"occ-converse", "door spaces with the open-closed condition are connected", claim_occ_converse},
      {"thm2", "two-valued disjointly additive functions come from ultrafilters", claim_two_valued_additive},
      {"thm4", "three-valued disjointly additive functions on four or more points", claim_three_valued_additive},
      {"thm3", "three-valued valuations induce exactly the listed topologies", claim_three_valued_topologies},
      {"part2", "piecewise constructions realize every constructible form", claim_constructions},
      {"lemma3-s", "two-valued valuations on algebras and relative ultrafilters", claim_algebra_relative},
      {"remarks", "three-set identity and increasing valuations", claim_remarks},
      {"infra", "mode agreement, determinism and topology totals", claim_infrastructure},
  };
  return all;
}

} // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& c : claims()) out.emplace_back(c.id);
    return out;
  }();
  return ids;
}

ClaimReport verify_claim(const std::string& id, const VerifyOptions& opts) {
  for (const auto& c : claims()) {
    if (id != c.id) continue;
    ClaimReport r;
    r.id = c.id;
    r.title = c.title;
    r.details["checks"] = json::object();
    auto start = std::chrono::steady_clock::now();
    c.run(r, opts);
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw DomainError("unknown claim id '" + id + "'");
}

json to_json(const ClaimReport& r) {
  return {{"id", r.id}, {"title", r.title}, {"holds", r.holds}, {"details", r.details}};
}

} // namespace doorlab
