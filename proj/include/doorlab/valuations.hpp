#pragma once

#include "doorlab/classify.hpp"
#include "doorlab/filters.hpp"
#include "doorlab/rational.hpp"
#include "doorlab/set_core.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace doorlab {

// A total function from a subset domain to exact complex values. The domain
// is P(X), P(X) \ {empty}, or the members of an algebra.
class SetFunction {
public:
  using Generator = std::function<ExactComplex(SubsetMask)>;

  static SetFunction on_powerset(GroundSet g, bool includes_empty, const Generator& gen);
  static SetFunction on_algebra(const Algebra& sigma, const Generator& gen);
  // `values` is indexed by mask; entries outside the domain are ignored.
  static SetFunction from_table(GroundSet g, const FamilyMask& domain, std::vector<ExactComplex> values);

  GroundSet ground() const { return domain_.ground(); }
  const FamilyMask& domain() const { return domain_; }
  bool includes_empty() const { return domain_.contains(SubsetMask::empty()); }
  bool is_powerset_domain() const;

  // Throws DomainError when s is outside the domain.
  const ExactComplex& operator()(SubsetMask s) const;
  const std::vector<ExactComplex>& table() const { return values_; }

  // Distinct values, ascending in ExactComplex order.
  std::vector<ExactComplex> value_set() const;
  // Domain members mapped to v.
  FamilyMask preimage(const ExactComplex& v) const;

  SetFunction scaled(const ExactComplex& factor) const;
  // Same values on the nonempty sets, with f(empty) = 0 added to the domain.
  SetFunction extend_by_zero_at_empty() const;

  friend bool operator==(const SetFunction& a, const SetFunction& b);
  // Canonical order: lexicographic over domain members in mask order.
  friend bool operator<(const SetFunction& a, const SetFunction& b);

private:
  SetFunction(FamilyMask domain, std::vector<ExactComplex> values);

  FamilyMask domain_;
  std::vector<ExactComplex> values_;
};

nlohmann::json to_json(const SetFunction& f);
SetFunction set_function_from_json(const nlohmann::json& j);

struct PairWitness {
  SubsetMask a;
  SubsetMask b;
  friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

struct IdentityCheck {
  bool holds = true;
  std::optional<PairWitness> witness;
};

// f(A) + f(B) = f(A u B) + f(A n B) over every pair whose union and
// intersection lie in the domain. Witness: least (A, B) by mask.
IdentityCheck satisfies_valuation(const SetFunction& f);

// f(A) + f(B) = f(A u B) for every disjoint nonempty pair in the domain.
IdentityCheck satisfies_disjoint_additivity(const SetFunction& f);

struct ModularParams {
  ExactComplex c;
  std::vector<ExactComplex> weights;
  friend bool operator==(const ModularParams&, const ModularParams&) = default;
};

struct DecomposeResult {
  std::optional<ModularParams> params;
  std::optional<PairWitness> violation;
};

// c = f(empty), w_x = f({x}) - c. Requires a P(X) domain.
DecomposeResult modular_decompose(const SetFunction& f);

// f(A) = c + sum of weights over A on the requested domain.
SetFunction modular_compose(GroundSet g, const ModularParams& p, bool includes_empty);

// {empty, X} u {A in domain : f(A) = v}.
FamilyMask induced_family(const SetFunction& f, const ExactComplex& v);

struct Theorem2Report {
  bool preconditions_met = false;
  std::string precondition_note;
  bool zero_in_values = false;
  bool ultrafilter = false;
  bool connected_door = false;
  // Only meaningful when preconditions_met.
  bool holds() const { return zero_in_values && ultrafilter && connected_door; }
};

// For a surjection of P(X)\{empty} onto two values satisfying disjoint
// additivity on n >= 3 points: 0 is a value, f^-1(f(X)) is an ultrafilter,
// and {empty} u f^-1(f(X)) is connected-door.
Theorem2Report verify_theorem2(const SetFunction& f);

struct ValueShape {
  enum class Kind { NegZeroPos, ZeroZ2Z, Other };
  Kind kind = Kind::Other;
  ExactComplex z;
};

// Exactly three distinct values required (DomainError otherwise). For
// NegZeroPos, z is the larger of the two nonzero values in ExactComplex order.
ValueShape classify_value_shape(const std::vector<ExactComplex>& values);
std::string to_string(ValueShape::Kind k);

// The value whose preimage (plus empty and X) reproduces the form's topology:
// +1 for Form1A / Form1B / T2Shape / IncludedPoint / UltrafilterType,
// -1 for Form3, 0 for ExcludedPoint.
int designated_value(const FormDescriptor& d);

// Piecewise {-1, 0, 1}-valued valuation realizing the descriptor's topology.
// The point topologies and UltrafilterType use two-valued indicators.
// Throws UnconstructibleError for Form2 and free seeds. Internally asserts
// that the result satisfies the valuation identity and reproduces
// construct_topology(d).
SetFunction f_from_form(const FormDescriptor& d, GroundSet g);

// Membership category of a subset relative to a Form1A descriptor (a, F'):
// 1: in F'; 2: avoids a, not in F'; 3: {a} u V with V in F';
// 4: {a} u W with W avoiding a and not in F'.
int form1a_category(const Form1A& d, SubsetMask s);

struct SubcaseMatch {
  int subcase = 0;      // 1..10, table order of the Form 1 construction
  bool swapped = false; // (B, A) matched the table row
};
SubcaseMatch form1a_subcase(const Form1A& d, SubsetMask a, SubsetMask b);

// Expected {f(A), f(B), f(A n B), f(A u B)} for each table row, with A and B in
// the row's order.
std::array<int, 4> form1a_subcase_values(int subcase);

struct TripleWitness {
  SubsetMask a, b, c;
};
struct InclusionExclusionCheck {
  bool holds = true;
  std::optional<TripleWitness> witness;
};

// Three-set inclusion-exclusion identity over all triples. Requires P(X).
InclusionExclusionCheck check_inclusion_exclusion3(const SetFunction& f);

struct IncreasingReport {
  bool is_increasing = false;
  bool is_valuation = false;
  // A constant f has f^-1(f(X)) = P(X), the improper filter; no assertion.
  bool constant = false;
  // Set only when is_increasing, is_valuation and not constant.
  std::optional<bool> top_preimage_is_filter;
  bool alarm() const { return top_preimage_is_filter.has_value() && !*top_preimage_is_filter; }
};

// Requires a P(X) domain and real values (DomainError otherwise).
IncreasingReport increasing_filter_check(const SetFunction& f);

struct Lemma3Report {
  bool complement_pairs = false;  // {f(A), f(A^c)} = {z1, z2}
  bool bottom_downward = false;   // f^-1(f(empty)) closed under subsets in sigma
  bool top_upward = false;        // f^-1(f(X)) closed under supersets in sigma
  bool lattice_closed = false;    // both preimages closed under u and n
  bool holds() const { return complement_pairs && bottom_downward && top_upward && lattice_closed; }
};

// For a two-valued surjective valuation on an algebra domain. Throws
// PreconditionError otherwise.
Lemma3Report lemma3_check(const SetFunction& f, const Algebra& sigma);

nlohmann::json to_json(const ModularParams& p);
nlohmann::json to_json(const IdentityCheck& c);
nlohmann::json to_json(const Theorem2Report& r);
nlohmann::json to_json(const ValueShape& s);

} // namespace doorlab
