#pragma once

#include "doorlab/set_core.hpp"

#include <optional>
#include <vector>

namespace doorlab {

// True iff f is nonempty and closed under complement and pairwise union.
bool is_algebra(const FamilyMask& f);

// A finite algebra of sets. Stored extensionally; its generating partition is
// recovered from the atoms on demand.
class Algebra {
public:
  // Throws DomainError if f is not an algebra.
  explicit Algebra(const FamilyMask& f);

  const FamilyMask& members() const { return members_; }
  GroundSet ground() const { return members_.ground(); }
  // Minimal nonempty members, ascending by mask.
  std::vector<SubsetMask> atoms() const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

private:
  FamilyMask members_;
};

Algebra powerset_algebra(GroundSet g);

// All unions of blocks. Throws DomainError naming a point covered twice or
// not covered at all.
Algebra algebra_from_partition(GroundSet g, const std::vector<SubsetMask>& blocks);

// Every block algebra on g (one per set partition of X), in order of the
// restricted-growth strings of their partitions.
std::vector<Algebra> all_algebras(GroundSet g);

struct FilterFamily {
  FamilyMask members;
  Algebra relative_to;
  std::optional<Point> principal_at;
  bool is_free = false;
};

// Nonempty, excludes the empty set, intersection-closed and upward closed
// within sigma. Throws DomainError when f is not contained in sigma.
bool is_filter(const FamilyMask& f, const Algebra& sigma);

// A filter within sigma that holds exactly one of U, U^c for every U in sigma.
bool is_ultrafilter(const FamilyMask& f, const Algebra& sigma);

FilterFamily principal_ultrafilter(Point p, const Algebra& sigma);

// One ultrafilter per atom of sigma, ascending by atom mask. is_free is the
// computed flag (intersection of all members empty).
std::vector<FilterFamily> enumerate_ultrafilters(const Algebra& sigma);

// Intersection of all members (X for the empty family).
SubsetMask total_intersection(const FamilyMask& f);

nlohmann::json to_json(const FilterFamily& f);

} // namespace doorlab
