#pragma once

#include "doorlab/set_core.hpp"

#include <array>
#include <optional>
#include <vector>

namespace doorlab {

// True iff the family contains the empty set and X and is closed under
// pairwise union and intersection.
bool is_topology(const FamilyMask& f);

// A family known to satisfy the topology axioms.
class Topology {
public:
  const FamilyMask& opens() const { return opens_; }
  GroundSet ground() const { return opens_.ground(); }

  bool is_open(SubsetMask s) const { return opens_.contains(s); }
  bool is_closed(SubsetMask s) const { return opens_.contains(s.complement(ground())); }
  // Family of closed sets.
  FamilyMask closeds() const;

  friend bool operator==(const Topology&, const Topology&) = default;
  friend auto operator<=>(const Topology& a, const Topology& b) { return a.opens_ <=> b.opens_; }

private:
  friend Topology validate_topology(const FamilyMask& f);
  friend Topology trusted_topology(const FamilyMask& f);
  explicit Topology(FamilyMask opens) : opens_(opens) {}

  FamilyMask opens_;
};

// Throws DomainError describing the first violated axiom and its witnesses.
Topology validate_topology(const FamilyMask& f);

// Wraps a family the caller has already checked (enumeration kernels).
Topology trusted_topology(const FamilyMask& f);

struct SpaceReport {
  bool connected = false;
  bool door = false;
  bool connected_door = false;
  bool t1 = false;
  std::vector<Point> open_singletons;
  std::vector<Point> closed_singletons;
  int clopen_proper_count = 0;
};

SpaceReport space_report(const Topology& t);
bool is_connected(const Topology& t);
bool is_door(const Topology& t);
bool is_connected_door(const Topology& t);

// Four pairwise disjoint nonempty sets: first two open, last two closed.
using OccWitness = std::array<SubsetMask, 4>;

struct OccResult {
  bool satisfied = true;
  std::optional<OccWitness> witness;
};

// Open-closed condition. The witness, if any, is the least quadruple in
// (cardinality, mask) order compared position by position.
OccResult occ_satisfied(const Topology& t);

// (A open, B closed, C) with A, B disjoint and nonempty, C inside X \ (A u B).
using Lemma1Triple = std::array<SubsetMask, 3>;

struct Lemma1Result {
  bool holds = true;
  std::optional<Lemma1Triple> counterexample;
};

// For every disjoint nonempty A open, B closed and every C avoiding both:
// A u C is open and B u C is closed. Throws PreconditionError unless t is
// connected-door.
Lemma1Result lemma1_check(const Topology& t);

nlohmann::json to_json(const Topology& t);
nlohmann::json to_json(const SpaceReport& r);
nlohmann::json to_json(const OccResult& r);
nlohmann::json to_json(const Lemma1Result& r);

} // namespace doorlab
