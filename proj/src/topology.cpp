#include "doorlab/topology.hpp"

#include "doorlab/error.hpp"

#include <algorithm>

namespace doorlab {

bool is_topology(const FamilyMask& f) {
  GroundSet g = f.ground();
  if (!f.contains(SubsetMask::empty()) || !f.contains(SubsetMask::full(g))) return false;
  auto members = f.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!f.contains(members[i] | members[j]) || !f.contains(members[i] & members[j])) return false;
  return true;
}

FamilyMask Topology::closeds() const {
  FamilyMask out(ground());
  opens_.for_each([&](SubsetMask s) { out.insert(s.complement(ground())); });
  return out;
}

Topology validate_topology(const FamilyMask& f) {
  GroundSet g = f.ground();
  if (!f.contains(SubsetMask::empty())) throw DomainError("not a topology: empty set missing");
  if (!f.contains(SubsetMask::full(g))) throw DomainError("not a topology: X missing");
  auto members = f.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      SubsetMask a = members[i];
      SubsetMask b = members[j];
      if (!f.contains(a | b))
        throw DomainError("not a topology: " + to_string(a) + " u " + to_string(b) + " = " + to_string(a | b) +
                          " missing");
      if (!f.contains(a & b))
        throw DomainError("not a topology: " + to_string(a) + " n " + to_string(b) + " = " + to_string(a & b) +
                          " missing");
    }
  }
  return Topology(f);
}

Topology trusted_topology(const FamilyMask& f) { return Topology(f); }

bool is_connected(const Topology& t) {
  GroundSet g = t.ground();
  bool clopen = false;
  t.opens().for_each([&](SubsetMask s) {
    if (!s.is_empty() && s != SubsetMask::full(g) && t.is_closed(s)) clopen = true;
  });
  return !clopen;
}

bool is_door(const Topology& t) {
  GroundSet g = t.ground();
  FamilyMask either = t.opens() | t.closeds();
  return either == powerset(g);
}

bool is_connected_door(const Topology& t) { return is_connected(t) && is_door(t); }

SpaceReport space_report(const Topology& t) {
  GroundSet g = t.ground();
  SpaceReport r;
  SubsetMask full = SubsetMask::full(g);
  bool xor_everywhere = true;
  for (std::uint32_t bits = 1; bits < full.bits(); ++bits) {
    SubsetMask s(bits);
    bool open = t.is_open(s);
    bool closed = t.is_closed(s);
    if (open && closed) ++r.clopen_proper_count;
    if (open == closed) xor_everywhere = false;
  }
  r.connected = r.clopen_proper_count == 0;
  r.door = is_door(t);
  r.connected_door = r.connected && r.door;
  if (r.connected_door != xor_everywhere)
    throw std::logic_error("internal: connected-door characterizations disagree");

  for (Point p = 0; p < g.size(); ++p) {
    if (t.is_open(SubsetMask::singleton(p))) r.open_singletons.push_back(p);
    if (t.is_closed(SubsetMask::singleton(p))) r.closed_singletons.push_back(p);
  }
  r.t1 = static_cast<int>(r.closed_singletons.size()) == g.size();
  return r;
}

namespace {

std::vector<SubsetMask> sorted_nonempty(const FamilyMask& f) {
  std::vector<SubsetMask> out;
  f.for_each([&](SubsetMask s) {
    if (!s.is_empty()) out.push_back(s);
  });
  std::sort(out.begin(), out.end(), card_mask_less);
  return out;
}

std::vector<SubsetMask> submasks_sorted(SubsetMask top) {
  std::vector<SubsetMask> out;
  for (std::uint32_t s = top.bits();; s = (s - 1) & top.bits()) {
    out.push_back(SubsetMask(s));
    if (s == 0) break;
  }
  std::sort(out.begin(), out.end(), card_mask_less);
  return out;
}

} // namespace

OccResult occ_satisfied(const Topology& t) {
  if (t.ground().size() < 4) return {};
  auto opens = sorted_nonempty(t.opens());
  auto closeds = sorted_nonempty(t.closeds());
  for (SubsetMask a : opens) {
    for (SubsetMask b : opens) {
      if (!a.disjoint(b)) continue;
      SubsetMask ab = a | b;
      for (SubsetMask c : closeds) {
        if (!c.disjoint(ab)) continue;
        SubsetMask abc = ab | c;
        for (SubsetMask d : closeds) {
          if (d.disjoint(abc)) return {false, OccWitness{a, b, c, d}};
        }
      }
    }
  }
  return {};
}

Lemma1Result lemma1_check(const Topology& t) {
  if (!is_connected_door(t)) throw PreconditionError("lemma1_check requires a connected door topology");
  GroundSet g = t.ground();
  auto opens = sorted_nonempty(t.opens());
  auto closeds = sorted_nonempty(t.closeds());
  for (SubsetMask a : opens) {
    for (SubsetMask b : closeds) {
      if (!a.disjoint(b)) continue;
      SubsetMask rest = (a | b).complement(g);
      for (SubsetMask c : submasks_sorted(rest)) {
        if (!t.is_open(a | c) || !t.is_closed(b | c)) return {false, Lemma1Triple{a, b, c}};
      }
    }
  }
  return {};
}

nlohmann::json to_json(const Topology& t) {
  return {{"n", t.ground().size()},
          {"opens", to_json(t.opens())},
          {"hex", to_hex(t.opens())},
          {"open_count", t.opens().size()}};
}

nlohmann::json to_json(const SpaceReport& r) {
  return {{"connected", r.connected},
          {"door", r.door},
          {"connected_door", r.connected_door},
          {"t1", r.t1},
          {"open_singletons", r.open_singletons},
          {"closed_singletons", r.closed_singletons},
          {"clopen_proper_count", r.clopen_proper_count}};
}

namespace {
template <std::size_t N>
nlohmann::json sets_json(const std::array<SubsetMask, N>& sets) {
  auto arr = nlohmann::json::array();
  for (auto s : sets) arr.push_back(to_json(s));
  return arr;
}
} // namespace

nlohmann::json to_json(const OccResult& r) {
  return {{"satisfied", r.satisfied}, {"witness", r.witness ? sets_json(*r.witness) : nlohmann::json(nullptr)}};
}

nlohmann::json to_json(const Lemma1Result& r) {
  return {{"holds", r.holds},
          {"counterexample", r.counterexample ? sets_json(*r.counterexample) : nlohmann::json(nullptr)}};
}

} // namespace doorlab
