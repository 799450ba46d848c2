#include "doorlab/filters.hpp"

#include "doorlab/error.hpp"

#include <functional>

namespace doorlab {

bool is_algebra(const FamilyMask& f) {
  if (f.empty()) return false;
  GroundSet g = f.ground();
  auto members = f.members();
  for (SubsetMask a : members) {
    if (!f.contains(a.complement(g))) return false;
    for (SubsetMask b : members)
      if (!f.contains(a | b)) return false;
  }
  return true;
}

Algebra::Algebra(const FamilyMask& f) : members_(f) {
  if (!is_algebra(f)) throw DomainError("family is not an algebra of sets");
}

std::vector<SubsetMask> Algebra::atoms() const {
  std::vector<SubsetMask> out;
  members_.for_each([&](SubsetMask s) {
    if (s.is_empty()) return;
    bool minimal = true;
    members_.for_each([&](SubsetMask t) {
      if (!t.is_empty() && t != s && t.subset_of(s)) minimal = false;
    });
    if (minimal) out.push_back(s);
  });
  return out;
}

Algebra powerset_algebra(GroundSet g) { return Algebra(powerset(g)); }

Algebra algebra_from_partition(GroundSet g, const std::vector<SubsetMask>& blocks) {
  std::uint32_t covered = 0;
  for (SubsetMask b : blocks) {
    if (b.is_empty()) throw DomainError("partition block is empty");
    if (!b.subset_of(SubsetMask::full(g))) throw DomainError("partition block exceeds the ground set");
    if (std::uint32_t twice = covered & b.bits(); twice != 0)
      throw DomainError("point " + std::to_string(std::countr_zero(twice)) + " covered twice");
    covered |= b.bits();
  }
  if (std::uint32_t missing = ~covered & g.full_bits(); missing != 0)
    throw DomainError("point " + std::to_string(std::countr_zero(missing)) + " not covered");

  FamilyMask f(g);
  std::uint32_t k = static_cast<std::uint32_t>(blocks.size());
  for (std::uint32_t choice = 0; choice < (1u << k); ++choice) {
    SubsetMask u;
    for (std::uint32_t i = 0; i < k; ++i)
      if ((choice >> i) & 1u) u = u | blocks[i];
    f.insert(u);
  }
  return Algebra(f);
}

std::vector<Algebra> all_algebras(GroundSet g) {
  std::vector<Algebra> out;
  std::vector<int> block_of(g.size(), 0);
  std::function<void(int, int)> rec = [&](int point, int used) {
    if (point == g.size()) {
      std::vector<SubsetMask> blocks(used);
      for (Point p = 0; p < g.size(); ++p) blocks[block_of[p]] = blocks[block_of[p]] | SubsetMask::singleton(p);
      out.push_back(algebra_from_partition(g, blocks));
      return;
    }
    for (int b = 0; b <= used; ++b) {
      block_of[point] = b;
      rec(point + 1, b == used ? used + 1 : used);
    }
  };
  rec(0, 0);
  return out;
}

SubsetMask total_intersection(const FamilyMask& f) {
  SubsetMask acc = SubsetMask::full(f.ground());
  f.for_each([&](SubsetMask s) { acc = acc & s; });
  return acc;
}

bool is_filter(const FamilyMask& f, const Algebra& sigma) {
  if (!f.subset_of(sigma.members())) throw DomainError("family is not contained in the algebra");
  if (f.empty() || f.contains(SubsetMask::empty())) return false;
  auto members = f.members();
  for (SubsetMask a : members) {
    for (SubsetMask b : members)
      if (!f.contains(a & b)) return false;
    bool upward = true;
    sigma.members().for_each([&](SubsetMask v) {
      if (a.subset_of(v) && !f.contains(v)) upward = false;
    });
    if (!upward) return false;
  }
  return true;
}

bool is_ultrafilter(const FamilyMask& f, const Algebra& sigma) {
  if (!is_filter(f, sigma)) return false;
  GroundSet g = sigma.ground();
  bool exactly_one = true;
  sigma.members().for_each([&](SubsetMask u) {
    if (f.contains(u) == f.contains(u.complement(g))) exactly_one = false;
  });
  return exactly_one;
}

FilterFamily principal_ultrafilter(Point p, const Algebra& sigma) {
  GroundSet g = sigma.ground();
  if (p < 0 || p >= g.size()) throw DomainError("point " + std::to_string(p) + " out of range");
  FamilyMask f(g);
  sigma.members().for_each([&](SubsetMask u) {
    if (u.contains(p)) f.insert(u);
  });
  return {f, sigma, p, total_intersection(f).is_empty()};
}

std::vector<FilterFamily> enumerate_ultrafilters(const Algebra& sigma) {
  std::vector<FilterFamily> out;
  for (SubsetMask atom : sigma.atoms()) {
    FamilyMask f(sigma.ground());
    sigma.members().for_each([&](SubsetMask u) {
      if (atom.subset_of(u)) f.insert(u);
    });
    SubsetMask core = total_intersection(f);
    std::optional<Point> at;
    if (!core.is_empty()) at = core.points().front();
    out.push_back({f, sigma, at, core.is_empty()});
  }
  return out;
}

nlohmann::json to_json(const FilterFamily& f) {
  return {{"members", to_json(f.members)},
          {"hex", to_hex(f.members)},
          {"principal_at", f.principal_at ? nlohmann::json(*f.principal_at) : nlohmann::json(nullptr)},
          {"is_free", f.is_free},
          {"sigma", to_json(f.relative_to.members())}};
}

} // namespace doorlab
