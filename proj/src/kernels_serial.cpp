#include "kernels_common.hpp"

#include "doorlab/error.hpp"

#include <set>
#include <thread>

namespace doorlab::kernels {

ValueTable::ValueTable(std::vector<ExactComplex> values) {
  std::set<ExactComplex> distinct(values.begin(), values.end());
  if (distinct.size() != values.size()) throw DomainError("value set contains duplicates");
  if (distinct.empty() || distinct.size() > 8) throw DomainError("value set must have 1..8 values");
  values_.assign(distinct.begin(), distinct.end());
  k_ = static_cast<int>(values_.size());
  eq2_.assign(static_cast<std::size_t>(k_) * k_ * k_ * k_, 0);
  eq1_.assign(static_cast<std::size_t>(k_) * k_ * k_, 0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) {
      ExactComplex lhs = values_[i] + values_[j];
      for (int p = 0; p < k_; ++p) {
        eq1_[(i * k_ + j) * k_ + p] = lhs == values_[p];
        for (int q = 0; q < k_; ++q) eq2_[((i * k_ + j) * k_ + p) * k_ + q] = lhs == values_[p] + values_[q];
      }
    }
}

int default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

bool is_topology_bits(std::uint64_t family, std::uint32_t full) {
  using detail::has;
  if (!has(family, 0) || !has(family, full)) return false;
  for (std::uint64_t ra = family; ra != 0; ra &= ra - 1) {
    auto a = static_cast<std::uint32_t>(std::countr_zero(ra));
    for (std::uint64_t rb = ra & (ra - 1); rb != 0; rb &= rb - 1) {
      auto b = static_cast<std::uint32_t>(std::countr_zero(rb));
      if (!has(family, a | b) || !has(family, a & b)) return false;
    }
  }
  return true;
}

namespace serial {

TopologyScan raw_scan(GroundSet g) {
  if (g.size() > 4) throw CapabilityError("raw_scan: n exceeds cap 4");
  TopologyScan out;
  std::uint64_t count = std::uint64_t{1} << g.subset_count();
  for (std::uint64_t f = 0; f < count; ++f)
    if (is_topology_bits(f, g.full_bits())) out.families.push_back(f);
  out.scanned = count;
  return out;
}

TopologyScan closure_dfs(GroundSet g) {
  TopologyScan out;
  detail::dfs(detail::dfs_root(g), g.full_bits(), out.families, out.scanned);
  std::sort(out.families.begin(), out.families.end());
  return out;
}

SolveScan solve_backtrack(const FamilyMask& domain, Equation eq, const ValueTable& table) {
  auto plan = detail::make_plan(domain, eq);
  SolveScan out;
  Assignment v(plan.subset_count, 0);
  detail::backtrack(plan, table, 0, v, 0, out.solutions, out.nodes);
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

} // namespace serial
} // namespace doorlab::kernels
