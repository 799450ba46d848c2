#include "kernels_common.hpp"

#include "doorlab/error.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace doorlab::kernels::omp {

namespace {

int resolve(int workers) { return workers > 0 ? workers : default_workers(); }

template <class T>
std::vector<T> concat(std::vector<std::vector<T>>& parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<T> out;
  out.reserve(total);
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

} // namespace

TopologyScan raw_scan(GroundSet g, int workers) {
  if (g.size() > 4) throw CapabilityError("raw_scan: n exceeds cap 4");
  const std::uint64_t count = std::uint64_t{1} << g.subset_count();
  const std::uint32_t full = g.full_bits();
  const std::int64_t chunk = 1024;
  const auto chunks = static_cast<std::int64_t>((count + chunk - 1) / chunk);
  std::vector<std::vector<std::uint64_t>> parts(chunks);

#pragma omp parallel for schedule(dynamic, 4) num_threads(resolve(workers))
  for (std::int64_t c = 0; c < chunks; ++c) {
    std::uint64_t lo = static_cast<std::uint64_t>(c) * chunk;
    std::uint64_t hi = std::min<std::uint64_t>(count, lo + chunk);
    for (std::uint64_t f = lo; f < hi; ++f)
      if (is_topology_bits(f, full)) parts[c].push_back(f);
  }

  TopologyScan out;
  out.families = concat(parts);
  out.scanned = count;
  return out;
}

TopologyScan closure_dfs(GroundSet g, int workers) {
  const std::uint32_t full = g.full_bits();
  // Decide the first candidates serially; each frontier state roots an
  // independent subtree.
  const std::uint32_t limit = std::min<std::uint32_t>(full, g.size() <= 3 ? 3 : 12);
  std::vector<detail::DfsState> frontier;
  std::uint64_t head_nodes = 0;
  detail::dfs_frontier(detail::dfs_root(g), full, limit, frontier, head_nodes);

  const auto tasks = static_cast<std::int64_t>(frontier.size());
  std::vector<std::vector<std::uint64_t>> parts(tasks);
  std::vector<std::uint64_t> nodes(tasks, 0);

#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve(workers))
  for (std::int64_t t = 0; t < tasks; ++t) detail::dfs(frontier[t], full, parts[t], nodes[t]);

  TopologyScan out;
  out.families = concat(parts);
  std::sort(out.families.begin(), out.families.end());
  out.scanned = head_nodes;
  for (auto n : nodes) out.scanned += n;
  return out;
}

SolveScan solve_backtrack(const FamilyMask& domain, Equation eq, const ValueTable& table, int workers) {
  const auto plan = detail::make_plan(domain, eq);
  const int k = table.size();
  // Fix the values of the first `depth` subsets in the search order.
  std::size_t depth = 0;
  std::int64_t tasks = 1;
  while (depth < plan.order.size() && tasks < 64) {
    ++depth;
    tasks *= k;
  }

  std::vector<std::vector<Assignment>> parts(tasks);
  std::vector<std::uint64_t> nodes(tasks, 0);

#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve(workers))
  for (std::int64_t t = 0; t < tasks; ++t) {
    Assignment v(plan.subset_count, 0);
    std::uint32_t used = 0;
    std::int64_t code = t;
    bool alive = true;
    // Most significant digit first so task order is lexicographic order.
    std::vector<int> digits(depth);
    for (std::size_t d = depth; d-- > 0;) {
      digits[d] = static_cast<int>(code % k);
      code /= k;
    }
    for (std::size_t d = 0; d < depth && alive; ++d) {
      v[plan.order[d]] = static_cast<std::uint8_t>(digits[d]);
      used |= 1u << digits[d];
      alive = detail::checks_pass(plan, table, d, v);
    }
    if (alive) detail::backtrack(plan, table, depth, v, used, parts[t], nodes[t]);
  }

  SolveScan out;
  out.solutions = concat(parts);
  std::sort(out.solutions.begin(), out.solutions.end());
  for (auto n : nodes) out.nodes += n;
  return out;
}

} // namespace doorlab::kernels::omp
