#pragma once

// Node-level pieces shared by the serial and OpenMP kernels.

#include "doorlab/kernels.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace doorlab::kernels::detail {

inline bool has(std::uint64_t family, std::uint32_t s) { return (family >> s) & 1u; }
inline std::uint64_t bit(std::uint32_t s) { return std::uint64_t{1} << s; }

// ---- closure DFS ----------------------------------------------------------

struct DfsState {
  std::uint64_t family;   // closed under u and n, contains empty and X
  std::uint64_t excluded; // candidates decided "not open"
  std::uint32_t next;     // next candidate subset to decide
};

// Smallest family containing `family` and s that is closed under pairwise
// union and intersection. `family` must already be closed.
inline std::uint64_t close_with(std::uint64_t family, std::uint32_t s) {
  std::array<std::uint32_t, 64> work{};
  int top = 0;
  family |= bit(s);
  work[top++] = s;
  while (top > 0) {
    std::uint32_t t = work[--top];
    for (std::uint64_t rest = family; rest != 0; rest &= rest - 1) {
      auto m = static_cast<std::uint32_t>(std::countr_zero(rest));
      std::uint32_t u = t | m;
      std::uint32_t i = t & m;
      if (!has(family, u)) {
        family |= bit(u);
        work[top++] = u;
      }
      if (!has(family, i)) {
        family |= bit(i);
        work[top++] = i;
      }
    }
  }
  return family;
}

inline DfsState dfs_root(GroundSet g) { return {bit(0) | bit(g.full_bits()), 0, 1}; }

// Visits the subtree under `st`, appending completed families to `out`.
// Every candidate in mask order is either excluded or added with its closure;
// an inclusion whose closure hits an excluded candidate is cut.
inline void dfs(DfsState st, std::uint32_t full, std::vector<std::uint64_t>& out, std::uint64_t& nodes) {
  ++nodes;
  while (st.next < full && has(st.family, st.next)) ++st.next;
  if (st.next >= full) {
    out.push_back(st.family);
    return;
  }
  std::uint32_t s = st.next;
  dfs({st.family, st.excluded | bit(s), s + 1}, full, out, nodes);
  std::uint64_t grown = close_with(st.family, s);
  if ((grown & st.excluded) == 0) dfs({grown, st.excluded, s + 1}, full, out, nodes);
}

// Same traversal as dfs(), stopping at candidate `limit` and recording the
// states reached there (in traversal order) instead of descending.
inline void dfs_frontier(DfsState st, std::uint32_t full, std::uint32_t limit, std::vector<DfsState>& frontier,
                         std::uint64_t& nodes) {
  while (st.next < full && has(st.family, st.next)) ++st.next;
  if (st.next >= full || st.next >= limit) {
    frontier.push_back(st);
    return;
  }
  ++nodes;
  std::uint32_t s = st.next;
  dfs_frontier({st.family, st.excluded | bit(s), s + 1}, full, limit, frontier, nodes);
  std::uint64_t grown = close_with(st.family, s);
  if ((grown & st.excluded) == 0) dfs_frontier({grown, st.excluded, s + 1}, full, limit, frontier, nodes);
}

// ---- solution backtracking -----------------------------------------------

struct Constraint {
  std::uint8_t a, b, u, i; // masks; i unused for Eq1
};

struct SolvePlan {
  std::vector<std::uint32_t> order;                 // domain in (cardinality, mask) order
  std::vector<std::vector<Constraint>> checks;      // per position: constraints completed there
  std::uint32_t subset_count = 0;
  Equation eq = Equation::Eq2;
};

inline SolvePlan make_plan(const FamilyMask& domain, Equation eq) {
  SolvePlan plan;
  plan.eq = eq;
  plan.subset_count = domain.ground().subset_count();
  for (auto s : domain.members()) plan.order.push_back(s.bits());
  std::sort(plan.order.begin(), plan.order.end(), [](std::uint32_t x, std::uint32_t y) {
    return card_mask_less(SubsetMask(x), SubsetMask(y));
  });
  std::vector<int> pos(plan.subset_count, -1);
  for (std::size_t k = 0; k < plan.order.size(); ++k) pos[plan.order[k]] = static_cast<int>(k);
  plan.checks.resize(plan.order.size());

  for (std::uint32_t a : plan.order) {
    for (std::uint32_t b : plan.order) {
      if (b <= a) continue;
      std::uint32_t u = a | b;
      std::uint32_t i = a & b;
      if (eq == Equation::Eq2) {
        if (u == b || u == a) continue; // comparable pair: identity is trivial
        if (pos[u] < 0 || pos[i] < 0) continue;
        int last = std::max({pos[a], pos[b], pos[u], pos[i]});
        plan.checks[last].push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                                     static_cast<std::uint8_t>(u), static_cast<std::uint8_t>(i)});
      } else {
        if (a == 0 || i != 0 || pos[u] < 0) continue;
        int last = std::max({pos[a], pos[b], pos[u]});
        plan.checks[last].push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                                     static_cast<std::uint8_t>(u), 0});
      }
    }
  }
  return plan;
}

inline bool checks_pass(const SolvePlan& plan, const ValueTable& table, std::size_t idx, const Assignment& v) {
  for (const auto& c : plan.checks[idx]) {
    bool ok = plan.eq == Equation::Eq2 ? table.eq2(v[c.a], v[c.b], v[c.u], v[c.i]) : table.eq1(v[c.a], v[c.b], v[c.u]);
    if (!ok) return false;
  }
  return true;
}

inline void backtrack(const SolvePlan& plan, const ValueTable& table, std::size_t idx, Assignment& v,
                      std::uint32_t used, std::vector<Assignment>& out, std::uint64_t& nodes) {
  ++nodes;
  int k = table.size();
  std::uint32_t all = (1u << k) - 1;
  if (idx == plan.order.size()) {
    if (used == all) out.push_back(v);
    return;
  }
  int missing = k - std::popcount(used);
  if (missing > static_cast<int>(plan.order.size() - idx)) return;
  std::uint32_t s = plan.order[idx];
  for (int val = 0; val < k; ++val) {
    v[s] = static_cast<std::uint8_t>(val);
    if (checks_pass(plan, table, idx, v)) backtrack(plan, table, idx + 1, v, used | (1u << val), out, nodes);
  }
  v[s] = 0;
}

} // namespace doorlab::kernels::detail
