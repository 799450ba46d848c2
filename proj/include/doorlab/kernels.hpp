#pragma once

// Enumeration kernels. Each kernel has a serial reference implementation and
// an OpenMP implementation that partitions the search space by prefix and
// merges the per-partition results in partition order. Both return results in
// the same canonical order, so their outputs compare equal.

#include "doorlab/rational.hpp"
#include "doorlab/set_core.hpp"

#include <cstdint>
#include <vector>

namespace doorlab::kernels {

// Raw family bitsets of all topologies, ascending.
struct TopologyScan {
  std::vector<std::uint64_t> families;
  std::uint64_t scanned = 0; // families tested (raw) or search nodes (dfs)
};

enum class Equation { Eq1Disjoint, Eq2 };

// Distinct candidate values with precomputed exact sum relations, so that
// kernels test identities by table lookup on value indices.
class ValueTable {
public:
  explicit ValueTable(std::vector<ExactComplex> values);

  int size() const { return k_; }
  const std::vector<ExactComplex>& values() const { return values_; }
  // v[i] + v[j] == v[p] + v[q]
  bool eq2(int i, int j, int p, int q) const { return eq2_[((i * k_ + j) * k_ + p) * k_ + q]; }
  // v[i] + v[j] == v[p]
  bool eq1(int i, int j, int p) const { return eq1_[(i * k_ + j) * k_ + p]; }

private:
  int k_;
  std::vector<ExactComplex> values_;
  std::vector<char> eq2_;
  std::vector<char> eq1_;
};

// One solution: value index per subset mask (entries outside the domain are 0).
using Assignment = std::vector<std::uint8_t>;

struct SolveScan {
  std::vector<Assignment> solutions; // ascending lexicographic by mask
  std::uint64_t nodes = 0;
};

namespace serial {
// All 2^(2^n) families, n <= 4.
TopologyScan raw_scan(GroundSet g);
// Closure-guided DFS over candidate open sets in mask order, n <= 6.
TopologyScan closure_dfs(GroundSet g);
// Backtracking over subsets in (cardinality, mask) order with early cutoffs.
// Returns the solutions on `domain` that use every value in the table.
SolveScan solve_backtrack(const FamilyMask& domain, Equation eq, const ValueTable& table);
} // namespace serial

namespace omp {
TopologyScan raw_scan(GroundSet g, int workers);
TopologyScan closure_dfs(GroundSet g, int workers);
SolveScan solve_backtrack(const FamilyMask& domain, Equation eq, const ValueTable& table, int workers);
} // namespace omp

// Default worker count (available parallelism).
int default_workers();

// Fast axiom test on a raw family bitset.
bool is_topology_bits(std::uint64_t family, std::uint32_t full);

} // namespace doorlab::kernels
