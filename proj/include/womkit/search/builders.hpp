#pragma once

#include <vector>

#include "womkit/code_params.hpp"
#include "womkit/search/partition.hpp"

namespace womkit::search {

// {e_1}, ..., {e_n} in E_q(n, 1).
Partition build_singletons(int q, int n);

// Suffix construction for E_q(n, i): class k is the union over
// s = 0..min(i-1, q-1) of parts[s].classes[k] with symbol s appended, where
// parts[s] is a suitable partition of E_q(n-1, i-s). The result has
// min_s |parts[s]| classes.
Partition build_prop_recursive(int q, int n, int i, const std::vector<Partition>& parts);
// Two-input form (binary, or i <= 2): partitions of E_q(n-1, i) and E_q(n-1, i-1).
Partition build_prop_recursive(int q, int n, int i, const Partition& same_weight, const Partition& lower_weight);

// Suitable partition of E_2(n, 2) into 2|input| + 1 classes over E_2(2n, 2).
Partition build_prop_doubling(int n, const Partition& input);

// Binary partition of E_2(n, 2) lifted to q >= 3 plus the class {2 e_k}.
Partition build_prop_qary_even(int q, const Partition& binary);

// 2m+1 rotations of {e_{m+1-k} + e_{m+1+k} : 0 <= k <= m} in E_q(2m+1, 2), q >= 3.
Partition build_prop_circular(int q, int m);

// Every write reuses the same partition-search per weight: generation i is
// max_partition(q, n, i), with states the search left unused appended to the
// generation's last class.
TableCode greedy_laminar(int q, int n, int t, long long budget);

struct SingleCellAssignment {
  CodeParams params;                          // [1, t : M_1..M_t]_q
  double rate = 0.0;
  std::vector<std::vector<int>> value_ranges; // cell values per generation
};

// One q-ary cell, t writes: sizes as equal as possible with sum <= q.
SingleCellAssignment single_cell_assignment(int q, int t);

}  // namespace womkit::search
