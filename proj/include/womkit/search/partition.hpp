#pragma once

#include <optional>
#include <string>
#include <vector>

#include "womkit/table_code.hpp"

namespace womkit::search {

// Disjoint codeword classes inside E_q(n, i), each dominating every state
// of E_q(n, i-1). The union may be a strict subset of the slice.
struct Partition {
  int q = 2;
  int n = 1;
  int i = 1;
  std::vector<CodewordClass> classes;

  int size() const noexcept { return static_cast<int>(classes.size()); }
};

struct PartitionCheck {
  bool ok = true;
  std::string problem;  // empty when ok
};

// Direct double loop over E_q(n, i-1) x class; also checks weights and
// pairwise disjointness.
PartitionCheck check_partition(const Partition& p);

struct PartitionResult {
  Partition partition;
  bool exact = false;    // cardinality proven maximal
  int upper_bound = 0;   // proven upper bound on the maximum
  long long nodes = 0;
};

// Largest suitable partition of E_q(n, i). Exhaustive only when the slice
// has at most `exact_limit` states; otherwise (or when the node budget
// runs out) returns the best partition found with exact = false.
PartitionResult max_partition(int q, int n, int i, long long budget, std::size_t exact_limit = 70);

// Re-partitions generation i of a code into `target_classes` classes that
// each cover Image(E_{i-1}). States listed in `promote` are first moved out
// of generation i into a new last class of generation i-1. States of
// generation i not needed by the search are appended to the last class.
// Throws NoSuchReorganization when no such partition is found.
TableCode reorganize_merged_generation(const TableCode& code, int i, int target_classes,
                                       const std::vector<MemoryState>& promote, long long budget);

}  // namespace womkit::search
