#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "womkit/memory_state.hpp"

namespace womkit::search {

// Domination relation between a set of states to cover (`lower`) and the
// states available as codewords (`upper`): upper[y] covers lower[x] when
// lower[x] <= upper[y].
struct CoverInstance {
  std::vector<MemoryState> lower;
  std::vector<MemoryState> upper;
  std::vector<std::vector<int>> covers;     // per upper index: lower indices
  std::vector<std::vector<int>> covered_by; // per lower index: upper indices
  int max_cover = 0;
};

CoverInstance make_cover_instance(std::vector<MemoryState> lower, std::vector<MemoryState> upper);
// lower = E_q(n, i-1), upper = E_q(n, i).
CoverInstance slice_cover_instance(int q, int n, int i);

struct SetCoverResult {
  int best = 0;              // size of the smallest cover found
  std::vector<int> witness;  // upper indices, ascending
  int lower_bound = 0;       // proven lower bound on the optimum
  bool exact = false;        // best == optimum
  long long nodes = 0;
};

// Minimum number of upper states dominating every lower state.
// `known_lower_bound` lets the caller stop early once it is met.
// `fix_first_choice` restricts the root branch to one candidate; only
// valid when every candidate of the first branching element is equivalent
// under a symmetry of the instance.
SetCoverResult min_set_cover(const CoverInstance& inst, long long budget, int known_lower_bound = 0,
                             bool fix_first_choice = false);

enum class SearchStatus { Found, Infeasible, BudgetExhausted };

struct CoverBelowResult {
  SearchStatus status = SearchStatus::Infeasible;
  std::vector<int> witness;
  long long nodes = 0;
};

// Decision version: a cover with at most `limit` upper states.
CoverBelowResult find_cover_below(const CoverInstance& inst, int limit, long long budget, bool fix_first_choice = false);

// Greedy cover: repeatedly take the upper state covering the most
// uncovered lower states (lowest index on ties).
std::vector<int> greedy_cover(const CoverInstance& inst);

struct DisjointCoverResult {
  SearchStatus status = SearchStatus::Infeasible;
  std::vector<std::vector<int>> classes;  // upper indices per class
  long long nodes = 0;
};

// Looks for k pairwise disjoint subsets of `upper`, each covering all of
// `lower`. Unused upper states are left out of the classes.
DisjointCoverResult find_disjoint_covers(const CoverInstance& inst, int k, long long budget);

// Quick lower bound for the same problem: peel greedy covers off the
// remaining upper states until none is left.
std::vector<std::vector<int>> greedy_disjoint_covers(const CoverInstance& inst);

}  // namespace womkit::search
