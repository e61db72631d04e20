#pragma once

#include <cstdint>
#include <vector>

#include "womkit/memory_state.hpp"

namespace womkit::search {

// E_q(n, i): q-ary length-n states of l1-weight i.
struct WeightSlice {
  int q = 2;
  int n = 1;
  int i = 0;
  std::vector<MemoryState> states;  // listing order (descending lexicographic)
};

WeightSlice enumerate_slice(int q, int n, int i);

// |E_q(n, i)| by the convolution recurrence; independent of enumeration.
std::uint64_t slice_size(int q, int n, int i);

std::uint64_t binomial(int n, int k);

// e_j scaled: the state with value v at 1-based position j, zero elsewhere.
MemoryState unit_state(int q, int n, int j, int v = 1);

}  // namespace womkit::search
