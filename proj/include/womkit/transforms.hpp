#pragma once

#include <vector>

#include "womkit/table_code.hpp"

namespace womkit {

// [n, t+1 : 1, M_1, ..., M_t] with generation 1 = {0^n}.
TableCode prepend_zero_generation(const TableCode& code);

// Replaces generations first..last (1-based, inclusive) by one generation
// holding their classes in order. Throws MergedCodeInvalid if the result
// fails verify_wom.
TableCode merge_generations(const TableCode& code, int first, int last);

// Generation i becomes one generation per group, in the given order.
// `groups` must partition the 1-based class indices of generation i.
// Throws SplitCodeInvalid if the result fails verify_wom.
TableCode split_generation(const TableCode& code, int i, const std::vector<std::vector<int>>& groups);

// Side-by-side code: cells of `first` followed by cells of `second`;
// generation i class (a-1)*M2_i + b is class a of `first` times class b
// of `second`. Throws GenerationCountMismatch unless t and q agree.
TableCode product_code(const TableCode& first, const TableCode& second);

}  // namespace womkit
