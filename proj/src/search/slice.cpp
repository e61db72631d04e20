#include "womkit/search/slice.hpp"

#include <algorithm>

#include "womkit/error.hpp"

namespace womkit::search {

namespace {

void fill(int q, int n, int remaining, std::vector<std::uint8_t>& prefix, std::vector<MemoryState>& out) {
  const int pos = static_cast<int>(prefix.size());
  if (pos == n) {
    if (remaining == 0) out.emplace_back(prefix, q);
    return;
  }
  const int cells_left = n - pos - 1;
  const int hi = std::min(q - 1, remaining);
  const int lo = std::max(0, remaining - cells_left * (q - 1));
  for (int v = hi; v >= lo; --v) {
    prefix.push_back(static_cast<std::uint8_t>(v));
    fill(q, n, remaining - v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

WeightSlice enumerate_slice(int q, int n, int i) {
  if (q < 2 || n < 1) throw WomError(ErrorCode::SchemaError, "slice needs q >= 2 and n >= 1");
  if (i < 0 || i > n * (q - 1)) {
    throw WomError(ErrorCode::PreconditionViolation, "weight " + std::to_string(i) + " not in 0.." + std::to_string(n * (q - 1)));
  }
  WeightSlice slice{q, n, i, {}};
  std::vector<std::uint8_t> prefix;
  fill(q, n, i, prefix, slice.states);
  return slice;
}

std::uint64_t slice_size(int q, int n, int i) {
  if (i < 0 || i > n * (q - 1)) return 0;
  std::vector<std::uint64_t> row{1};
  for (int len = 1; len <= n; ++len) {
    std::vector<std::uint64_t> next(row.size() + static_cast<std::size_t>(q - 1), 0);
    for (std::size_t w = 0; w < row.size(); ++w) {
      for (int v = 0; v < q; ++v) next[w + static_cast<std::size_t>(v)] += row[w];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(i)];
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
  return r;
}

MemoryState unit_state(int q, int n, int j, int v) {
  return MemoryState::zeros(n, q).with_cell(static_cast<std::size_t>(j - 1), static_cast<std::uint8_t>(v));
}

}  // namespace womkit::search
