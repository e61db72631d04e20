#include "womkit/search/builders.hpp"

#include <algorithm>
#include <cmath>

#include "womkit/error.hpp"
#include "womkit/search/slice.hpp"

namespace womkit::search {

namespace {

MemoryState append_symbol(const MemoryState& s, int symbol) {
  std::vector<std::uint8_t> cells(s.cells().begin(), s.cells().end());
  cells.push_back(static_cast<std::uint8_t>(symbol));
  return MemoryState(std::move(cells), s.q());
}

MemoryState lift(const MemoryState& s, int q) { return MemoryState(std::vector<std::uint8_t>(s.cells().begin(), s.cells().end()), q); }

// Positions (1-based) of the two units of a binary weight-2 state.
std::pair<int, int> pair_of(const MemoryState& y) {
  int a = 0;
  for (int k = 0; k < y.n(); ++k) {
    if (y[static_cast<std::size_t>(k)] == 0) continue;
    if (!a) {
      a = k + 1;
    } else {
      return {a, k + 1};
    }
  }
  throw WomError(ErrorCode::PreconditionViolation, y.to_string() + " is not a binary weight-2 state");
}

MemoryState pair_state(int n, int a, int b) {
  return MemoryState::zeros(n, 2).with_cell(static_cast<std::size_t>(a - 1), 1).with_cell(static_cast<std::size_t>(b - 1), 1);
}

}  // namespace

Partition build_singletons(int q, int n) {
  Partition p{q, n, 1, {}};
  for (int j = 1; j <= n; ++j) p.classes.push_back({unit_state(q, n, j)});
  return p;
}

Partition build_prop_recursive(int q, int n, int i, const std::vector<Partition>& parts) {
  const int depth = std::min(i - 1, q - 1);
  if (n < 2 || i < 1 || static_cast<int>(parts.size()) != depth + 1) {
    throw WomError(ErrorCode::PreconditionViolation, "recursive builder needs " + std::to_string(depth + 1) + " input partitions");
  }
  for (int s = 0; s <= depth; ++s) {
    const auto& part = parts[static_cast<std::size_t>(s)];
    if (part.q != q || part.n != n - 1 || part.i != i - s) {
      throw WomError(ErrorCode::PreconditionViolation, "input " + std::to_string(s) + " must partition E_" + std::to_string(q) + "(" +
                                                           std::to_string(n - 1) + "," + std::to_string(i - s) + ")");
    }
  }
  int k = parts.front().size();
  for (const auto& part : parts) k = std::min(k, part.size());
  Partition out{q, n, i, {}};
  for (int c = 0; c < k; ++c) {
    CodewordClass cls;
    for (int s = 0; s <= depth; ++s) {
      for (const auto& y : parts[static_cast<std::size_t>(s)].classes[static_cast<std::size_t>(c)]) cls.push_back(append_symbol(y, s));
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

Partition build_prop_recursive(int q, int n, int i, const Partition& same_weight, const Partition& lower_weight) {
  if (std::min(i - 1, q - 1) > 1) {
    throw WomError(ErrorCode::PreconditionViolation, "two-input form needs q = 2 or i <= 2");
  }
  if (i == 1) return build_prop_recursive(q, n, i, std::vector<Partition>{same_weight});
  return build_prop_recursive(q, n, i, std::vector<Partition>{same_weight, lower_weight});
}

Partition build_prop_doubling(int n, const Partition& input) {
  if (input.q != 2 || input.n != n || input.i != 2) throw WomError(ErrorCode::PreconditionViolation, "doubling needs a partition of E_2(n,2)");
  const int m = 2 * n;
  Partition out{2, m, 2, {}};
  for (const auto& cls : input.classes) {
    CodewordClass same;
    CodewordClass cross;
    for (const auto& y : cls) {
      const auto [a, b] = pair_of(y);
      same.push_back(pair_state(m, a, b));
      same.push_back(pair_state(m, a + n, b + n));
      cross.push_back(pair_state(m, a, b + n));
      cross.push_back(pair_state(m, a + n, b));
    }
    out.classes.push_back(std::move(same));
    out.classes.push_back(std::move(cross));
  }
  CodewordClass diagonal;
  for (int j = 1; j <= n; ++j) diagonal.push_back(pair_state(m, j, j + n));
  out.classes.push_back(std::move(diagonal));
  return out;
}

Partition build_prop_qary_even(int q, const Partition& binary) {
  if (q < 3 || binary.q != 2 || binary.i != 2) throw WomError(ErrorCode::PreconditionViolation, "needs q >= 3 and a partition of E_2(n,2)");
  Partition out{q, binary.n, 2, {}};
  for (const auto& cls : binary.classes) {
    CodewordClass lifted;
    for (const auto& y : cls) lifted.push_back(lift(y, q));
    out.classes.push_back(std::move(lifted));
  }
  CodewordClass doubles;
  for (int k = 1; k <= binary.n; ++k) doubles.push_back(unit_state(q, binary.n, k, 2));
  out.classes.push_back(std::move(doubles));
  return out;
}

Partition build_prop_circular(int q, int m) {
  if (q < 3 || m < 0) throw WomError(ErrorCode::PreconditionViolation, "circular builder needs q >= 3 and m >= 0");
  const int len = 2 * m + 1;
  std::vector<std::vector<std::uint8_t>> base;
  for (int k = 0; k <= m; ++k) {
    std::vector<std::uint8_t> v(static_cast<std::size_t>(len), 0);
    ++v[static_cast<std::size_t>(m - k)];
    ++v[static_cast<std::size_t>(m + k)];
    base.push_back(v);
  }
  Partition out{q, len, 2, {}};
  for (int r = 0; r < len; ++r) {
    CodewordClass cls;
    for (const auto& v : base) {
      std::vector<std::uint8_t> rotated(v.size());
      for (int j = 0; j < len; ++j) rotated[static_cast<std::size_t>((j + r) % len)] = v[static_cast<std::size_t>(j)];
      cls.emplace_back(std::move(rotated), q);
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

TableCode greedy_laminar(int q, int n, int t, long long budget) {
  if (t < 1 || t > n * (q - 1)) {
    throw WomError(ErrorCode::PreconditionViolation, "greedy needs 1 <= t <= n(q-1), got t=" + std::to_string(t));
  }
  std::vector<Generation> gens;
  for (int i = 1; i <= t; ++i) {
    auto classes = max_partition(q, n, i, budget).partition.classes;
    const auto slice = enumerate_slice(q, n, i).states;
    std::vector<char> used(slice.size(), 0);
    for (const auto& cls : classes) {
      for (const auto& y : cls) used[static_cast<std::size_t>(std::lower_bound(slice.begin(), slice.end(), y, listing_order) - slice.begin())] = 1;
    }
    for (std::size_t k = 0; k < slice.size(); ++k) {
      if (!used[k]) classes.back().push_back(slice[k]);
    }
    std::sort(classes.back().begin(), classes.back().end(), listing_order);
    gens.push_back(std::move(classes));
  }
  return TableCode(q, n, std::move(gens));
}

SingleCellAssignment single_cell_assignment(int q, int t) {
  if (t < 1) throw WomError(ErrorCode::PreconditionViolation, "need t >= 1");
  if (t > q) throw WomError(ErrorCode::TooManyWrites, std::to_string(t) + " writes do not fit one " + std::to_string(q) + "-ary cell");
  SingleCellAssignment out;
  out.params.q = q;
  out.params.n = 1;
  const int base = q / t;
  const int extra = q % t;
  int next = 0;
  for (int g = 0; g < t; ++g) {
    const int size = base + (g < extra ? 1 : 0);
    out.params.sizes.push_back(size);
    out.rate += std::log2(static_cast<double>(size));
    std::vector<int> range;
    for (int v = 0; v < size; ++v) range.push_back(next++);
    out.value_ranges.push_back(std::move(range));
  }
  return out;
}

}  // namespace womkit::search
