#include "womkit/search/partition.hpp"

#include <algorithm>
#include <set>

#include "womkit/error.hpp"
#include "womkit/properties.hpp"
#include "womkit/search/bounds.hpp"
#include "womkit/search/cover.hpp"
#include "womkit/search/slice.hpp"

namespace womkit::search {

namespace {

CodewordClass to_states(const CoverInstance& inst, const std::vector<int>& idx) {
  CodewordClass cls;
  for (int y : idx) cls.push_back(inst.upper[static_cast<std::size_t>(y)]);
  std::sort(cls.begin(), cls.end(), listing_order);
  return cls;
}

void canonical_order(std::vector<CodewordClass>& classes) {
  std::sort(classes.begin(), classes.end(), [](const CodewordClass& a, const CodewordClass& b) { return listing_order(a.front(), b.front()); });
}

}  // namespace

PartitionCheck check_partition(const Partition& p) {
  const auto lower = p.i > 0 ? enumerate_slice(p.q, p.n, p.i - 1).states : std::vector<MemoryState>{};
  std::set<MemoryState> seen;
  for (std::size_t c = 0; c < p.classes.size(); ++c) {
    const auto& cls = p.classes[c];
    const std::string where = "class " + std::to_string(c + 1);
    if (cls.empty()) return {false, where + " is empty"};
    for (const auto& y : cls) {
      if (y.n() != p.n || y.q() != p.q || y.weight() != p.i) return {false, where + " holds " + y.to_string() + " outside the slice"};
      if (!seen.insert(y).second) return {false, y.to_string() + " appears in two classes"};
    }
    for (const auto& x : lower) {
      bool hit = false;
      for (const auto& y : cls) {
        bool below = true;
        for (int k = 0; k < p.n && below; ++k) below = x[static_cast<std::size_t>(k)] <= y[static_cast<std::size_t>(k)];
        if (below) {
          hit = true;
          break;
        }
      }
      if (!hit) return {false, where + " does not cover " + x.to_string()};
    }
  }
  return {};
}

PartitionResult max_partition(int q, int n, int i, long long budget, std::size_t exact_limit) {
  if (q < 2 || n < 1 || i < 1 || i > n * (q - 1)) {
    throw WomError(ErrorCode::PreconditionViolation, "need 1 <= i <= n(q-1)");
  }
  const auto inst = slice_cover_instance(q, n, i);
  PartitionResult result;
  result.partition = {q, n, i, {}};

  // Every lower state needs a distinct upper state per class, and every
  // class needs at least min|Y| states.
  int upper = static_cast<int>(inst.upper.size());
  for (const auto& ups : inst.covered_by) upper = std::min(upper, static_cast<int>(ups.size()));
  const auto b = bound_B(q, n, i, budget / 4);
  upper = std::min<long long>(upper, static_cast<long long>(b.high));
  result.upper_bound = upper;

  auto best = greedy_disjoint_covers(inst);
  bool exact = static_cast<int>(best.size()) >= upper;
  if (!exact && inst.upper.size() <= exact_limit) {
    long long left = budget;
    bool proven = true;
    for (int k = upper; k > static_cast<int>(best.size()); --k) {
      auto r = find_disjoint_covers(inst, k, left);
      left -= r.nodes;
      result.nodes += r.nodes;
      if (r.status == SearchStatus::Found) {
        best = r.classes;
        break;
      }
      if (r.status == SearchStatus::BudgetExhausted) {
        proven = false;
        if (left <= 0) break;
      } else if (proven) {
        result.upper_bound = k - 1;
      }
    }
    exact = proven && static_cast<int>(best.size()) == result.upper_bound;
  }
  for (const auto& cls : best) result.partition.classes.push_back(to_states(inst, cls));
  canonical_order(result.partition.classes);
  result.exact = exact;
  if (exact) result.upper_bound = result.partition.size();
  return result;
}

TableCode reorganize_merged_generation(const TableCode& code, int i, int target_classes, const std::vector<MemoryState>& promote,
                                       long long budget) {
  if (i < 1 || i > code.t()) throw WomError(ErrorCode::GenerationOutOfRange, "generation " + std::to_string(i) + " not in 1.." + std::to_string(code.t()));
  if (!promote.empty() && i == 1) throw WomError(ErrorCode::PreconditionViolation, "generation 1 has no previous generation");
  if (target_classes < 1) throw WomError(ErrorCode::PreconditionViolation, "need at least one class");

  std::set<MemoryState> pool;
  for (const auto& cls : code.generation(i)) pool.insert(cls.begin(), cls.end());
  for (const auto& s : promote) {
    if (!pool.erase(s)) throw WomError(ErrorCode::PreconditionViolation, s.to_string() + " is not in generation " + std::to_string(i));
  }

  auto gens = code.generations();
  if (!promote.empty()) gens[static_cast<std::size_t>(i - 2)].push_back(promote);

  std::vector<MemoryState> lower;
  if (i == 1) {
    lower.push_back(MemoryState::zeros(code.n(), code.q()));
  } else {
    for (const auto& cls : gens[static_cast<std::size_t>(i - 2)]) lower.insert(lower.end(), cls.begin(), cls.end());
    std::sort(lower.begin(), lower.end(), listing_order);
  }
  std::vector<MemoryState> upper(pool.begin(), pool.end());
  std::sort(upper.begin(), upper.end(), listing_order);

  const auto inst = make_cover_instance(lower, upper);
  const auto r = find_disjoint_covers(inst, target_classes, budget);
  if (r.status != SearchStatus::Found) {
    throw WomError(ErrorCode::NoSuchReorganization, "no " + std::to_string(target_classes) + "-class reorganization of generation " +
                                                        std::to_string(i) + (r.status == SearchStatus::BudgetExhausted ? " within budget" : ""));
  }
  std::vector<char> used(upper.size(), 0);
  Generation next;
  for (const auto& cls : r.classes) {
    for (int y : cls) used[static_cast<std::size_t>(y)] = 1;
    next.push_back(to_states(inst, cls));
  }
  canonical_order(next);
  for (std::size_t y = 0; y < upper.size(); ++y) {
    if (!used[y]) next.back().push_back(upper[y]);
  }
  std::sort(next.back().begin(), next.back().end(), listing_order);
  gens[static_cast<std::size_t>(i - 1)] = std::move(next);

  TableCode out(code.q(), code.n(), std::move(gens));
  if (auto v = find_covering_violation(out)) {
    throw WomError(ErrorCode::NoSuchReorganization, "reorganized code is not a WOM code: " + v->to_string());
  }
  return out;
}

}  // namespace womkit::search
