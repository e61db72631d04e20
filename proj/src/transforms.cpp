#include "womkit/transforms.hpp"

#include <set>

#include "womkit/error.hpp"
#include "womkit/properties.hpp"

namespace womkit {

TableCode prepend_zero_generation(const TableCode& code) {
  if (contains_all_zero(code)) {
    throw WomError(ErrorCode::AllZeroAlreadyPresent, code.params().to_string() + " already contains the all-zero codeword");
  }
  std::vector<Generation> gens;
  gens.push_back({{MemoryState::zeros(code.n(), code.q())}});
  gens.insert(gens.end(), code.generations().begin(), code.generations().end());
  return TableCode(code.q(), code.n(), std::move(gens));
}

TableCode merge_generations(const TableCode& code, int first, int last) {
  if (first < 1 || first > last || last > code.t()) {
    throw WomError(ErrorCode::GenerationOutOfRange, "merge range " + std::to_string(first) + ":" + std::to_string(last) + " outside 1.." +
                                                        std::to_string(code.t()));
  }
  if (!check_synchronous(code).synchronous) {
    throw WomError(ErrorCode::NotSynchronous, code.params().to_string() + " is not synchronous");
  }
  std::vector<Generation> gens;
  for (int i = 1; i <= code.t(); ++i) {
    if (i <= first || i > last) {
      gens.push_back(code.generation(i));
    } else {
      auto& merged = gens.back();
      merged.insert(merged.end(), code.generation(i).begin(), code.generation(i).end());
    }
  }
  TableCode out(code.q(), code.n(), std::move(gens));
  if (auto v = find_covering_violation(out)) {
    throw WomError(ErrorCode::MergedCodeInvalid, "merged code is not a WOM code: " + v->to_string());
  }
  return out;
}

TableCode split_generation(const TableCode& code, int i, const std::vector<std::vector<int>>& groups) {
  const auto& gen = code.generation(i);
  const int classes = static_cast<int>(gen.size());
  std::set<int> seen;
  for (const auto& group : groups) {
    if (group.empty()) throw WomError(ErrorCode::SplitCodeInvalid, "empty group");
    for (int c : group) {
      if (c < 1 || c > classes) {
        throw WomError(ErrorCode::SplitCodeInvalid, "class " + std::to_string(c) + " not in 1.." + std::to_string(classes));
      }
      if (!seen.insert(c).second) throw WomError(ErrorCode::SplitCodeInvalid, "class " + std::to_string(c) + " used twice");
    }
  }
  if (static_cast<int>(seen.size()) != classes) {
    throw WomError(ErrorCode::SplitCodeInvalid, "groups cover " + std::to_string(seen.size()) + " of " + std::to_string(classes) + " classes");
  }
  std::vector<Generation> gens;
  for (int j = 1; j <= code.t(); ++j) {
    if (j != i) {
      gens.push_back(code.generation(j));
      continue;
    }
    for (const auto& group : groups) {
      Generation g;
      for (int c : group) g.push_back(gen[static_cast<std::size_t>(c - 1)]);
      gens.push_back(std::move(g));
    }
  }
  TableCode out(code.q(), code.n(), std::move(gens));
  if (auto v = find_covering_violation(out)) {
    throw WomError(ErrorCode::SplitCodeInvalid, "split code is not a WOM code: " + v->to_string());
  }
  return out;
}

TableCode product_code(const TableCode& first, const TableCode& second) {
  if (first.t() != second.t() || first.q() != second.q()) {
    throw WomError(ErrorCode::GenerationCountMismatch,
                   "cannot pair " + first.params().to_string() + " with " + second.params().to_string());
  }
  std::vector<Generation> gens;
  for (int i = 1; i <= first.t(); ++i) {
    Generation g;
    for (const auto& a : first.generation(i)) {
      for (const auto& b : second.generation(i)) {
        CodewordClass cls;
        for (const auto& x : a) {
          for (const auto& y : b) {
            const MemoryState parts[] = {x, y};
            cls.push_back(concat(parts));
          }
        }
        g.push_back(std::move(cls));
      }
    }
    gens.push_back(std::move(g));
  }
  return TableCode(first.q(), first.n() + second.n(), std::move(gens));
}

}  // namespace womkit
