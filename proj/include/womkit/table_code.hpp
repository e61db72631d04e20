#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "womkit/code_params.hpp"
#include "womkit/memory_state.hpp"

namespace womkit {

using CodewordClass = std::vector<MemoryState>;
using Generation = std::vector<CodewordClass>;

// Extensional WOM code: for every generation the ordered list of codeword
// classes D_i^{-1}(1), ..., D_i^{-1}(M_i). Generations and messages are
// 1-based in the public interface.
//
// Construction enforces the structural invariants: every class is
// non-empty, every state has length n and alphabet q, and classes of one
// generation are pairwise disjoint. The WOM covering condition is not
// checked here (see verify_wom).
class TableCode {
 public:
  TableCode(int q, int n, std::vector<Generation> generations);

  const CodeParams& params() const noexcept { return params_; }
  int q() const noexcept { return params_.q; }
  int n() const noexcept { return params_.n; }
  int t() const noexcept { return params_.t(); }

  const std::vector<Generation>& generations() const noexcept { return generations_; }
  const Generation& generation(int i) const;
  const CodewordClass& codeword_class(int i, int m) const;

  // Message index of `state` at generation i, if the state is in one of its classes.
  std::optional<int> message_of(int i, const MemoryState& state) const;
  bool in_image(int i, const MemoryState& state) const { return message_of(i, state).has_value(); }

  // Union of all generation-i classes, in listing order (descending lexicographic).
  std::vector<MemoryState> image(int i) const;

  friend bool operator==(const TableCode& a, const TableCode& b) {
    return a.params_ == b.params_ && a.generations_ == b.generations_;
  }

 private:
  CodeParams params_;
  std::vector<Generation> generations_;
  std::vector<std::unordered_map<MemoryState, int>> index_;
};

}  // namespace womkit
