#pragma once

#include <string>
#include <vector>

#include "womkit/codec.hpp"

namespace womkit {

// Position inside the composite schedule. p is the stage (for a binary
// outer code, also the inner generation being written), l the outer
// generation inside the stage, i = (p-1)t' + l the overall generation.
struct StageView {
  int p = 0;
  int l = 0;
  int i = 0;
  MemoryState b_prime;
};

struct GenerationView {
  StageView read_view;   // before rollover; used for decoding
  StageView write_view;  // after rollover; used for encoding
  bool rolled_over = false;
};

struct CompositeMessage {
  int m = 0;
  int m_prime = 0;
  int m1 = 0;
};

// F(C, C'): n' blocks of the inner code C, steered by the outer code C'.
//
// A binary outer code matches outer cell values {0,1} to inner
// generations {p-1, p}. A q'-ary outer code matches {0..q'-1} to q'
// consecutive inner generations; stage s covers inner generations
// (s-1)(q'-1) .. s(q'-1).
//
// Blocks left behind by an outer code whose last generation is not the
// all-ones word lag more than one inner generation; they read as outer
// value 0 and are written by jumping directly to the target generation.
class CompositeCode final : public CodeBehavior {
 public:
  CompositeCode(CodePtr inner, CodePtr outer);

  const CodeBehavior& inner() const noexcept { return *inner_; }
  const CodeBehavior& outer() const noexcept { return *outer_; }
  int stage_width() const noexcept { return width_; }
  int stages() const noexcept { return stages_; }
  // Messages carried by the inner blocks during stage s.
  long long inner_messages(int stage) const { return stage_messages_.at(static_cast<std::size_t>(stage - 1)); }

  std::vector<MemoryState> split(const MemoryState& state) const;
  MemoryState join(const std::vector<MemoryState>& blocks) const;

  GenerationView recover(const std::vector<MemoryState>& blocks) const;
  std::vector<MemoryState> encode_blocks(const std::vector<MemoryState>& blocks, int m1) const;
  CompositeMessage decode_blocks(const std::vector<MemoryState>& blocks) const;

  const CodeParams& params() const override { return params_; }
  MemoryState encode(int i, int m, const MemoryState& prior) const override;
  int decode(int i, const MemoryState& state) const override;
  int generation_of(const MemoryState& state) const override;
  bool is_synchronous() const override { return true; }
  bool contains_all_zero() const override { return false; }
  std::string describe() const override;

 private:
  CodePtr inner_;
  CodePtr outer_;
  CodeParams params_;
  int width_ = 1;
  int stages_ = 0;
  std::vector<long long> stage_messages_;
};

using CompositePtr = std::shared_ptr<const CompositeCode>;

// Throws PreconditionViolation when either code contains the all-zero
// word or is not synchronous, or when a nonbinary outer code is given and
// neither (a) every outer write raises the cell sum by exactly one, nor
// (b) the inner code is fixed-rate.
CompositePtr compose(CodePtr inner, CodePtr outer);

GenerationView composite_recover(const CompositeCode& code, const std::vector<MemoryState>& blocks);
std::vector<MemoryState> composite_encode(const CompositeCode& code, const std::vector<MemoryState>& blocks, int m1);
CompositeMessage composite_decode(const CompositeCode& code, const std::vector<MemoryState>& blocks);

// C_0 = base, C_k = F(C_{k-1}, outer). Returns base itself for m = 0.
CodePtr iterate_construction(CodePtr base, CodePtr outer, int iterations);

// 1 + ((x - 1) mod M), always in 1..M.
int wrap_message(long long x, long long modulus);

}  // namespace womkit
