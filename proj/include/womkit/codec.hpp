#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "womkit/properties.hpp"
#include "womkit/table_code.hpp"

namespace womkit {

// Common behavior of extensional (TableCode) and procedural
// (CompositeCode) codes. Generations and messages are 1-based.
class CodeBehavior {
 public:
  virtual ~CodeBehavior() = default;

  virtual const CodeParams& params() const = 0;

  // Writes message m at generation i on top of `prior`. The result
  // dominates `prior` componentwise and decodes to m at generation i.
  virtual MemoryState encode(int i, int m, const MemoryState& prior) const = 0;
  virtual int decode(int i, const MemoryState& state) const = 0;

  // Number of completed writes that produced `state` (0 for the empty
  // memory). Only defined for synchronous codes.
  virtual int generation_of(const MemoryState& state) const = 0;

  virtual bool is_synchronous() const = 0;
  virtual bool contains_all_zero() const = 0;
  virtual std::string describe() const = 0;
};

using CodePtr = std::shared_ptr<const CodeBehavior>;

// Deterministic encoder: the minimum-weight y in class m of generation i
// with b <= y, ties broken by the lexicographically smallest state.
MemoryState table_encode(const TableCode& code, int i, int m, const MemoryState& b);
int table_decode(const TableCode& code, int i, const MemoryState& b);
// 0 for the all-zero state when it is not itself a codeword.
int recover_generation_sync(const TableCode& code, const MemoryState& b);

class TableCodec final : public CodeBehavior {
 public:
  explicit TableCodec(TableCode code);

  const TableCode& table() const noexcept { return code_; }
  const CodeProperties& properties() const noexcept { return properties_; }

  const CodeParams& params() const override { return code_.params(); }
  MemoryState encode(int i, int m, const MemoryState& prior) const override;
  int decode(int i, const MemoryState& state) const override;
  int generation_of(const MemoryState& state) const override;
  bool is_synchronous() const override { return properties_.is_synchronous; }
  bool contains_all_zero() const override { return properties_.contains_all_zero; }
  std::string describe() const override;

 private:
  TableCode code_;
  CodeProperties properties_;
};

CodePtr make_codec(TableCode code);

// Writes messages[0] at generation 1, messages[1] at generation 2, ... from
// the empty memory. Each step is checked for monotonicity, decode
// round-trip and, for synchronous codes, generation recovery. Returns the
// state after every write.
std::vector<MemoryState> run_write_sequence(const CodeBehavior& code, const std::vector<int>& messages);

// Expands a code into its table by exhaustive enumeration of reachable
// states (generation-i class m = reachable states decoding to m).
// Throws StateLimitExceeded when the reachable set grows past state_limit.
TableCode materialize(const CodeBehavior& code, std::size_t state_limit = 1'000'000);

}  // namespace womkit
