#include "womkit/codec.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "womkit/error.hpp"

namespace womkit {

MemoryState table_encode(const TableCode& code, int i, int m, const MemoryState& b) {
  const auto& cls = code.codeword_class(i, m);
  const MemoryState* best = nullptr;
  for (const auto& y : cls) {
    if (!is_below(b, y)) continue;
    if (!best || y.weight() < best->weight() || (y.weight() == best->weight() && y < *best)) best = &y;
  }
  if (!best) {
    throw WomError(ErrorCode::NoCoveringCodeword, "no codeword of message " + std::to_string(m) + " at generation " +
                                                      std::to_string(i) + " dominates " + b.to_string());
  }
  return *best;
}

int table_decode(const TableCode& code, int i, const MemoryState& b) {
  if (i < 1 || i > code.t()) throw WomError(ErrorCode::GenerationOutOfRange, "generation " + std::to_string(i) + " not in 1.." + std::to_string(code.t()));
  if (auto m = code.message_of(i, b)) return *m;
  throw WomError(ErrorCode::NotInImage, b.to_string() + " is not a codeword of generation " + std::to_string(i));
}

int recover_generation_sync(const TableCode& code, const MemoryState& b) {
  int found = 0;
  for (int i = 1; i <= code.t(); ++i) {
    if (!code.in_image(i, b)) continue;
    if (found) {
      throw WomError(ErrorCode::NotSynchronous, b.to_string() + " belongs to generations " + std::to_string(found) + " and " + std::to_string(i));
    }
    found = i;
  }
  if (found) return found;
  if (b.is_zero()) return 0;
  throw WomError(ErrorCode::NotInAnyImage, b.to_string() + " is not a codeword of any generation");
}

TableCodec::TableCodec(TableCode code) : code_(std::move(code)), properties_(verify_wom(code_).properties) {}

MemoryState TableCodec::encode(int i, int m, const MemoryState& prior) const { return table_encode(code_, i, m, prior); }

int TableCodec::decode(int i, const MemoryState& state) const { return table_decode(code_, i, state); }

int TableCodec::generation_of(const MemoryState& state) const { return recover_generation_sync(code_, state); }

std::string TableCodec::describe() const { return code_.params().to_string(); }

CodePtr make_codec(TableCode code) { return std::make_shared<TableCodec>(std::move(code)); }

std::vector<MemoryState> run_write_sequence(const CodeBehavior& code, const std::vector<int>& messages) {
  const auto& p = code.params();
  if (static_cast<int>(messages.size()) > p.t()) {
    throw WomError(ErrorCode::WriteSequenceFailed, std::to_string(messages.size()) + " messages for a " + std::to_string(p.t()) + "-write code");
  }
  std::vector<MemoryState> trace;
  trace.reserve(messages.size());
  auto state = MemoryState::zeros(p.n, p.q);
  const bool sync = code.is_synchronous();
  for (std::size_t j = 0; j < messages.size(); ++j) {
    const int i = static_cast<int>(j) + 1;
    const auto fail = [&](const std::string& what) {
      return WomError(ErrorCode::WriteSequenceFailed, "step " + std::to_string(i) + ": " + what);
    };
    MemoryState next;
    int decoded = 0;
    try {
      next = code.encode(i, messages[j], state);
      decoded = code.decode(i, next);
    } catch (const WomError& e) {
      throw fail(e.what());
    }
    if (!is_below(state, next)) throw fail("state " + next.to_string() + " does not dominate " + state.to_string());
    if (decoded != messages[j]) {
      throw fail("wrote message " + std::to_string(messages[j]) + " but decoded " + std::to_string(decoded));
    }
    if (sync) {
      int g = 0;
      try {
        g = code.generation_of(next);
      } catch (const WomError& e) {
        throw fail(e.what());
      }
      if (g != i) throw fail("recovered generation " + std::to_string(g) + " after " + std::to_string(i) + " writes");
    }
    state = next;
    trace.push_back(state);
  }
  return trace;
}

TableCode materialize(const CodeBehavior& code, std::size_t state_limit) {
  const auto& p = code.params();
  std::set<MemoryState> frontier{MemoryState::zeros(p.n, p.q)};
  std::size_t total = 0;
  std::vector<Generation> generations;
  for (int i = 1; i <= p.t(); ++i) {
    const long long messages = p.size(i);
    std::vector<std::set<MemoryState>> classes(static_cast<std::size_t>(messages));
    for (const auto& b : frontier) {
      for (long long m = 1; m <= messages; ++m) {
        classes[static_cast<std::size_t>(m - 1)].insert(code.encode(i, static_cast<int>(m), b));
      }
    }
    std::set<MemoryState> next;
    Generation g;
    for (auto& cls : classes) {
      next.insert(cls.begin(), cls.end());
      g.emplace_back(cls.begin(), cls.end());
    }
    total += next.size();
    if (total > state_limit) {
      throw WomError(ErrorCode::StateLimitExceeded, code.describe() + " has more than " + std::to_string(state_limit) + " reachable states");
    }
    generations.push_back(std::move(g));
    frontier = std::move(next);
  }
  return TableCode(p.q, p.n, std::move(generations));
}

}  // namespace womkit
