#include "womkit/composite.hpp"

#include <algorithm>

#include "womkit/error.hpp"

namespace womkit {

int wrap_message(long long x, long long modulus) {
  long long r = (x - 1) % modulus;
  if (r < 0) r += modulus;
  return static_cast<int>(1 + r);
}

namespace {

bool unit_step_outer(const CodeBehavior& outer) {
  const auto* table = dynamic_cast<const TableCodec*>(&outer);
  if (!table) return false;
  const auto& code = table->table();
  for (int l = 1; l <= code.t(); ++l) {
    for (const auto& y : code.image(l)) {
      if (y.weight() != l) return false;
    }
  }
  return true;
}

std::string block_list(const std::vector<MemoryState>& blocks) {
  std::string out;
  for (const auto& b : blocks) {
    if (!out.empty()) out += ',';
    out += b.to_string();
  }
  return out;
}

}  // namespace

CompositeCode::CompositeCode(CodePtr inner, CodePtr outer) : inner_(std::move(inner)), outer_(std::move(outer)) {
  const auto& ip = inner_->params();
  const auto& op = outer_->params();
  width_ = op.q - 1;
  stages_ = ip.t() / width_;
  params_.q = ip.q;
  params_.n = ip.n * op.n;
  for (int s = 1; s <= stages_; ++s) {
    long long ms = ip.size((s - 1) * width_ + 1);
    for (int g = (s - 1) * width_ + 2; g <= s * width_; ++g) ms = std::min(ms, ip.size(g));
    stage_messages_.push_back(ms);
    for (int l = 1; l <= op.t(); ++l) params_.sizes.push_back(ms * op.size(l));
  }
}

std::string CompositeCode::describe() const {
  return "F(" + inner_->describe() + ", " + outer_->describe() + ") = " + params_.to_string();
}

std::vector<MemoryState> CompositeCode::split(const MemoryState& state) const {
  const int n = inner_->params().n;
  if (state.n() != params_.n || state.q() != params_.q) {
    throw WomError(ErrorCode::StateMismatch, "state " + state.to_string() + " does not fit " + params_.to_string());
  }
  std::vector<MemoryState> blocks;
  for (int k = 0; k < outer_->params().n; ++k) blocks.push_back(state.slice(k * n, n));
  return blocks;
}

MemoryState CompositeCode::join(const std::vector<MemoryState>& blocks) const { return concat(blocks); }

GenerationView CompositeCode::recover(const std::vector<MemoryState>& blocks) const {
  const auto& ip = inner_->params();
  const auto& op = outer_->params();
  if (static_cast<int>(blocks.size()) != op.n) {
    throw WomError(ErrorCode::StateMismatch, "expected " + std::to_string(op.n) + " blocks, got " + std::to_string(blocks.size()));
  }
  std::vector<int> gens;
  int top = 0;
  for (const auto& b : blocks) {
    if (b.n() != ip.n || b.q() != ip.q) throw WomError(ErrorCode::StateMismatch, "block " + b.to_string() + " does not fit the inner code");
    int g = 0;
    try {
      g = inner_->generation_of(b);
    } catch (const WomError& e) {
      throw WomError(ErrorCode::InconsistentBlocks, std::string("block ") + b.to_string() + ": " + e.what());
    }
    gens.push_back(g);
    top = std::max(top, g);
  }

  const int stage = (top + width_ - 1) / width_;
  const int base = (stage - 1) * width_;
  std::vector<std::uint8_t> cells;
  for (int g : gens) cells.push_back(static_cast<std::uint8_t>(std::max(g - base, 0)));
  MemoryState b_prime(cells, op.q);
  const bool full = std::all_of(cells.begin(), cells.end(), [&](std::uint8_t c) { return c == width_; });

  GenerationView view;
  if (top == 0) {
    view.read_view = {0, op.t(), 0, b_prime};
  } else {
    int l = 0;
    try {
      l = outer_->generation_of(b_prime);
    } catch (const WomError& e) {
      throw WomError(ErrorCode::InconsistentBlocks, "blocks " + block_list(blocks) + " give outer state " + b_prime.to_string() + ": " + e.what());
    }
    view.read_view = {stage, l, (stage - 1) * op.t() + l, b_prime};
  }
  view.write_view = view.read_view;
  if (full || view.read_view.l == op.t()) {
    view.rolled_over = true;
    view.write_view = {stage + 1, 0, stage * op.t(), MemoryState::zeros(op.n, op.q)};
  }
  return view;
}

std::vector<MemoryState> CompositeCode::encode_blocks(const std::vector<MemoryState>& blocks, int m1) const {
  const auto view = recover(blocks).write_view;
  if (view.p > stages_) {
    throw WomError(ErrorCode::BeyondLastGeneration, "all " + std::to_string(params_.t()) + " generations of " + params_.to_string() + " are used");
  }
  const int p = view.p;
  const int l = view.l;
  const int base = (p - 1) * width_;
  const long long inner_size = inner_messages(p);
  const long long outer_size = outer_->params().size(l + 1);
  if (m1 < 1 || m1 > inner_size * outer_size) {
    throw WomError(ErrorCode::MessageOutOfRange, "message " + std::to_string(m1) + " not in 1.." + std::to_string(inner_size * outer_size) +
                                                     " at generation " + std::to_string(view.i + 1));
  }
  long long m = 1 + (m1 - 1) / outer_size;
  const int m_prime = static_cast<int>(1 + (m1 - 1) % outer_size);
  const auto next = outer_->encode(l + 1, m_prime, view.b_prime);

  const int count = static_cast<int>(blocks.size());
  int k0 = -1;
  for (int k = 0; k < count; ++k) {
    const int before = view.b_prime[k];
    const int after = next[k];
    if (after > before) {
      k0 = k;
    } else if (before >= 1) {
      m -= inner_->decode(base + before, blocks[k]);
    }
  }
  if (k0 < 0) throw WomError(ErrorCode::InconsistentBlocks, "outer write did not change " + view.b_prime.to_string());

  auto out = blocks;
  for (int k = 0; k < count; ++k) {
    if (k == k0 || next[k] <= view.b_prime[k]) continue;
    const int g = base + next[k];
    const int filler = static_cast<int>(inner_->params().size(g));
    out[k] = inner_->encode(g, filler, blocks[k]);
    m -= filler;
  }
  const int g0 = base + next[k0];
  out[k0] = inner_->encode(g0, wrap_message(m, inner_size), blocks[k0]);
  return out;
}

CompositeMessage CompositeCode::decode_blocks(const std::vector<MemoryState>& blocks) const {
  const auto view = recover(blocks).read_view;
  if (view.i == 0) throw WomError(ErrorCode::NothingWritten, "memory is empty");
  const int base = (view.p - 1) * width_;
  CompositeMessage out;
  out.m_prime = outer_->decode(view.l, view.b_prime);
  long long sum = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (view.b_prime[k] >= 1) sum += inner_->decode(base + view.b_prime[k], blocks[k]);
  }
  out.m = wrap_message(sum, inner_messages(view.p));
  out.m1 = static_cast<int>((out.m - 1) * outer_->params().size(view.l) + out.m_prime);
  return out;
}

MemoryState CompositeCode::encode(int i, int m, const MemoryState& prior) const {
  if (i < 1 || i > params_.t()) throw WomError(ErrorCode::GenerationOutOfRange, "generation " + std::to_string(i) + " not in 1.." + std::to_string(params_.t()));
  auto blocks = split(prior);
  int current = recover(blocks).read_view.i;
  if (current >= i) {
    throw WomError(ErrorCode::GenerationOutOfRange, "state " + prior.to_string() + " is already at generation " + std::to_string(current));
  }
  // A prior state from an earlier generation is advanced with message 1.
  for (; current < i - 1; ++current) blocks = encode_blocks(blocks, 1);
  return join(encode_blocks(blocks, m));
}

int CompositeCode::decode(int i, const MemoryState& state) const {
  const auto blocks = split(state);
  const int current = recover(blocks).read_view.i;
  if (current != i) {
    throw WomError(ErrorCode::NotInImage, state.to_string() + " belongs to generation " + std::to_string(current) + ", not " + std::to_string(i));
  }
  return decode_blocks(blocks).m1;
}

int CompositeCode::generation_of(const MemoryState& state) const { return recover(split(state)).read_view.i; }

CompositePtr compose(CodePtr inner, CodePtr outer) {
  const auto reject = [](const std::string& why) { return WomError(ErrorCode::PreconditionViolation, why); };
  if (inner->contains_all_zero()) throw reject("inner code " + inner->describe() + " contains the all-zero codeword");
  if (outer->contains_all_zero()) throw reject("outer code " + outer->describe() + " contains the all-zero codeword");
  if (!inner->is_synchronous()) throw reject("inner code " + inner->describe() + " is not synchronous");
  if (!outer->is_synchronous()) throw reject("outer code " + outer->describe() + " is not synchronous");
  if (outer->params().q > 2 && !unit_step_outer(*outer) && !check_fixed_rate(inner->params())) {
    throw reject("nonbinary outer code " + outer->describe() +
                 " needs unit-weight writes or a fixed-rate inner code");
  }
  if (inner->params().t() < outer->params().q - 1) {
    throw reject("inner code " + inner->describe() + " has fewer generations than one outer stage needs");
  }
  return std::make_shared<CompositeCode>(std::move(inner), std::move(outer));
}

GenerationView composite_recover(const CompositeCode& code, const std::vector<MemoryState>& blocks) { return code.recover(blocks); }

std::vector<MemoryState> composite_encode(const CompositeCode& code, const std::vector<MemoryState>& blocks, int m1) {
  return code.encode_blocks(blocks, m1);
}

CompositeMessage composite_decode(const CompositeCode& code, const std::vector<MemoryState>& blocks) { return code.decode_blocks(blocks); }

CodePtr iterate_construction(CodePtr base, CodePtr outer, int iterations) {
  if (iterations < 0) throw WomError(ErrorCode::PreconditionViolation, "negative iteration count");
  for (int k = 0; k < iterations; ++k) base = compose(base, outer);
  return base;
}

}  // namespace womkit
