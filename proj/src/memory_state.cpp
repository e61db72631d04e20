#include "womkit/memory_state.hpp"

#include <numeric>

#include "womkit/error.hpp"

namespace womkit {

MemoryState::MemoryState(std::vector<std::uint8_t> cells, int q) : cells_(std::move(cells)), q_(q) {
  if (q_ < 2 || q_ > 256) throw WomError(ErrorCode::SchemaError, "alphabet size q=" + std::to_string(q_) + " outside [2,256]");
  if (cells_.empty()) throw WomError(ErrorCode::SchemaError, "memory state must have at least one cell");
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    if (cells_[k] >= q_) {
      throw WomError(ErrorCode::SchemaError, "cell " + std::to_string(k + 1) + " holds " + std::to_string(cells_[k]) +
                                                 " which is not below q=" + std::to_string(q_));
    }
  }
}

MemoryState MemoryState::zeros(int n, int q) { return MemoryState(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0), q); }

MemoryState MemoryState::from_digits(std::string_view digits, int q) {
  if (q > 10) throw WomError(ErrorCode::ParseError, "digit-string states need q <= 10");
  std::vector<std::uint8_t> cells;
  cells.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw WomError(ErrorCode::ParseError, "invalid digit '" + std::string(1, c) + "' in state \"" + std::string(digits) + "\"");
    cells.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return MemoryState(std::move(cells), q);
}

int MemoryState::weight() const noexcept { return std::accumulate(cells_.begin(), cells_.end(), 0); }

bool MemoryState::is_zero() const noexcept {
  for (auto c : cells_)
    if (c != 0) return false;
  return true;
}

std::string MemoryState::to_string() const {
  std::string out;
  if (q_ <= 10) {
    for (auto c : cells_) out.push_back(static_cast<char>('0' + c));
    return out;
  }
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    if (k) out.push_back(',');
    out += std::to_string(cells_[k]);
  }
  return out;
}

MemoryState MemoryState::with_cell(std::size_t k, std::uint8_t value) const {
  auto cells = cells_;
  cells.at(k) = value;
  return MemoryState(std::move(cells), q_);
}

MemoryState MemoryState::slice(int first, int count) const {
  std::vector<std::uint8_t> cells(cells_.begin() + first, cells_.begin() + first + count);
  return MemoryState(std::move(cells), q_);
}

bool is_below(const MemoryState& b, const MemoryState& y) {
  if (b.n() != y.n() || b.q() != y.q()) {
    throw WomError(ErrorCode::StateMismatch, "cannot compare " + b.to_string() + " (q=" + std::to_string(b.q()) + ") with " +
                                                 y.to_string() + " (q=" + std::to_string(y.q()) + ")");
  }
  for (int k = 0; k < b.n(); ++k)
    if (b[k] > y[k]) return false;
  return true;
}

MemoryState concat(std::span<const MemoryState> blocks) {
  if (blocks.empty()) throw WomError(ErrorCode::SchemaError, "concat of zero blocks");
  std::vector<std::uint8_t> cells;
  const int q = blocks.front().q();
  for (const auto& b : blocks) {
    if (b.q() != q) throw WomError(ErrorCode::StateMismatch, "blocks with different alphabets");
    cells.insert(cells.end(), b.cells().begin(), b.cells().end());
  }
  return MemoryState(std::move(cells), q);
}

}  // namespace womkit
