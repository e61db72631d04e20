#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace womkit {

// Content of n q-ary write-once cells. Cell values never exceed q-1.
// Ordering (operator<=>) is plain lexicographic over the cells, cell 1 first.
class MemoryState {
 public:
  MemoryState() = default;
  MemoryState(std::vector<std::uint8_t> cells, int q);

  static MemoryState zeros(int n, int q);
  // Digit string ("0110"), cell 1 = leftmost character. Requires q <= 10.
  static MemoryState from_digits(std::string_view digits, int q);

  int q() const noexcept { return q_; }
  int n() const noexcept { return static_cast<int>(cells_.size()); }
  std::span<const std::uint8_t> cells() const noexcept { return cells_; }
  std::uint8_t operator[](std::size_t k) const { return cells_[k]; }

  // l1-norm; Hamming weight for q = 2.
  int weight() const noexcept;
  bool is_zero() const noexcept;

  // Digits for q <= 10, otherwise comma-separated integers.
  std::string to_string() const;

  MemoryState with_cell(std::size_t k, std::uint8_t value) const;
  MemoryState slice(int first, int count) const;

  friend bool operator==(const MemoryState&, const MemoryState&) = default;
  friend std::strong_ordering operator<=>(const MemoryState& a, const MemoryState& b) {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return a.cells_ <=> b.cells_;
  }

 private:
  std::vector<std::uint8_t> cells_;
  int q_ = 2;
};

// b <= y componentwise. Mismatched length or alphabet is a structural
// error (WomError StateMismatch), never "false".
bool is_below(const MemoryState& b, const MemoryState& y);

MemoryState concat(std::span<const MemoryState> blocks);

// Canonical listing order used for slices and image scans: descending
// lexicographic, e.g. 1110, 1101, 1011, 0111.
inline bool listing_order(const MemoryState& a, const MemoryState& b) { return b < a; }

}  // namespace womkit

template <>
struct std::hash<womkit::MemoryState> {
  std::size_t operator()(const womkit::MemoryState& s) const noexcept {
    std::size_t h = static_cast<std::size_t>(s.q()) * 0x9e3779b97f4a7c15ULL;
    for (auto c : s.cells()) h = (h ^ c) * 0x100000001b3ULL;
    return h;
  }
};
