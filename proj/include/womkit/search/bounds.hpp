#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace womkit::search {

// floor(C(n,i) / ceil(C(n,i-1) / i)); binary only.
std::uint64_t bound_closed_form(int n, int i);

// Schonheim lower bound on the number of i-subsets covering all
// (i-1)-subsets of an n-set; lower bound on the binary class size.
std::uint64_t schonheim_bound(int n, int i);

struct ClassSizeResult {
  int lower = 0;  // proven lower bound on min |Y|
  int upper = 0;  // size of a covering class that was found
  bool exact() const noexcept { return lower == upper; }
  long long nodes = 0;
};

// Smallest class Y in E_q(n, i) dominating every state of E_q(n, i-1).
ClassSizeResult min_class_size(int q, int n, int i, long long budget);

struct BResult {
  std::uint64_t low = 0;   // floor(|E| / upper class size)
  std::uint64_t high = 0;  // floor(|E| / lower class size)
  ClassSizeResult class_size;
  bool known() const noexcept { return low == high; }
  std::uint64_t value() const noexcept { return low; }
};

// B(n, i) = floor(|E_q(n,i)| / min |Y|). The class-size search stops as
// soon as the floor is determined, so `class_size` may stay inexact.
BResult bound_B(int q, int n, int i, long long budget);

struct BoundRecord {
  int q = 2;
  int n = 1;
  int i = 1;
  std::optional<std::uint64_t> closed_form;  // binary only
  BResult b;
  int a = 0;            // best partition found
  bool a_exact = false; // a is the maximum
  std::string witness_file;
};

BoundRecord compute_bound_record(int q, int n, int i, bool with_a, long long budget);

// Columns: q,n,i,closed_form,B,A,exact_flag,witness_file. Unknown values
// are written as intervals "lo..hi".
void write_bound_csv(std::ostream& out, const std::vector<BoundRecord>& records);

}  // namespace womkit::search
