#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace womkit {

// [n, t : M_1, ..., M_t]_q
struct CodeParams {
  int q = 2;
  int n = 1;
  std::vector<long long> sizes;  // M_1..M_t, all >= 1

  int t() const noexcept { return static_cast<int>(sizes.size()); }
  long long size(int generation) const { return sizes.at(static_cast<std::size_t>(generation - 1)); }

  // Throws SchemaError unless q >= 2, n >= 1, t >= 1 and every M_i >= 1.
  void validate() const;

  // "[4,3:4,3,2]_2"
  std::string to_string() const;
  // Accepts "[n,t:M1,...,Mt]" with an optional "_q" suffix (default q = 2).
  static CodeParams parse(std::string_view text);

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

struct WomRate {
  std::vector<double> per_generation;  // R_i = log2(M_i) / n
  double total = 0.0;                  // sum of R_i
};

WomRate wom_rate(const CodeParams& params);

bool check_fixed_rate(const CodeParams& params);

}  // namespace womkit
