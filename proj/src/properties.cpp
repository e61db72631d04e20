#include "womkit/properties.hpp"

#include <cassert>
#include <set>
#include <unordered_map>

namespace womkit {

std::string CoveringViolation::to_string() const {
  return "generation " + std::to_string(generation) + ": no codeword of message " + std::to_string(message) +
         " dominates prior state " + prior.to_string();
}

std::optional<CoveringViolation> find_covering_violation(const TableCode& code) {
  for (int i = 2; i <= code.t(); ++i) {
    const auto prior_image = code.image(i - 1);
    const auto& classes = code.generation(i);
    for (const auto& b : prior_image) {
      for (std::size_t m = 0; m < classes.size(); ++m) {
        bool covered = false;
        for (const auto& y : classes[m]) {
          if (is_below(b, y)) {
            covered = true;
            break;
          }
        }
        if (!covered) return CoveringViolation{i, b, static_cast<int>(m) + 1};
      }
    }
  }
  return std::nullopt;
}

DecodabilityReport check_decodable(const TableCode& code) {
  // state -> (generation, message) of its first appearance
  std::unordered_map<MemoryState, std::pair<int, int>> seen;
  for (int i = 1; i <= code.t(); ++i) {
    const auto& classes = code.generation(i);
    for (std::size_t m = 0; m < classes.size(); ++m) {
      for (const auto& s : classes[m]) {
        const int msg = static_cast<int>(m) + 1;
        auto [it, inserted] = seen.emplace(s, std::pair{i, msg});
        if (!inserted && it->second.second != msg) {
          return {false, DecodeConflict{s, it->second.first, it->second.second, i, msg}};
        }
      }
    }
  }
  return {};
}

SynchronyReport check_synchronous(const TableCode& code) {
  std::unordered_map<MemoryState, int> owner;
  for (int i = 1; i <= code.t(); ++i) {
    for (const auto& cls : code.generation(i)) {
      for (const auto& s : cls) {
        auto [it, inserted] = owner.emplace(s, i);
        if (!inserted && it->second != i) {
          SynchronyReport r;
          r.synchronous = false;
          r.overlap = s;
          r.first_generation = it->second;
          r.second_generation = i;
          return r;
        }
      }
    }
  }
  return {};
}

bool check_laminar(const TableCode& code) {
  std::unordered_map<int, int> weight_owner;
  for (int i = 1; i <= code.t(); ++i) {
    for (const auto& cls : code.generation(i)) {
      for (const auto& s : cls) {
        auto [it, inserted] = weight_owner.emplace(s.weight(), i);
        if (!inserted && it->second != i) return false;
      }
    }
  }
  return true;
}

bool contains_all_zero(const TableCode& code) {
  const auto zero = MemoryState::zeros(code.n(), code.q());
  for (int i = 1; i <= code.t(); ++i)
    if (code.in_image(i, zero)) return true;
  return false;
}

VerifyReport verify_wom(const TableCode& code) {
  VerifyReport report;
  report.violation = find_covering_violation(code);
  auto& p = report.properties;
  p.is_valid = !report.violation.has_value();
  p.is_decodable = check_decodable(code).decodable;
  p.is_synchronous = check_synchronous(code).synchronous;
  p.is_laminar = check_laminar(code);
  p.is_fixed_rate = check_fixed_rate(code.params());
  p.contains_all_zero = contains_all_zero(code);
  assert(!p.is_laminar || p.is_synchronous);
  assert(!p.is_synchronous || p.is_decodable);
  return report;
}

}  // namespace womkit
