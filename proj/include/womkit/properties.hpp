#pragma once

#include <optional>
#include <string>

#include "womkit/table_code.hpp"

namespace womkit {

struct CodeProperties {
  bool is_valid = false;
  bool is_decodable = false;
  bool is_synchronous = false;
  bool is_laminar = false;
  bool is_fixed_rate = false;
  bool contains_all_zero = false;

  friend bool operator==(const CodeProperties&, const CodeProperties&) = default;
};

// First (i, b, m) for which class m of generation i has no y >= b,
// with b taken from Image(E_{i-1}).
struct CoveringViolation {
  int generation = 0;
  MemoryState prior;
  int message = 0;
  std::string to_string() const;
};

struct VerifyReport {
  CodeProperties properties;
  std::optional<CoveringViolation> violation;
};

struct DecodeConflict {
  MemoryState state;
  int first_generation = 0;
  int first_message = 0;
  int second_generation = 0;
  int second_message = 0;
};

struct DecodabilityReport {
  bool decodable = true;
  std::optional<DecodeConflict> conflict;
};

struct SynchronyReport {
  bool synchronous = true;
  std::optional<MemoryState> overlap;
  int first_generation = 0;
  int second_generation = 0;
};

// Runs every checker. Image(E_i) is the union of generation-i classes.
// Generation 1 is covered trivially from the empty memory; for i >= 2
// every b in Image(E_{i-1}) must be dominated by some state in every
// class of generation i. Images are scanned in listing order.
VerifyReport verify_wom(const TableCode& code);

std::optional<CoveringViolation> find_covering_violation(const TableCode& code);
DecodabilityReport check_decodable(const TableCode& code);
SynchronyReport check_synchronous(const TableCode& code);
bool check_laminar(const TableCode& code);
bool contains_all_zero(const TableCode& code);

}  // namespace womkit
