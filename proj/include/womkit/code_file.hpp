#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "womkit/table_code.hpp"

namespace womkit {

// JSON document {"q", "n", "t", "generations"}; generations[i-1][m-1] is
// the class of message m at generation i. States are digit strings when
// q <= 10 (cell 1 leftmost) or arrays of n integers. Unknown keys are
// rejected.
//
// Malformed JSON or wrong field types raise ParseError; a well-formed
// document that breaks a code invariant (overlapping classes, empty class,
// t mismatch) raises SchemaError.
TableCode parse_code_json(std::string_view text);
std::string to_code_json(const TableCode& code);

TableCode read_code_file(const std::filesystem::path& path);
void write_code_file(const TableCode& code, const std::filesystem::path& path);

}  // namespace womkit
