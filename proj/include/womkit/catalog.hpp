#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "womkit/properties.hpp"
#include "womkit/table_code.hpp"

namespace womkit {

struct CatalogEntry {
  std::string id;
  TableCode table;
  CodeProperties expected;
  double expected_rate = 0.0;  // 4 decimals
  std::string provenance;
  const CodeParams& params() const noexcept { return table.params(); }
};

// Every entry is checked on first load: verify_wom must reproduce
// `expected` exactly and the WOM-rate must match `expected_rate` within
// 5e-5. A mismatch raises CatalogCorrupt naming the entry and the check.
const std::vector<CatalogEntry>& load_catalog();

// Throws UnknownEntry.
const CatalogEntry& catalog_entry(std::string_view id);

}  // namespace womkit
