#include "womkit/catalog.hpp"

#include <cmath>
#include <functional>

#include "womkit/codec.hpp"
#include "womkit/composite.hpp"
#include "womkit/error.hpp"
#include "womkit/transforms.hpp"

namespace womkit {

namespace {

using Table = std::vector<std::vector<std::vector<const char*>>>;

TableCode literal(int q, int n, const Table& gens) {
  std::vector<Generation> out;
  for (const auto& g : gens) {
    Generation gen;
    for (const auto& c : g) {
      CodewordClass cls;
      for (const char* s : c) cls.push_back(MemoryState::from_digits(s, q));
      gen.push_back(std::move(cls));
    }
    out.push_back(std::move(gen));
  }
  return TableCode(q, n, std::move(out));
}

// Flags in CodeProperties order after is_valid: decodable, synchronous,
// laminar, fixed-rate, all-zero. Every catalog code is valid.
CodeProperties props(bool decodable, bool synchronous, bool laminar, bool fixed_rate, bool all_zero) {
  return {true, decodable, synchronous, laminar, fixed_rate, all_zero};
}
const CodeProperties kLaminar = props(true, true, true, false, false);
const CodeProperties kLaminarZero = props(true, true, true, false, true);
const CodeProperties kSync = props(true, true, false, false, false);
const CodeProperties kSyncZero = props(true, true, false, false, true);

const Table kFig1 = {
    {{"1000"}, {"0100"}, {"0010"}, {"0001"}},
    {{"1100", "0011"}, {"1010", "0101"}},
    {{"1110", "0111"}, {"1101", "1011"}},
    {{"1111"}},
};

const Table kTable1 = {
    {{"000"}, {"100"}, {"010"}, {"001"}},
    {{"000", "111"}, {"100", "011"}, {"010", "101"}, {"001", "110"}},
};

const Table kEx5Inner = {
    {{"0001"}, {"0010"}, {"0100"}, {"1000"}},
    {{"1100", "0011"}, {"1010", "0101"}, {"1001", "0110"}},
    {{"0111", "1011", "1101", "1110"}, {"1111"}},
};

const Table kC2 = {{{"01"}, {"10"}}, {{"11"}}};

const Table kFixed322 = {{{"001"}, {"010"}}, {{"110", "101"}, {"011"}}};

const std::vector<std::vector<const char*>> kW5Gen1 = {{"10000"}, {"01000"}, {"00100"}, {"00010"}, {"00001"}};
const std::vector<std::vector<const char*>> kW5Gen2 = {
    {"11000", "10001", "00110"}, {"10100", "01010", "01001"}, {"10010", "01100", "00101", "00011"}};
const std::vector<std::vector<const char*>> kW5Gen3Merged = {
    {"11100", "11010", "10101", "01011", "00111"},
    {"11001", "10110", "10011", "01110", "01101"},
    {"11110", "11101", "11011", "10111", "01111"},
    {"11111"},
};
const std::vector<std::vector<const char*>> kW5Gen3Balanced = {
    {"01111", "11001", "10110"}, {"10111", "11100", "01011"}, {"11011", "01110", "10101"},
    {"11101", "00111", "11010"}, {"11110", "10011", "01101"}, {"11111"},
};

const Table kFixed5444 = {
    {{"00001"}, {"00010"}, {"00100"}, {"01000"}},
    {{"11000", "10100", "10010", "10001"}, {"01100", "00011"}, {"01010", "00101"}, {"01001", "00110"}},
    kW5Gen3Merged,
};

// Laminar codes found by the greedy partition search, frozen.
const Table kGreedy33 = {{{"100"}, {"010"}, {"001"}}, {{"110", "101", "011"}}, {{"111"}}};
const Table kGreedy44 = {
    {{"1000"}, {"0100"}, {"0010"}, {"0001"}},
    {{"1100", "0011"}, {"1010", "0101"}, {"1001", "0110"}},
    {{"1110", "1101", "1011", "0111"}},
    {{"1111"}},
};
const Table kGreedy55 = {
    kW5Gen1,
    kW5Gen2,
    {{"11100", "10110", "10011", "01101", "01011"}, {"11010", "11001", "10101", "01110", "00111"}},
    {{"11110", "11101", "11011", "10111", "01111"}},
    {{"11111"}},
};
const Table kGreedy66 = {
    {{"100000"}, {"010000"}, {"001000"}, {"000100"}, {"000010"}, {"000001"}},
    {{"110000", "001010", "000101"},
     {"101000", "010100", "000011"},
     {"100100", "010010", "001001"},
     {"100010", "010001", "001100"},
     {"100001", "011000", "000110"}},
    {{"111000", "100110", "100011", "011010", "010101", "001101"},
     {"110100", "101010", "100101", "011001", "010011", "001110"},
     {"110010", "110001", "101100", "101001", "011100", "010110", "001011", "000111"}},
    {{"111100", "111010", "111001", "110110", "110101", "110011", "101110", "101101", "101011", "100111", "011110", "011101",
      "011011", "010111", "001111"}},
    {{"111110", "111101", "111011", "110111", "101111", "011111"}},
    {{"111111"}},
};

const Table kQ4Greedy26 = {
    {{"01"}, {"10"}},
    {{"11"}, {"20", "02"}},
    {{"21", "03"}, {"12", "30"}},
    {{"13", "31", "22"}},
    {{"23", "32"}},
    {{"33"}},
};
const Table kQ4Sync24 = {
    {{"01"}, {"10"}},
    {{"11"}, {"20", "02"}},
    {{"21", "03"}, {"12", "30"}, {"22"}},
    {{"13", "32"}, {"31", "23"}, {"33"}},
};
const Table kQ4Greedy39 = {
    {{"100"}, {"010"}, {"001"}},
    {{"200", "011"}, {"110", "002"}, {"101", "020"}},
    {{"300", "111", "030", "003"}, {"210", "102", "021"}, {"201", "120", "012"}},
    {{"310", "211", "130", "103", "022"}, {"301", "220", "202", "121", "112", "031", "013"}},
    {{"320", "311", "302", "230", "221", "212", "203", "131", "122", "113", "032", "023"}},
    {{"330", "321", "312", "303", "231", "222", "213", "132", "123", "033"}},
    {{"331", "322", "313", "232", "223", "133"}},
    {{"332", "323", "233"}},
    {{"333"}},
};
const Table kQ3Greedy24 = {{{"10"}, {"01"}}, {{"20", "02"}, {"11"}}, {{"21", "12"}}, {{"22"}}};

TableCode composite_table(const TableCode& inner, const TableCode& outer) {
  return materialize(*compose(make_codec(inner), make_codec(outer)));
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string id, TableCode code, CodeProperties expected, double rate, std::string provenance) {
    out.push_back({std::move(id), std::move(code), expected, rate, std::move(provenance)});
  };

  const auto fig1 = literal(2, 4, kFig1);
  const auto ex5 = literal(2, 4, kEx5Inner);
  const auto c2 = literal(2, 2, kC2);
  const auto w534 = literal(2, 5, {kW5Gen1, kW5Gen2, kW5Gen3Merged});
  const auto w536 = literal(2, 5, {kW5Gen1, kW5Gen2, kW5Gen3Balanced});
  const auto g33 = literal(2, 3, kGreedy33);
  const auto g44 = literal(2, 4, kGreedy44);
  const auto g55 = literal(2, 5, kGreedy55);
  const auto g66 = literal(2, 6, kGreedy66);
  const auto q4_26 = literal(4, 2, kQ4Greedy26);
  const auto q4_24 = literal(4, 2, kQ4Sync24);
  const auto q4_25 = split_generation(q4_24, 4, {{1, 2}, {3}});
  const auto q4_39 = literal(4, 3, kQ4Greedy39);
  const auto q4_37 = merge_generations(q4_39, 7, 9);
  const auto q4_38 = merge_generations(q4_39, 8, 9);
  const auto q3_23 = merge_generations(literal(3, 2, kQ3Greedy24), 3, 4);
  const auto ex5_composite = composite_table(ex5, c2);
  const auto q4_composite = composite_table(q4_25, c2);

  add("fig1_laminar", fig1, kLaminar, 1.0,
      "four-write laminar code; the source does not number its messages, so generations 2-3 use one valid laminar assignment");
  add("table1_decodable", literal(2, 3, kTable1), props(true, false, false, true, true), 1.3333, "two-write decodable code");
  add("fig3_laminar_zero", prepend_zero_generation(fig1), kLaminarZero, 1.0, "fig1_laminar with an all-zero first generation");
  add("ex5_inner", ex5, kLaminar, 1.1462, "inner code of the worked composite");
  add("c2_writes2", c2, kLaminar, 0.5, "two-write outer code of the worked composite");
  add("w5_3_534", w534, kLaminar, 1.1814, "greedy_5_5 with generations 3-5 merged");
  add("w5_3_536", w536, kLaminar, 1.2984, "w5_3_534 with generation 3 rebalanced into six classes");
  add("greedy_3_3", g33, kLaminar, 0.5283, "greedy search, n = t = 3");
  add("greedy_4_4", g44, kLaminar, 0.8962, "greedy search, n = t = 4");
  add("greedy_5_5", g55, kLaminar, 0.9814, "greedy search, n = t = 5");
  add("greedy_6_6", g66, kLaminar, 1.0820, "greedy search, n = t = 6");
  add("fixed_3_22", literal(2, 3, kFixed322), props(true, true, true, true, false), 0.6667, "fixed-rate two-write code");
  add("fixed_5_444", literal(2, 5, kFixed5444), props(true, true, true, true, false), 1.2, "fixed-rate three-write code");
  add("q4_greedy_26", q4_26, kLaminar, 1.5, "quaternary greedy search, n = 2");
  add("q4_sync_24", q4_24, kSync, 2.5850, "q4_greedy_26 with generations 4-6 merged, reorganized, and {22} moved to generation 3");
  add("q4_split_25", q4_25, kSync, 2.2925, "q4_sync_24 with generation 4 split as {1,2},{3}");
  add("q4_greedy_39", q4_39, kLaminar, 1.9183, "quaternary greedy search, n = 3");
  add("q4_merge_37", q4_37, kLaminar, 2.4466, "q4_greedy_39 with generations 7-9 merged");
  add("q4_merge_38", q4_38, kLaminar, 2.2516, "q4_greedy_39 with generations 8-9 merged");
  add("q3_sync_23", q3_23, props(true, true, true, true, false), 1.5, "ternary greedy search, n = 2, generations 3-4 merged");
  add("ex5_composite", ex5_composite, kSync, 1.5212, "F(ex5_inner, c2_writes2), materialized");
  add("q4_composite_410", q4_composite, kSync, 3.5425, "F(q4_split_25, c2_writes2), materialized");

  // Synchronous codes with a leading all-zero generation, as appended to
  // nondecodable codes.
  add("sync_3_4", prepend_zero_generation(g33), kLaminarZero, 0.5283, "prepended greedy_3_3");
  add("sync_5_4", prepend_zero_generation(w536), kLaminarZero, 1.2984, "prepended w5_3_536");
  add("sync_4_5", prepend_zero_generation(g44), kLaminarZero, 0.8962, "prepended greedy_4_4");
  add("sync_5_6", prepend_zero_generation(g55), kLaminarZero, 0.9814, "prepended greedy_5_5");
  add("sync_6_7", prepend_zero_generation(g66), kLaminarZero, 1.0820, "prepended greedy_6_6");
  add("sync_8_7", prepend_zero_generation(ex5_composite), kSyncZero, 1.5212, "prepended ex5_composite");
  add("q3_sync_2_4", prepend_zero_generation(q3_23), kLaminarZero, 1.5, "prepended q3_sync_23");
  add("q4_sync_2_5", prepend_zero_generation(q4_24), kSyncZero, 2.5850, "prepended q4_sync_24");
  add("q4_sync_2_6", prepend_zero_generation(q4_25), kSyncZero, 2.2925, "prepended q4_split_25");
  add("q4_sync_2_7", prepend_zero_generation(q4_26), kLaminarZero, 1.5, "prepended q4_greedy_26");
  add("q4_sync_3_8", prepend_zero_generation(q4_37), kLaminarZero, 2.4466, "prepended q4_merge_37");
  add("q4_sync_3_9", prepend_zero_generation(q4_38), kLaminarZero, 2.2516, "prepended q4_merge_38");
  add("q4_sync_3_10", prepend_zero_generation(q4_39), kLaminarZero, 1.9183, "prepended q4_greedy_39");
  add("q4_sync_4_11", prepend_zero_generation(q4_composite), kSyncZero, 3.5425, "prepended q4_composite_410");
  return out;
}

void check(const CatalogEntry& e) {
  const auto report = verify_wom(e.table);
  if (!report.properties.is_valid) {
    throw WomError(ErrorCode::CatalogCorrupt, e.id + ": not a WOM code (" + (report.violation ? report.violation->to_string() : "overlap") + ")");
  }
  if (report.properties != e.expected) {
    const auto flags = [](const CodeProperties& p) {
      return std::string{p.is_decodable ? 'D' : '-', p.is_synchronous ? 'S' : '-', p.is_laminar ? 'L' : '-', p.is_fixed_rate ? 'F' : '-',
                         p.contains_all_zero ? '0' : '-'};
    };
    throw WomError(ErrorCode::CatalogCorrupt, e.id + ": properties " + flags(report.properties) + ", expected " + flags(e.expected));
  }
  const double rate = wom_rate(e.params()).total;
  if (std::abs(rate - e.expected_rate) > 5e-5) {
    throw WomError(ErrorCode::CatalogCorrupt, e.id + ": rate " + std::to_string(rate) + " differs from " + std::to_string(e.expected_rate));
  }
}

}  // namespace

const std::vector<CatalogEntry>& load_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    auto entries = build();
    for (const auto& e : entries) check(e);
    return entries;
  }();
  return catalog;
}

const CatalogEntry& catalog_entry(std::string_view id) {
  for (const auto& e : load_catalog()) {
    if (e.id == id) return e;
  }
  throw WomError(ErrorCode::UnknownEntry, "no catalog entry '" + std::string(id) + "'");
}

}  // namespace womkit
