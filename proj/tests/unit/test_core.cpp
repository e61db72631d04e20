#include "doctest.h"

#include <cmath>
#include <set>

#include "test_support.hpp"
#include "womkit/catalog.hpp"
#include "womkit/code_params.hpp"
#include "womkit/error.hpp"
#include "womkit/properties.hpp"
#include "womkit/transforms.hpp"

using namespace womkit;
using testing::code;
using testing::st;

namespace {

// Covering check straight off the class lists: no TableCode lookups.
bool oracle_valid(const TableCode& c) {
  const auto& gens = c.generations();
  for (std::size_t i = 1; i < gens.size(); ++i) {
    for (const auto& prev_cls : gens[i - 1]) {
      for (const auto& b : prev_cls) {
        for (const auto& cls : gens[i]) {
          bool hit = false;
          for (const auto& y : cls) {
            bool below = true;
            for (int k = 0; k < c.n(); ++k) below = below && b[static_cast<std::size_t>(k)] <= y[static_cast<std::size_t>(k)];
            hit = hit || below;
          }
          if (!hit) return false;
        }
      }
    }
  }
  return true;
}

TableCode fig1() { return catalog_entry("fig1_laminar").table; }
TableCode fig2() { return catalog_entry("q4_sync_24").table; }
TableCode table1() { return catalog_entry("table1_decodable").table; }

// Copy of `c` with one class replaced.
TableCode with_class(const TableCode& c, int i, int m, CodewordClass cls) {
  auto gens = c.generations();
  gens[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(m - 1)] = std::move(cls);
  return TableCode(c.q(), c.n(), gens);
}

std::set<std::string> flipped(const CodeProperties& a, const CodeProperties& b) {
  std::set<std::string> out;
  if (a.is_valid != b.is_valid) out.insert("valid");
  if (a.is_decodable != b.is_decodable) out.insert("decodable");
  if (a.is_synchronous != b.is_synchronous) out.insert("synchronous");
  if (a.is_laminar != b.is_laminar) out.insert("laminar");
  if (a.is_fixed_rate != b.is_fixed_rate) out.insert("fixed");
  if (a.contains_all_zero != b.contains_all_zero) out.insert("zero");
  return out;
}

}  // namespace

TEST_CASE("memory states") {
  auto s = st("0120", 3);
  CHECK(s.n() == 4);
  CHECK(s.weight() == 3);
  CHECK(s.to_string() == "0120");
  CHECK(is_below(st("0100", 3), s));
  CHECK_FALSE(is_below(st("0200", 3), s));
  CHECK_THROWS_AS(is_below(st("010"), st("0110")), WomError);
  CHECK_THROWS_AS(is_below(st("01", 2), st("01", 3)), WomError);
  CHECK_THROWS_AS(MemoryState::from_digits("012", 2), WomError);
  CHECK(MemoryState::zeros(3, 4).is_zero());
  const std::vector<MemoryState> blocks{st("11"), st("01")};
  CHECK(concat(blocks) == st("1101"));
  CHECK(st("1101").slice(2, 2) == st("01"));
}

TEST_CASE("code parameters") {
  auto p = CodeParams::parse("[4,3:4,3,2]");
  CHECK(p.q == 2);
  CHECK(p.n == 4);
  CHECK(p.t() == 3);
  CHECK(p.to_string() == "[4,3:4,3,2]_2");
  CHECK(CodeParams::parse("[2,4:2,2,3,3]_4").q == 4);
  CHECK_THROWS_AS(CodeParams::parse("[4,3:4,3]"), WomError);
  CHECK_THROWS_AS(CodeParams::parse("[4,2:4,0]"), WomError);

  CHECK(wom_rate(CodeParams::parse("[8,6:8,4,6,3,4,2]")).total == doctest::Approx(1.5212).epsilon(1e-4));
  CHECK(wom_rate(CodeParams::parse("[5,3:5,3,6]")).total == doctest::Approx(1.2984).epsilon(1e-4));
  CHECK(wom_rate(CodeParams::parse("[6,4:1,1,1,1]")).total == 0.0);
  for (const auto& e : load_catalog()) {
    const auto r = wom_rate(e.params());
    double log_prod = 0;
    for (auto m : e.params().sizes) log_prod += std::log2(static_cast<double>(m));
    CHECK(std::abs(r.total - log_prod / e.params().n) < 1e-12);
  }

  CHECK(check_fixed_rate(CodeParams::parse("[3,2:2,2]")));
  CHECK(check_fixed_rate(CodeParams::parse("[5,3:4,4,4]")));
  CHECK_FALSE(check_fixed_rate(CodeParams::parse("[4,3:4,3,2]")));
}

TEST_CASE("table code structure") {
  CHECK_THROWS_AS(code(2, 2, {{{"01"}, {"01"}}}), WomError);
  CHECK_THROWS_AS(code(2, 2, {{{"011"}}}), WomError);
  CHECK_THROWS_AS(TableCode(2, 2, {Generation{CodewordClass{}}}), WomError);
  auto c = testing::ex5_inner();
  CHECK(c.message_of(2, st("0011")) == 1);
  CHECK_FALSE(c.message_of(2, st("1111")).has_value());
  CHECK(c.image(1) == std::vector<MemoryState>{st("1000"), st("0100"), st("0010"), st("0001")});
}

TEST_CASE("verify_wom") {
  auto r = verify_wom(fig1());
  CHECK(r.properties.is_valid);
  CHECK(r.properties.is_laminar);

  auto single = code(2, 3, {{{"000"}}});
  CHECK(verify_wom(single).properties.is_valid);

  auto broken = with_class(testing::ex5_inner(), 2, 1, {st("1100")});
  auto br = verify_wom(broken);
  CHECK_FALSE(br.properties.is_valid);
  REQUIRE(br.violation.has_value());
  CHECK(br.violation->generation == 2);
  CHECK(br.violation->prior == st("0010"));
  CHECK(br.violation->message == 1);
}

TEST_CASE("decodability") {
  CHECK(check_decodable(table1()).decodable);
  CHECK(check_decodable(fig1()).decodable);

  auto gens = fig1().generations();
  gens[2].push_back({st("1111")});
  auto conflict = TableCode(2, 4, gens);
  auto d = check_decodable(conflict);
  CHECK_FALSE(d.decodable);
  REQUIRE(d.conflict.has_value());
  CHECK(d.conflict->state == st("1111"));
}

TEST_CASE("synchrony and laminarity") {
  CHECK(check_synchronous(fig2()).synchronous);
  auto t1 = check_synchronous(table1());
  CHECK_FALSE(t1.synchronous);
  CHECK(t1.overlap.has_value());
  CHECK(check_synchronous(code(2, 2, {{{"01"}, {"10"}}})).synchronous);

  CHECK(check_laminar(fig1()));
  CHECK_FALSE(check_laminar(fig2()));
  CHECK(check_laminar(code(2, 3, {{{"100", "010", "001"}}, {{"111"}}})));
}

TEST_CASE("all-zero codeword") {
  CHECK_FALSE(contains_all_zero(testing::ex5_inner()));
  CHECK(contains_all_zero(catalog_entry("fig3_laminar_zero").table));
  CHECK(contains_all_zero(code(2, 1, {{{"0"}}})));
}

TEST_CASE("verifier agrees with a direct covering oracle") {
  for (const auto& e : load_catalog()) {
    CAPTURE(e.id);
    CHECK(verify_wom(e.table).properties.is_valid == oracle_valid(e.table));
  }
  auto broken = with_class(testing::ex5_inner(), 2, 1, {st("1100")});
  CHECK_FALSE(oracle_valid(broken));
}

TEST_CASE("laminar => synchronous => decodable across the catalog") {
  for (const auto& e : load_catalog()) {
    const auto p = verify_wom(e.table).properties;
    CAPTURE(e.id);
    CHECK((!p.is_laminar || p.is_synchronous));
    CHECK((!p.is_synchronous || p.is_decodable));
  }
}

TEST_CASE("mutation corpus") {
  struct Mutation {
    const char* name;
    TableCode before;
    TableCode after;
    std::set<std::string> flips;
  };
  std::vector<Mutation> corpus;

  // Unused weight-2 state joins a generation-3 class.
  corpus.push_back({"weight overlap", fig1(), with_class(fig1(), 3, 1, {st("1110"), st("0111"), st("1001")}), {"laminar"}});
  // 22 shows up again at generation 4 under the same message.
  corpus.push_back({"shared state", fig2(), with_class(fig2(), 4, 3, {st("33", 4), st("22", 4)}), {"synchronous"}});
  // Swapping two generation-2 classes changes the message of 010 and 001.
  {
    auto gens = table1().generations();
    std::swap(gens[1][2], gens[1][3]);
    corpus.push_back({"message swap", table1(), TableCode(2, 3, gens), {"decodable"}});
  }
  corpus.push_back({"lost cover", testing::ex5_inner(), with_class(testing::ex5_inner(), 2, 1, {st("1100")}), {"valid"}});
  corpus.push_back({"zero generation", fig1(), prepend_zero_generation(fig1()), {"zero"}});
  {
    auto fixed = catalog_entry("fixed_3_22").table;
    auto gens = fixed.generations();
    gens[1].pop_back();
    corpus.push_back({"dropped class", fixed, TableCode(2, 3, gens), {"fixed"}});
  }
  // Same state at generations 3 and 4 with different messages.
  corpus.push_back({"conflicting reuse", fig1(), with_class(fig1(), 3, 2, {st("1101"), st("1011"), st("1111")}),
                    {"decodable", "synchronous", "laminar"}});

  for (const auto& m : corpus) {
    CAPTURE(m.name);
    const auto a = verify_wom(m.before).properties;
    const auto b = verify_wom(m.after).properties;
    CHECK(flipped(a, b) == m.flips);
    CHECK((!b.is_laminar || b.is_synchronous));
    CHECK((!b.is_synchronous || b.is_decodable));
    CHECK(b.is_valid == oracle_valid(m.after));
  }
}
