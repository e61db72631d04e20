#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_support.hpp"
#include "womkit/catalog.hpp"
#include "womkit/code_file.hpp"
#include "womkit/error.hpp"

using namespace womkit;
using testing::st;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_code_json(text);
  } catch (const WomError& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::SchemaError;
}

}  // namespace

TEST_CASE("catalog round trip through JSON") {
  for (const auto& e : load_catalog()) {
    CAPTURE(e.id);
    CHECK(parse_code_json(to_code_json(e.table)) == e.table);
  }
  const auto path = std::filesystem::temp_directory_path() / "womkit_roundtrip.json";
  write_code_file(catalog_entry("fig1_laminar").table, path);
  CHECK(read_code_file(path) == catalog_entry("fig1_laminar").table);
  std::filesystem::remove(path);
}

TEST_CASE("quaternary fixture parses to the catalog entry") {
  auto c = read_code_file(std::filesystem::path(WOMKIT_FIXTURES) / "q4_sync_24.json");
  CHECK(c == catalog_entry("q4_sync_24").table);
}

TEST_CASE("integer-array states") {
  auto c = parse_code_json(R"({"q": 2, "n": 2, "t": 2, "generations": [[[[0,1]], [[1,0]]], [[[1,1]]]]})");
  CHECK(c == testing::c2_writes2());
  auto wide = TableCode(12, 1, {Generation{CodewordClass{MemoryState({11}, 12)}}});
  const auto text = to_code_json(wide);
  CHECK(text.find("11") != std::string::npos);
  CHECK(parse_code_json(text) == wide);
}

TEST_CASE("malformed code files") {
  CHECK(code_of(R"({"q": 2, "n": 2, "t": 1, "generations": [[["01", "10"], ["10"]]]})") == ErrorCode::SchemaError);
  CHECK(code_of(R"({"q": 2, "n": 2, "t": 1, "generations": [[[]]]})") == ErrorCode::SchemaError);
  CHECK(code_of(R"({"q": 2, "n": 2, "t": 2, "generations": [[["01"]]]})") == ErrorCode::SchemaError);
  CHECK(code_of(R"({"q": 2, "n": 2, "t": 1, "generations": [[["012"]]]})") == ErrorCode::SchemaError);
  CHECK(code_of(R"({"q": 2, "n": 2, "t": 1, "generations": [[["02"]]]})") == ErrorCode::SchemaError);
  CHECK(code_of(R"({"q": 2, "n": 2, "t": 1, "generations": [[["01"]]], "name": "x"})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"q": "2", "n": 2, "t": 1, "generations": [[["01"]]]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"q": 2, "n": 2, "t": 1, "generations": [[["0x"]]]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"q": 2, "n": 2, "t": 1)") == ErrorCode::ParseError);
  CHECK(code_of("[1, 2]") == ErrorCode::ParseError);
  CHECK_THROWS_AS(read_code_file("/nonexistent/womkit.json"), WomError);
}
