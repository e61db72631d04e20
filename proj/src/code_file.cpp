#include "womkit/code_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "womkit/error.hpp"

namespace womkit {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw WomError(ErrorCode::ParseError, where + ": " + what);
}

int read_int(const json& doc, const char* key) {
  if (!doc.contains(key)) parse_fail(key, "missing field");
  const auto& v = doc.at(key);
  if (!v.is_number_integer()) parse_fail(key, "expected an integer");
  return v.get<int>();
}

MemoryState read_state(const json& v, int q, int n, const std::string& where) {
  std::vector<std::uint8_t> cells;
  if (v.is_string()) {
    if (q > 10) parse_fail(where, "digit strings need q <= 10");
    for (char c : v.get<std::string>()) {
      if (c < '0' || c > '9') parse_fail(where, "'" + v.get<std::string>() + "' is not a digit string");
      cells.push_back(static_cast<std::uint8_t>(c - '0'));
    }
  } else if (v.is_array()) {
    for (const auto& c : v) {
      if (!c.is_number_integer() || c.get<long long>() < 0 || c.get<long long>() > 255) parse_fail(where, "cell values must be small integers");
      cells.push_back(static_cast<std::uint8_t>(c.get<int>()));
    }
  } else {
    parse_fail(where, "a state is a digit string or an integer array");
  }
  if (static_cast<int>(cells.size()) != n) {
    throw WomError(ErrorCode::SchemaError, where + ": state has " + std::to_string(cells.size()) + " cells, expected " + std::to_string(n));
  }
  for (auto c : cells) {
    if (c >= q) throw WomError(ErrorCode::SchemaError, where + ": cell value " + std::to_string(c) + " exceeds q-1");
  }
  return MemoryState(std::move(cells), q);
}

}  // namespace

TableCode parse_code_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw WomError(ErrorCode::ParseError, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) parse_fail("document", "expected a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "q" && key != "n" && key != "t" && key != "generations") parse_fail(key, "unknown field");
  }
  const int q = read_int(doc, "q");
  const int n = read_int(doc, "n");
  const int t = read_int(doc, "t");
  if (q < 2 || q > 256) throw WomError(ErrorCode::SchemaError, "q: must lie in 2..256");
  if (n < 1) throw WomError(ErrorCode::SchemaError, "n: must be at least 1");
  if (!doc.contains("generations")) parse_fail("generations", "missing field");
  const auto& gens = doc.at("generations");
  if (!gens.is_array()) parse_fail("generations", "expected an array");
  if (static_cast<int>(gens.size()) != t) {
    throw WomError(ErrorCode::SchemaError, "t is " + std::to_string(t) + " but " + std::to_string(gens.size()) + " generations are listed");
  }

  std::vector<Generation> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string gwhere = "generation " + std::to_string(i + 1);
    if (!gens[i].is_array()) parse_fail(gwhere, "expected an array of classes");
    Generation g;
    for (std::size_t m = 0; m < gens[i].size(); ++m) {
      const std::string cwhere = gwhere + ", class " + std::to_string(m + 1);
      if (!gens[i][m].is_array()) parse_fail(cwhere, "expected an array of states");
      CodewordClass cls;
      for (std::size_t k = 0; k < gens[i][m].size(); ++k) cls.push_back(read_state(gens[i][m][k], q, n, cwhere + ", state " + std::to_string(k + 1)));
      g.push_back(std::move(cls));
    }
    out.push_back(std::move(g));
  }
  return TableCode(q, n, std::move(out));
}

std::string to_code_json(const TableCode& code) {
  using ojson = nlohmann::ordered_json;
  ojson gens = ojson::array();
  for (const auto& g : code.generations()) {
    ojson classes = ojson::array();
    for (const auto& cls : g) {
      ojson states = ojson::array();
      for (const auto& s : cls) {
        if (code.q() <= 10) {
          states.push_back(s.to_string());
        } else {
          states.push_back(std::vector<int>(s.cells().begin(), s.cells().end()));
        }
      }
      classes.push_back(std::move(states));
    }
    gens.push_back(std::move(classes));
  }
  ojson doc = ojson::object();
  doc["q"] = code.q();
  doc["n"] = code.n();
  doc["t"] = code.t();
  doc["generations"] = std::move(gens);
  return doc.dump(2) + "\n";
}

TableCode read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw WomError(ErrorCode::ParseError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_code_json(buf.str());
  } catch (const WomError& e) {
    throw WomError(e.code(), path.string() + ": " + e.detail());
  }
}

void write_code_file(const TableCode& code, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw WomError(ErrorCode::ParseError, "cannot write " + path.string());
  out << to_code_json(code);
}

}  // namespace womkit
