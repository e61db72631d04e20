// End-to-end checks run through the womkit executable. One PASS/FAIL line
// per criterion; the exit status is nonzero on any failure other than the
// documented Table II deviation (see README, "Known deviations").

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "womkit/catalog.hpp"
#include "womkit/code_file.hpp"
#include "womkit/transforms.hpp"

namespace fs = std::filesystem;
using namespace womkit;

namespace {

const fs::path kTmp = fs::temp_directory_path() / "womkit_acceptance";

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

Run cli(const std::string& args) {
  const auto err_path = kTmp / "stderr.txt";
  const std::string cmd = std::string("\"") + WOMKIT_CLI + "\" " + args + " 2>\"" + err_path.string() + "\"";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream err(err_path);
  r.err.assign(std::istreambuf_iterator<char>(err), {});
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

// "key: value" lines of a CLI report.
std::map<std::string, std::string> fields(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto colon = line.find(": ");
    if (colon != std::string::npos && !out.count(line.substr(0, colon))) out[line.substr(0, colon)] = line.substr(colon + 2);
  }
  return out;
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) {
    if (l == line) return true;
  }
  return false;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

std::string flags_of(const std::map<std::string, std::string>& f) {
  std::string s;
  for (const char* k : {"valid", "decodable", "synchronous", "laminar", "fixed-rate", "all-zero"}) {
    s += f.count(k) && f.at(k) == "yes" ? '1' : '0';
  }
  return s;
}

std::string flags_of(const CodeProperties& p) {
  std::string s;
  for (bool b : {p.is_valid, p.is_decodable, p.is_synchronous, p.is_laminar, p.is_fixed_rate, p.contains_all_zero}) s += b ? '1' : '0';
  return s;
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  std::istringstream in(cli("catalog list").out);
  std::string line;
  while (std::getline(in, line)) ids.push_back(line.substr(0, line.find('\t')));
  return ids;
}

// 1: every catalog entry verifies with its labels and rate.
Outcome catalog_validation() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto ids = catalog_ids();
  o.expect(ids.size() == load_catalog().size(), "catalog list is incomplete");
  std::map<std::string, std::map<std::string, std::string>> reports;
  for (const auto& id : ids) {
    const auto r = cli("verify catalog:" + id);
    auto f = fields(r.out);
    reports[id] = f;
    const auto& e = catalog_entry(id);
    o.expect(r.status == 0, id + ": exit " + std::to_string(r.status));
    o.expect(flags_of(f) == flags_of(e.expected), id + ": labels " + flags_of(f));
    o.expect(f.count("rate") && std::abs(std::stod(f.at("rate")) - e.expected_rate) <= 5e-5, id + ": rate");
  }
  const double elapsed = seconds_since(start);
  auto label = [&](const std::string& id, const char* key) { return reports[id][key] == "yes"; };
  o.expect(label("fig1_laminar", "laminar"), "fig1_laminar is not laminar");
  o.expect(label("q4_sync_24", "synchronous") && !label("q4_sync_24", "laminar"), "q4_sync_24 labels");
  o.expect(label("table1_decodable", "decodable") && !label("table1_decodable", "synchronous"), "table1_decodable labels");
  o.expect(reports["w5_3_536"]["code"] == "[5,3:5,3,6]_2" && reports["w5_3_536"]["rate"] == "1.2984", "[5,3:5,3,6] rate");
  o.expect(reports["q4_sync_24"]["code"] == "[2,4:2,2,3,3]_4" && reports["q4_sync_24"]["rate"] == "2.5850", "[2,4:2,2,3,3]_4 rate");
  o.expect(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
  o.notes.push_back(std::to_string(ids.size()) + " entries in " + std::to_string(elapsed).substr(0, 5) + " s");
  return o;
}

// Reference B(n,i), row n, column i.
const std::vector<std::vector<int>> kTableII = {
    {1},
    {2, 1},
    {3, 1, 1},
    {4, 3, 1, 1},
    {5, 3, 2, 1, 1},
    {6, 5, 3, 2, 1, 1},
    {7, 5, 5, 2, 2, 1, 1},
    {8, 7, 5, 5, 2, 2, 1, 1},
    {9, 7, 6, 5, 3, 2, 2, 1, 1},
    {10, 9, 6, 5, 4, 3, 2, 2, 1, 1},
};

// Entries where an exhaustive minimum-cover search disagrees with the
// reference row; see "Known deviations" in the README.
const std::set<std::pair<int, int>> kKnownMismatch = {{9, 3}, {9, 5}, {10, 3}, {10, 4}, {10, 6}};

struct Criterion2 {
  Outcome outcome;
  bool matches_known_deviation = false;
};

// 2: B(n,i) table, closed form and exact A.
Criterion2 bound_tables() {
  Criterion2 c;
  Outcome& o = c.outcome;
  const auto start = std::chrono::steady_clock::now();
  const auto r = cli("search table --q 2 --n-max 10 --a-max 5 --budget 2000000");
  o.expect(r.status == 0, "search table exit " + std::to_string(r.status));
  std::set<std::pair<int, int>> mismatched;
  int completed = 0;
  int unresolved = 0;
  bool low_rows_ok = true;
  bool closed_ok = true;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    const auto col = split(line, ',');
    const int n = std::stoi(col[1]);
    const int i = std::stoi(col[2]);
    const long closed = std::stol(col[3]);
    const int expected = kTableII[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i - 1)];
    if (col[4].find("..") != std::string::npos) {
      ++unresolved;
      const auto lo = std::stoi(col[4].substr(0, col[4].find("..")));
      const auto hi = std::stoi(col[4].substr(col[4].find("..") + 2));
      o.notes.push_back("B(" + std::to_string(n) + "," + std::to_string(i) + ") unresolved " + col[4]);
      closed_ok = closed_ok && closed >= lo;
      if (expected < lo || expected > hi) mismatched.insert({n, i});
      low_rows_ok = low_rows_ok && n > 8;
      continue;
    }
    ++completed;
    const int b = std::stoi(col[4]);
    closed_ok = closed_ok && closed >= b;
    if (b != expected) {
      mismatched.insert({n, i});
      o.fail("B(" + std::to_string(n) + "," + std::to_string(i) + ") = " + std::to_string(b) + ", table " + std::to_string(expected));
      low_rows_ok = low_rows_ok && n > 8;
    }
    if (n == 4 && i == 3) o.expect(closed == 2 && b == 1, "closed form / B at (4,3)");
    if (n <= 5) o.expect(!col[5].empty() && std::stoi(col[5]) == expected && col[6] == "1", "A(" + std::to_string(n) + "," + std::to_string(i) + ")");
  }
  o.expect(completed + unresolved == 55, "expected 55 entries");
  o.expect(low_rows_ok, "an entry with n <= 8 is unresolved or wrong");
  o.expect(closed_ok, "closed form below B");
  // Beyond n = 10 only the certified upper end of B is compared.
  for (int n = 11; n <= 16; ++n) {
    for (int i = 1; i <= n; ++i) {
      auto f = fields(cli("search bound --n " + std::to_string(n) + " --i " + std::to_string(i) + " --budget 100").out);
      const auto b = f["B"].substr(0, f["B"].find(' '));
      const auto dots = b.find("..");
      const long high = std::stol(dots == std::string::npos ? b : b.substr(dots + 2));
      if (std::stol(f["closed_form"]) < high) {
        closed_ok = false;
        o.notes.push_back("closed form below B at (" + std::to_string(n) + "," + std::to_string(i) + ")");
      }
    }
  }
  const double elapsed = seconds_since(start);
  o.expect(elapsed < 600, "took " + std::to_string(elapsed) + " s");
  o.notes.push_back(std::to_string(completed) + " completed, " + std::to_string(unresolved) + " unresolved, " +
                    std::to_string(static_cast<int>(elapsed)) + " s");
  c.matches_known_deviation = low_rows_ok && closed_ok && mismatched == kKnownMismatch && r.status == 0;
  for (const auto& n : o.notes) c.matches_known_deviation = c.matches_known_deviation && n.rfind("A(", 0) != 0;
  return c;
}

// Independent covering check of a partition JSON document.
std::string check_partition_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  const int q = doc.at("q");
  const int n = doc.at("n");
  const int i = doc.at("i");
  std::set<std::vector<int>> seen;
  std::vector<std::vector<std::vector<int>>> classes;
  for (const auto& cls : doc.at("classes")) {
    auto& out = classes.emplace_back();
    if (cls.empty()) return "empty class";
    for (const auto& s : cls) {
      std::vector<int> v;
      for (char ch : s.get<std::string>()) v.push_back(ch - '0');
      int w = 0;
      for (int x : v) {
        if (x < 0 || x >= q) return "cell value out of range";
        w += x;
      }
      if (static_cast<int>(v.size()) != n || w != i) return "state of wrong length or weight";
      if (!seen.insert(v).second) return "classes overlap";
      out.push_back(v);
    }
  }
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  while (true) {
    int w = 0;
    for (int v : x) w += v;
    if (w == i - 1) {
      for (const auto& cls : classes) {
        bool covered = false;
        for (const auto& y : cls) {
          bool above = true;
          for (int k = 0; k < n; ++k) above = above && y[static_cast<std::size_t>(k)] >= x[static_cast<std::size_t>(k)];
          covered = covered || above;
        }
        if (!covered) return "a class misses a lower state";
      }
    }
    int k = 0;
    while (k < n && ++x[static_cast<std::size_t>(k)] == q) x[static_cast<std::size_t>(k++)] = 0;
    if (k == n) break;
  }
  return "";
}

// 3: proposition builders.
Outcome builders() {
  Outcome o;
  auto build = [&](const std::string& args, int expect_n, int expect_classes) {
    const auto r = cli("search build " + args);
    if (r.status != 0) return o.fail(args + ": exit " + std::to_string(r.status));
    const auto doc = nlohmann::json::parse(r.out);
    o.expect(doc.at("n") == expect_n, args + ": length");
    o.expect(doc.at("classes").size() == static_cast<std::size_t>(expect_classes),
             args + ": " + std::to_string(doc.at("classes").size()) + " classes, expected " + std::to_string(expect_classes));
    const auto problem = check_partition_json(r.out);
    o.expect(problem.empty(), args + ": " + problem);
  };
  for (int k = 1; k <= 4; ++k) {
    build("doubling --k " + std::to_string(k), 1 << k, (1 << k) - 1);
    build("extension --k " + std::to_string(k), (1 << k) + 1, (1 << k) - 1);
  }
  for (int q = 2; q <= 4; ++q) {
    for (int n = 1; n <= 5; ++n) build("singletons --q " + std::to_string(q) + " --n " + std::to_string(n), n, n);
  }
  // Ternary and quaternary weight-2 values from the published tables.
  build("circular --q 3 --m 1", 3, 3);
  build("qary-even --q 3 --n 4", 4, 4);
  build("circular --q 3 --m 2", 5, 5);
  build("circular --q 3 --m 3", 7, 7);
  build("qary-even --q 4 --n 2", 2, 2);
  build("circular --q 4 --m 1", 3, 3);
  return o;
}

// 4: the composite of the weight-2 inner code with c2.
Outcome theorem_one() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto c = cli("compose catalog:ex5_inner catalog:c2_writes2");
  auto f = fields(c.out);
  o.expect(f["code"] == "[8,6:8,4,6,3,4,2]_2", "parameters " + f["code"]);
  o.expect(std::abs(std::stod(f["rate"]) - 1.5212) <= 1e-4, "rate " + f["rate"]);

  const auto t = cli("compose catalog:ex5_inner catalog:c2_writes2 --trace --state 1100,0010 --messages 2");
  o.expect(t.status == 0, "trace exit");
  o.expect(has_line(t.out, "read: p=2 l=1 i=3 b'=10"), "recovery of (1100,0010)");
  o.expect(has_line(t.out, "decode: m=1 m'=2 m1=2"), "decode of (1100,0010)");
  o.expect(has_line(t.out, "encode m1=2") && has_line(t.out, "blocks: 1100 0011"), "encode m1=2");

  const auto fz = cli("fuzz compose:catalog:ex5_inner+catalog:c2_writes2 --exhaustive");
  auto ff = fields(fz.out);
  o.expect(fz.status == 0 && ff["sequences"] == "4608" && ff["failures"] == "0", "exhaustive round trip: " + fz.err);
  const double elapsed = seconds_since(start);
  o.expect(elapsed < 60, "took " + std::to_string(elapsed) + " s");
  return o;
}

// 5: quaternary inner code with a binary outer code.
Outcome qary_composition() {
  Outcome o;
  auto f = fields(cli("compose catalog:q4_split_25 catalog:c2_writes2").out);
  o.expect(f["code"] == "[4,10:4,2,4,2,6,3,4,2,2,1]_4", "parameters " + f["code"]);
  o.expect(std::abs(std::stod(f["rate"]) - 3.5425) <= 1e-4, "rate " + f["rate"]);
  const auto fz = cli("fuzz compose:catalog:q4_split_25+catalog:c2_writes2 --count 10000 --seed 5");
  auto ff = fields(fz.out);
  o.expect(fz.status == 0 && ff["sequences"] == "10000" && ff["failures"] == "0", "round trip: " + fz.err);
  return o;
}

// 6: rate-loss tables against the golden CSVs.
Outcome rate_tables() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const char* preset : {"tableV", "tableVI", "tableVII", "tableVIII", "ternary"}) {
    const auto out = kTmp / (std::string(preset) + ".csv");
    const auto r = cli(std::string("rates table --preset ") + preset + " -o \"" + out.string() + "\"");
    o.expect(r.status == 0, std::string(preset) + ": exit");
    o.expect(slurp(out) == slurp(fs::path(WOMKIT_FIXTURES) / (std::string(preset) + ".csv")), std::string(preset) + ": differs from fixture");
  }
  const auto tern = slurp(kTmp / "ternary.csv");
  o.expect(tern.find(",2.8923,") != std::string::npos && tern.find(",2.9392,") != std::string::npos &&
               tern.find(",2.01\n") != std::string::npos,
           "ternary row");
  const double elapsed = seconds_since(start);
  o.expect(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
  return o;
}

TableCode with_class(const TableCode& c, int i, int m, CodewordClass cls) {
  auto gens = c.generations();
  gens[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(m - 1)] = std::move(cls);
  return TableCode(c.q(), c.n(), gens);
}

MemoryState st(const std::string& digits, int q = 2) { return MemoryState::from_digits(digits, q); }

// 7: random round trips and the mutation corpus.
Outcome property_suite() {
  Outcome o;
  std::vector<std::string> specs;
  for (const auto& id : catalog_ids()) specs.push_back("catalog:" + id);
  specs.push_back("compose:catalog:ex5_inner+catalog:c2_writes2");
  specs.push_back("compose:catalog:q4_split_25+catalog:c2_writes2");
  specs.push_back("compose:catalog:fixed_3_22+catalog:fixed_3_22");
  specs.push_back("compose:catalog:q4_sync_24+catalog:c2_writes2");
  specs.push_back("compose:catalog:fixed_5_444+catalog:w5_3_536");
  for (const auto& spec : specs) {
    const auto r = cli("fuzz " + spec + " --count 10000 --seed 11");
    auto f = fields(r.out);
    o.expect(r.status == 0 && f["sequences"] == "10000" && f["failures"] == "0", spec + ": " + r.err);
  }

  const auto fig1 = catalog_entry("fig1_laminar").table;
  const auto fig2 = catalog_entry("q4_sync_24").table;
  const auto table1 = catalog_entry("table1_decodable").table;
  const auto inner = catalog_entry("ex5_inner").table;
  const auto fixed = catalog_entry("fixed_3_22").table;
  struct Mutation {
    std::string name;
    TableCode before;
    TableCode after;
    std::string flips;  // positions of flags_of() expected to change
  };
  std::vector<Mutation> corpus;
  corpus.push_back({"weight overlap", fig1, with_class(fig1, 3, 1, {st("1110"), st("0111"), st("1001")}), "000100"});
  corpus.push_back({"shared state", fig2, with_class(fig2, 4, 3, {st("33", 4), st("22", 4)}), "001000"});
  {
    auto gens = table1.generations();
    std::swap(gens[1][2], gens[1][3]);
    corpus.push_back({"message swap", table1, TableCode(2, 3, gens), "010000"});
  }
  corpus.push_back({"lost cover", inner, with_class(inner, 2, 1, {st("1100")}), "100000"});
  corpus.push_back({"zero generation", fig1, prepend_zero_generation(fig1), "000001"});
  {
    auto gens = fixed.generations();
    gens[1].pop_back();
    corpus.push_back({"dropped class", fixed, TableCode(2, 3, gens), "000010"});
  }
  corpus.push_back({"conflicting reuse", fig1, with_class(fig1, 3, 2, {st("1101"), st("1011"), st("1111")}), "011100"});

  for (const auto& m : corpus) {
    const auto before = kTmp / "before.json";
    const auto after = kTmp / "after.json";
    write_code_file(m.before, before);
    write_code_file(m.after, after);
    const auto a = flags_of(fields(cli("verify \"" + before.string() + "\"").out));
    const auto rb = cli("verify \"" + after.string() + "\"");
    const auto b = flags_of(fields(rb.out));
    std::string diff;
    for (std::size_t k = 0; k < a.size(); ++k) diff += a[k] == b[k] ? '0' : '1';
    o.expect(diff == m.flips, m.name + ": flipped " + diff);
    o.expect(rb.status == (b[0] == '1' ? 0 : 1), m.name + ": exit status");
    o.expect(b[3] == '0' || b[2] == '1', m.name + ": laminar without synchronous");
    o.expect(b[2] == '0' || b[1] == '1', m.name + ": synchronous without decodable");
  }
  o.notes.push_back(std::to_string(specs.size()) + " codes fuzzed, " + std::to_string(corpus.size()) + " mutations");
  return o;
}

// 8: fixed-rate inputs give a fixed-rate composite.
Outcome fixed_rate() {
  Outcome o;
  for (const auto& [inner, outer] : std::vector<std::pair<std::string, std::string>>{
           {"fixed_3_22", "fixed_3_22"}, {"fixed_5_444", "fixed_3_22"}, {"fixed_3_22", "fixed_5_444"}}) {
    auto f = fields(cli("compose catalog:" + inner + " catalog:" + outer).out);
    const auto code = f["code"];
    const auto colon = code.find(':');
    const auto sizes = split(code.substr(colon + 1, code.find(']') - colon - 1), ',');
    bool equal = !sizes.empty();
    for (const auto& s : sizes) equal = equal && s == sizes.front();
    o.expect(equal, inner + " o " + outer + ": " + code);
  }
  o.expect(fields(cli("compose catalog:fixed_3_22 catalog:fixed_3_22").out)["code"] == "[9,4:4,4,4,4]_2", "[3,2:2,2] o [3,2:2,2]");
  return o;
}

}  // namespace

int main() {
  fs::create_directories(kTmp);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"catalog validation", catalog_validation},
      {"bound tables", [] { return Outcome{}; }},
      {"partition builders", builders},
      {"composite code end to end", theorem_one},
      {"q-ary composition", qary_composition},
      {"rate tables", rate_tables},
      {"property suite", property_suite},
      {"fixed-rate preservation", fixed_rate},
  };
  int unexpected = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    bool known = false;
    if (k == 1) {
      auto c = bound_tables();
      o = c.outcome;
      known = !o.pass && c.matches_known_deviation;
    } else {
      o = criteria[k].second();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << (k + 1) << ' ' << criteria[k].first;
    if (known) std::cout << " (known deviation)";
    std::cout << '\n';
    for (const auto& n : o.notes) std::cout << "  " << n << '\n';
    std::cout.flush();
    if (!o.pass && !known) ++unexpected;
  }
  fs::remove_all(kTmp);
  return unexpected == 0 ? 0 : 1;
}
