#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "womkit/catalog.hpp"
#include "womkit/code_file.hpp"
#include "womkit/codec.hpp"
#include "womkit/composite.hpp"
#include "womkit/error.hpp"
#include "womkit/properties.hpp"
#include "womkit/rates.hpp"
#include "womkit/search/bounds.hpp"
#include "womkit/search/budget.hpp"
#include "womkit/search/builders.hpp"
#include "womkit/search/partition.hpp"
#include "womkit/transforms.hpp"

using namespace womkit;

namespace {

std::string fmt(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int to_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw WomError(ErrorCode::ParseError, what + ": '" + s + "' is not an integer");
  return v;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const auto& s : split(text, ',')) out.push_back(to_int(s, what));
  return out;
}

// "catalog:<id>" or a path to a code file.
TableCode load_table(const std::string& spec) {
  if (spec.rfind("catalog:", 0) == 0) return catalog_entry(spec.substr(8)).table;
  return read_code_file(spec);
}

// Adds "compose:<inner>+<outer>" to the table specs.
CodePtr load_code(const std::string& spec) {
  if (spec.rfind("compose:", 0) == 0) {
    const auto parts = split(spec.substr(8), '+');
    if (parts.size() != 2) throw WomError(ErrorCode::ParseError, "expected compose:<inner>+<outer>, got '" + spec + "'");
    return compose(load_code(parts[0]), load_code(parts[1]));
  }
  return make_codec(load_table(spec));
}

// Digits (commas ignored) for q <= 10, otherwise comma-separated integers.
MemoryState parse_state(const std::string& text, int q) {
  if (q <= 10) {
    std::string digits;
    for (char c : text) {
      if (c != ',') digits += c;
    }
    return MemoryState::from_digits(digits, q);
  }
  std::vector<std::uint8_t> cells;
  for (int v : parse_int_list(text, "state")) {
    if (v < 0 || v >= q) throw WomError(ErrorCode::ParseError, "state: cell value " + std::to_string(v) + " outside 0.." + std::to_string(q - 1));
    cells.push_back(static_cast<std::uint8_t>(v));
  }
  return MemoryState(std::move(cells), q);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw WomError(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

void print_rate(const CodeParams& params) {
  const auto r = wom_rate(params);
  std::cout << "rate: " << fmt(r.total, 4) << '\n' << "per-generation:";
  for (double g : r.per_generation) std::cout << ' ' << fmt(g, 4);
  std::cout << '\n';
}

int cmd_verify(const std::string& spec) {
  const auto code = load_table(spec);
  const auto report = verify_wom(code);
  const auto& p = report.properties;
  std::cout << "code: " << code.params().to_string() << '\n'
            << "valid: " << yes_no(p.is_valid) << '\n'
            << "decodable: " << yes_no(p.is_decodable) << '\n'
            << "synchronous: " << yes_no(p.is_synchronous) << '\n'
            << "laminar: " << yes_no(p.is_laminar) << '\n'
            << "fixed-rate: " << yes_no(p.is_fixed_rate) << '\n'
            << "all-zero: " << yes_no(p.contains_all_zero) << '\n';
  print_rate(code.params());
  if (!p.is_valid) {
    std::cerr << "invalid code: " << (report.violation ? report.violation->to_string() : std::string("overlapping classes")) << '\n';
    return 1;
  }
  return 0;
}

int cmd_encode(const std::string& spec, const std::string& messages) {
  const auto code = load_code(spec);
  const auto msgs = parse_int_list(messages, "messages");
  const auto states = run_write_sequence(*code, msgs);
  for (std::size_t k = 0; k < states.size(); ++k) std::cout << "write " << k + 1 << ": m=" << msgs[k] << " -> " << states[k].to_string() << '\n';
  return 0;
}

int cmd_decode(const std::string& spec, const std::string& state_text) {
  const auto code = load_code(spec);
  const auto state = parse_state(state_text, code->params().q);
  if (code->is_synchronous()) {
    const int i = code->generation_of(state);
    std::cout << "generation: " << i << '\n';
    if (i > 0) std::cout << "message: " << code->decode(i, state) << '\n';
    return 0;
  }
  bool any = false;
  for (int i = 1; i <= code->params().t(); ++i) {
    try {
      const int m = code->decode(i, state);
      std::cout << "generation " << i << ": message " << m << '\n';
      any = true;
    } catch (const WomError&) {
    }
  }
  if (!any) throw WomError(ErrorCode::NotInAnyImage, state.to_string() + " is in no generation image");
  return 0;
}

std::string blocks_text(const std::vector<MemoryState>& blocks) {
  std::string s;
  for (const auto& b : blocks) s += (s.empty() ? "" : " ") + b.to_string();
  return s;
}

void trace_view(const CompositeCode& code, const std::vector<MemoryState>& blocks) {
  std::cout << "blocks: " << blocks_text(blocks) << '\n' << "inner generations:";
  for (const auto& b : blocks) std::cout << ' ' << code.inner().generation_of(b);
  std::cout << '\n';
  const auto view = composite_recover(code, blocks);
  const auto& r = view.read_view;
  const auto& w = view.write_view;
  std::cout << "read: p=" << r.p << " l=" << r.l << " i=" << r.i << " b'=" << r.b_prime.to_string() << '\n'
            << "write: p=" << w.p << " l=" << w.l << " i=" << w.i << " b'=" << w.b_prime.to_string()
            << " rolled_over=" << yes_no(view.rolled_over) << '\n';
  if (r.i > 0) {
    const auto msg = composite_decode(code, blocks);
    std::cout << "decode: m=" << msg.m << " m'=" << msg.m_prime << " m1=" << msg.m1 << '\n';
  }
}

struct ComposeArgs {
  std::string inner;
  std::string outer;
  int iterate = 1;
  bool trace = false;
  std::string state;
  std::string messages;
  std::string output;
};

int cmd_compose(const ComposeArgs& a) {
  const auto inner = load_code(a.inner);
  const auto outer = load_code(a.outer);
  const auto code = iterate_construction(inner, outer, a.iterate);
  std::cout << "inner: " << inner->params().to_string() << '\n'
            << "outer: " << outer->params().to_string() << '\n'
            << "code: " << code->params().to_string() << '\n';
  print_rate(code->params());
  if (!a.output.empty()) write_code_file(materialize(*code), a.output);
  if (!a.trace) return 0;

  const auto* composite = dynamic_cast<const CompositeCode*>(code.get());
  if (!composite) throw WomError(ErrorCode::PreconditionViolation, "--trace needs at least one composition step");
  std::vector<MemoryState> blocks;
  if (!a.state.empty()) {
    blocks = composite->split(parse_state(a.state, code->params().q));
  } else {
    blocks = composite->split(MemoryState::zeros(code->params().n, code->params().q));
  }
  trace_view(*composite, blocks);
  if (!a.messages.empty()) {
    for (int m1 : parse_int_list(a.messages, "messages")) {
      blocks = composite_encode(*composite, blocks, m1);
      std::cout << "encode m1=" << m1 << '\n';
      trace_view(*composite, blocks);
    }
  }
  return 0;
}

struct SearchArgs {
  int q = 2;
  int n = 1;
  int i = 1;
  int t = 1;
  int n_max = 1;
  int a_max = 0;
  bool exact_a = false;
  long long budget = 0;
  std::string output;
  std::string witness_dir;
};

std::string partition_json(const search::Partition& p) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cls : p.classes) {
    nlohmann::json states = nlohmann::json::array();
    for (const auto& s : cls) states.push_back(s.to_string());
    classes.push_back(std::move(states));
  }
  nlohmann::json doc = {{"q", p.q}, {"n", p.n}, {"i", p.i}, {"classes", std::move(classes)}};
  return doc.dump(2) + "\n";
}

std::string interval(std::uint64_t lo, std::uint64_t hi) { return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi); }

int cmd_search_bound(const SearchArgs& a) {
  if (a.q == 2) std::cout << "closed_form: " << search::bound_closed_form(a.n, a.i) << '\n';
  const auto b = search::bound_B(a.q, a.n, a.i, a.budget);
  std::cout << "min_class: " << interval(static_cast<std::uint64_t>(b.class_size.lower), static_cast<std::uint64_t>(b.class_size.upper)) << '\n'
            << "B: " << interval(b.low, b.high) << (b.known() ? "" : " (budget exhausted)") << '\n';
  if (a.exact_a) {
    const auto r = search::max_partition(a.q, a.n, a.i, a.budget);
    std::cout << "A: " << r.partition.size();
    if (!r.exact) std::cout << " (lower bound; upper bound " << r.upper_bound << ")";
    std::cout << '\n';
    if (!a.output.empty()) emit(partition_json(r.partition), a.output);
  }
  return 0;
}

int cmd_search_table(const SearchArgs& a) {
  std::vector<search::BoundRecord> records;
  for (int n = 1; n <= a.n_max; ++n) {
    for (int i = 1; i <= n * (a.q - 1); ++i) {
      const bool with_a = n <= a.a_max;
      auto rec = search::compute_bound_record(a.q, n, i, with_a, a.budget);
      if (with_a && !a.witness_dir.empty()) {
        const auto part = search::max_partition(a.q, n, i, a.budget).partition;
        const auto name = "A_" + std::to_string(a.q) + "_" + std::to_string(n) + "_" + std::to_string(i) + ".json";
        std::filesystem::create_directories(a.witness_dir);
        emit(partition_json(part), (std::filesystem::path(a.witness_dir) / name).string());
        rec.witness_file = name;
      }
      if (!rec.b.known()) {
        std::cerr << "B(" << n << "," << i << ") unresolved within budget: " << interval(rec.b.low, rec.b.high) << '\n';
      }
      records.push_back(std::move(rec));
    }
  }
  std::ostringstream csv;
  search::write_bound_csv(csv, records);
  emit(csv.str(), a.output);
  return 0;
}

// Compares the best partition found with B(n,i); a proven gap needs an
// exact A strictly below B.
int cmd_search_gap(const SearchArgs& a) {
  const auto b = search::bound_B(a.q, a.n, a.i, a.budget);
  const auto r = search::max_partition(a.q, a.n, a.i, a.budget);
  std::cout << "A: " << r.partition.size() << (r.exact ? " (exact)" : " (lower bound; upper bound " + std::to_string(r.upper_bound) + ")") << '\n'
            << "B: " << interval(b.low, b.high) << '\n';
  if (r.exact && b.known()) {
    std::cout << "gap: " << (static_cast<std::uint64_t>(r.partition.size()) < b.value() ? "proven" : "none") << '\n';
  } else {
    std::cout << "gap: undecided\n";
  }
  return 0;
}

int cmd_search_greedy(const SearchArgs& a) {
  const auto code = search::greedy_laminar(a.q, a.n, a.t, a.budget);
  std::cerr << "found " << code.params().to_string() << ", rate " << fmt(wom_rate(code.params()).total, 4) << '\n';
  emit(to_code_json(code), a.output);
  return 0;
}

struct BuildArgs {
  std::string kind;
  int q = 2;
  int n = 1;
  int k = 1;
  int m = 0;
  std::string output;
};

search::Partition doubling_chain(int k) {
  search::Partition p{2, 1, 2, {}};
  for (int step = 0; step < k; ++step) p = search::build_prop_doubling(1 << step, p);
  return p;
}

int cmd_search_build(const BuildArgs& a) {
  search::Partition p;
  if (a.kind == "singletons") {
    p = search::build_singletons(a.q, a.n);
  } else if (a.kind == "doubling") {
    p = doubling_chain(a.k);
  } else if (a.kind == "extension") {
    const int n = 1 << a.k;
    p = search::build_prop_recursive(2, n + 1, 2, doubling_chain(a.k), search::build_singletons(2, n));
  } else if (a.kind == "qary-even") {
    p = search::build_prop_qary_even(a.q, search::max_partition(2, a.n, 2, search::default_budget()).partition);
  } else {
    p = search::build_prop_circular(a.q, a.m);
  }
  std::cerr << "E_" << p.q << "(" << p.n << "," << p.i << "): " << p.size() << " classes\n";
  emit(partition_json(p), a.output);
  return 0;
}

std::vector<std::vector<int>> parse_groups(const std::string& text) {
  std::vector<std::vector<int>> groups;
  for (const auto& g : split(text, ';')) groups.push_back(parse_int_list(g, "groups"));
  return groups;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw WomError(ErrorCode::ParseError, "range: expected i:j, got '" + text + "'");
  return {to_int(parts[0], "range"), to_int(parts[1], "range")};
}

int cmd_fuzz(const std::string& spec, std::uint64_t seed, int count, bool exhaustive) {
  const auto code = load_code(spec);
  const auto& params = code->params();
  long long runs = 0;
  if (exhaustive) {
    std::vector<int> msgs(static_cast<std::size_t>(params.t()), 1);
    while (true) {
      run_write_sequence(*code, msgs);
      ++runs;
      std::size_t k = 0;
      while (k < msgs.size() && ++msgs[k] > params.sizes[k]) msgs[k++] = 1;
      if (k == msgs.size()) break;
    }
  } else {
    std::mt19937_64 rng(seed);
    for (int r = 0; r < count; ++r) {
      const int len = std::uniform_int_distribution<int>(0, params.t())(rng);
      std::vector<int> msgs;
      for (int k = 0; k < len; ++k) msgs.push_back(static_cast<int>(std::uniform_int_distribution<long long>(1, params.sizes[static_cast<std::size_t>(k)])(rng)));
      run_write_sequence(*code, msgs);
      ++runs;
    }
  }
  std::cout << "code: " << params.to_string() << '\n' << "sequences: " << runs << '\n' << "failures: 0\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"womkit: write-once memory code toolkit"};
  app.require_subcommand(1);

  std::string code_spec;
  std::string messages;
  std::string state;
  std::string output;

  auto* verify = app.add_subcommand("verify", "Check a code and print its properties and rate");
  verify->add_option("code", code_spec, "code file or catalog:<id>")->required();

  auto* encode = app.add_subcommand("encode", "Write a message sequence from the empty memory");
  encode->add_option("code", code_spec, "code file, catalog:<id> or compose:<inner>+<outer>")->required();
  encode->add_option("--messages", messages, "comma-separated messages, one per write")->required();

  auto* decode = app.add_subcommand("decode", "Decode a memory state");
  decode->add_option("code", code_spec, "code file, catalog:<id> or compose:<inner>+<outer>")->required();
  decode->add_option("--state", state, "digits or comma-separated cell values")->required();

  ComposeArgs ca;
  auto* comp = app.add_subcommand("compose", "Concatenate an inner and an outer synchronous code");
  comp->add_option("inner", ca.inner)->required();
  comp->add_option("outer", ca.outer)->required();
  comp->add_option("--iterate", ca.iterate, "apply the construction this many times")->check(CLI::NonNegativeNumber);
  comp->add_flag("--trace", ca.trace, "log generation recovery and decoding of --state");
  comp->add_option("--state", ca.state, "composite state, blocks may be comma-separated");
  comp->add_option("--messages", ca.messages, "with --trace: messages to encode after the initial state");
  comp->add_option("-o,--output", ca.output, "write the materialized table");

  SearchArgs sa;
  sa.budget = search::default_budget();
  auto* search = app.add_subcommand("search", "Partition bounds and greedy code search");
  search->require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--q", sa.q)->check(CLI::Range(2, 16));
    sub->add_option("--budget", sa.budget, "node budget per search");
    sub->add_option("-o,--output", sa.output);
  };
  auto* bound = search->add_subcommand("bound", "closed-form bound, B(n,i) and optionally A(n,i)");
  add_common(bound);
  bound->add_option("--n", sa.n)->required()->check(CLI::PositiveNumber);
  bound->add_option("--i", sa.i)->required()->check(CLI::PositiveNumber);
  bound->add_flag("--exact-A", sa.exact_a, "also search for a maximum partition");
  auto* table = search->add_subcommand("table", "bound records for every n <= n-max as CSV");
  add_common(table);
  table->add_option("--n-max", sa.n_max)->required()->check(CLI::PositiveNumber);
  table->add_option("--a-max", sa.a_max, "compute A(n,i) for n up to this value");
  table->add_option("--witness-dir", sa.witness_dir, "write each partition found as JSON here");
  auto* gap = search->add_subcommand("gap", "compare the best partition with B(n,i)");
  add_common(gap);
  gap->add_option("--n", sa.n)->required()->check(CLI::PositiveNumber);
  gap->add_option("--i", sa.i)->required()->check(CLI::PositiveNumber);
  auto* greedy = search->add_subcommand("greedy", "laminar code with one maximum partition per weight");
  add_common(greedy);
  greedy->add_option("--n", sa.n)->required()->check(CLI::PositiveNumber);
  greedy->add_option("--t", sa.t)->required()->check(CLI::PositiveNumber);

  BuildArgs ba;
  auto* build = search->add_subcommand("build", "partition of a weight slice from a fixed construction");
  build->add_option("kind", ba.kind)->required()->check(CLI::IsMember({"singletons", "doubling", "extension", "qary-even", "circular"}));
  build->add_option("--q", ba.q)->check(CLI::Range(2, 16));
  build->add_option("--n", ba.n, "length (singletons, qary-even)")->check(CLI::PositiveNumber);
  build->add_option("--k", ba.k, "doubling steps; length 2^k or 2^k+1")->check(CLI::Range(0, 8));
  build->add_option("--m", ba.m, "circular: length 2m+1")->check(CLI::NonNegativeNumber);
  build->add_option("-o,--output", ba.output);

  auto* transform = app.add_subcommand("transform", "Derive a code from another one");
  transform->require_subcommand(1);
  auto* prepend = transform->add_subcommand("prepend-zero", "add a first generation holding only the all-zero state");
  prepend->add_option("code", code_spec)->required();
  prepend->add_option("-o,--output", output);
  std::string range;
  auto* merge = transform->add_subcommand("merge", "merge generations i..j");
  merge->add_option("code", code_spec)->required();
  merge->add_option("--range", range, "i:j")->required();
  merge->add_option("-o,--output", output);
  int gen = 0;
  std::string groups;
  auto* splitg = transform->add_subcommand("split", "split one generation into several");
  splitg->add_option("code", code_spec)->required();
  splitg->add_option("--gen", gen)->required();
  splitg->add_option("--groups", groups, "class indices, e.g. 1,2;3")->required();
  splitg->add_option("-o,--output", output);
  int classes = 0;
  std::string promote;
  auto* reorg = transform->add_subcommand("reorganize", "re-partition a merged generation");
  reorg->add_option("code", code_spec)->required();
  reorg->add_option("--gen", gen)->required();
  reorg->add_option("--classes", classes)->required();
  reorg->add_option("--promote", promote, "comma-separated states moved to the previous generation as one class");
  reorg->add_option("--budget", sa.budget);
  reorg->add_option("-o,--output", output);

  std::string preset;
  auto* rates = app.add_subcommand("rates", "Rate-loss comparison tables");
  rates->require_subcommand(1);
  auto* rtable = rates->add_subcommand("table", "emit a preset table as CSV");
  rtable->add_option("--preset", preset)->required()->check(CLI::IsMember(rate_preset_names()));
  rtable->add_option("-o,--output", output);

  std::string entry;
  auto* cat = app.add_subcommand("catalog", "Built-in codes");
  cat->require_subcommand(1);
  auto* clist = cat->add_subcommand("list", "list entries");
  auto* cshow = cat->add_subcommand("show", "print one entry");
  cshow->add_option("id", entry)->required();
  auto* cexport = cat->add_subcommand("export", "write one entry as a code file");
  cexport->add_option("id", entry)->required();
  cexport->add_option("-o,--output", output);

  std::uint64_t seed = 1;
  int count = 10000;
  bool exhaustive = false;
  auto* fuzz = app.add_subcommand("fuzz", "Random write sequences with round-trip checks");
  fuzz->add_option("code", code_spec)->required();
  fuzz->add_option("--seed", seed);
  fuzz->add_option("--count", count)->check(CLI::NonNegativeNumber);
  fuzz->add_flag("--exhaustive", exhaustive, "run every full-length message tuple instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(code_spec);
    if (*encode) return cmd_encode(code_spec, messages);
    if (*decode) return cmd_decode(code_spec, state);
    if (*comp) return cmd_compose(ca);
    if (*bound) return cmd_search_bound(sa);
    if (*table) return cmd_search_table(sa);
    if (*gap) return cmd_search_gap(sa);
    if (*greedy) return cmd_search_greedy(sa);
    if (*build) return cmd_search_build(ba);
    if (*prepend) {
      emit(to_code_json(prepend_zero_generation(load_table(code_spec))), output);
      return 0;
    }
    if (*merge) {
      const auto [i, j] = parse_range(range);
      emit(to_code_json(merge_generations(load_table(code_spec), i, j)), output);
      return 0;
    }
    if (*splitg) {
      emit(to_code_json(split_generation(load_table(code_spec), gen, parse_groups(groups))), output);
      return 0;
    }
    if (*reorg) {
      const auto code = load_table(code_spec);
      std::vector<MemoryState> moved;
      if (!promote.empty()) {
        for (const auto& s : split(promote, ',')) moved.push_back(MemoryState::from_digits(s, code.q()));
      }
      emit(to_code_json(search::reorganize_merged_generation(code, gen, classes, moved, sa.budget)), output);
      return 0;
    }
    if (*rtable) {
      std::ostringstream csv;
      write_rate_csv(csv, emit_rate_table(rate_preset(preset)));
      emit(csv.str(), output);
      return 0;
    }
    if (*clist) {
      for (const auto& e : load_catalog()) std::cout << e.id << '\t' << e.params().to_string() << '\t' << fmt(e.expected_rate, 4) << '\n';
      return 0;
    }
    if (*cshow) {
      const auto& e = catalog_entry(entry);
      std::cout << "id: " << e.id << '\n' << "source: " << e.provenance << '\n';
      return cmd_verify("catalog:" + entry) == 0 ? (std::cout << to_code_json(e.table), 0) : 1;
    }
    if (*cexport) {
      emit(to_code_json(catalog_entry(entry).table), output);
      return 0;
    }
    if (*fuzz) return cmd_fuzz(code_spec, seed, count, exhaustive);
  } catch (const WomError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
