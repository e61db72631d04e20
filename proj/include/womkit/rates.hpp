#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "womkit/code_params.hpp"
#include "womkit/table_code.hpp"

namespace womkit {

// Comparison of two ways to make a t_nd-write nondecodable code of rate
// R_nd decodable at total length target_n: c counter cells with no data,
// or an appended synchronous code of length n_sync and rate R_sync.
struct RateReport {
  int q = 2;
  int target_n = 0;
  int t_nd = 1;
  double r_nd = 0.0;
  int counter_cells = 0;
  double basic_rate = 0.0;
  double gamma_basic = 0.0;
  std::string sync_code;  // empty for counter-only reports
  int n_sync = 0;
  double r_sync = 0.0;
  double sync_rate = 0.0;
  double gamma_sync = 0.0;
  double reduction_factor = 0.0;
};

struct RateLoss {
  double rate = 0.0;
  double gamma = 0.0;
};

// ceil((t_nd - 1) / (q - 1)).
int counter_cells(int t_nd, int q);

RateLoss rate_loss_basic(double r_nd, int t_nd, int q, int target_n);

struct SyncLoss {
  double rate = 0.0;
  double gamma = 0.0;
  double reduction = 0.0;  // gamma_basic / gamma_sync
};

// The synchronous code has t_nd = sync.t() writes and alphabet sync.q.
SyncLoss rate_loss_sync(double r_nd, int target_n, const CodeParams& sync);

RateReport append_counter(double r_nd, int t_nd, int q, int target_n);
RateReport append_sync(double r_nd, int target_n, const CodeParams& sync);
// Extensional version: the side-by-side product of both tables.
TableCode append_sync(const TableCode& nondecodable, const TableCode& sync);

struct PresetRow {
  int t_nd = 0;
  double r_nd = 0.0;
  std::string source;
  std::vector<std::string> sync_codes;  // parameter strings
};

struct RatePreset {
  std::string name;
  int q = 2;
  int target_n = 0;
  std::vector<PresetRow> rows;
};

// tableV, tableVI (binary, n = 64 / 256), tableVII, tableVIII (q = 4,
// n = 64 / 256) and ternary. Throws UnknownEntry.
const RatePreset& rate_preset(std::string_view name);
std::vector<std::string> rate_preset_names();

// One report per (row, sync code).
std::vector<RateReport> emit_rate_table(const RatePreset& preset);

// Header q,target_n,t_nd,R_nd,basic_rate,gamma_basic_pct,sync_code,
// sync_rate,gamma_sync_pct,reduction_factor. Rates 4 decimals,
// percentages and factors 2.
void write_rate_csv(std::ostream& out, const std::vector<RateReport>& reports);

}  // namespace womkit
