#include "womkit/rates.hpp"

#include <cmath>
#include <cstdio>

#include "womkit/error.hpp"
#include "womkit/transforms.hpp"

namespace womkit {

int counter_cells(int t_nd, int q) {
  if (t_nd < 1 || q < 2) throw WomError(ErrorCode::PreconditionViolation, "need t_nd >= 1 and q >= 2");
  return (t_nd - 1 + q - 2) / (q - 1);
}

RateLoss rate_loss_basic(double r_nd, int t_nd, int q, int target_n) {
  const int c = counter_cells(t_nd, q);
  if (target_n <= c) throw WomError(ErrorCode::PreconditionViolation, "target length must exceed the " + std::to_string(c) + " counter cells");
  const double n = target_n;
  return {r_nd * (n - c) / n, c / n};
}

SyncLoss rate_loss_sync(double r_nd, int target_n, const CodeParams& sync) {
  if (r_nd <= 0) throw WomError(ErrorCode::PreconditionViolation, "R_nd must be positive");
  if (target_n <= sync.n) throw WomError(ErrorCode::PreconditionViolation, "target length must exceed the synchronous code length");
  const double n = target_n;
  const double r_sync = wom_rate(sync).total;
  SyncLoss out;
  out.rate = (r_nd * (n - sync.n) + r_sync * sync.n) / n;
  out.gamma = (sync.n / n) * (1.0 - r_sync / r_nd);
  out.reduction = rate_loss_basic(r_nd, sync.t(), sync.q, target_n).gamma / out.gamma;
  return out;
}

RateReport append_counter(double r_nd, int t_nd, int q, int target_n) {
  RateReport r;
  r.q = q;
  r.target_n = target_n;
  r.t_nd = t_nd;
  r.r_nd = r_nd;
  r.counter_cells = counter_cells(t_nd, q);
  const auto basic = rate_loss_basic(r_nd, t_nd, q, target_n);
  r.basic_rate = basic.rate;
  r.gamma_basic = basic.gamma;
  return r;
}

RateReport append_sync(double r_nd, int target_n, const CodeParams& sync) {
  auto r = append_counter(r_nd, sync.t(), sync.q, target_n);
  const auto loss = rate_loss_sync(r_nd, target_n, sync);
  r.sync_code = sync.to_string();
  r.n_sync = sync.n;
  r.r_sync = wom_rate(sync).total;
  r.sync_rate = loss.rate;
  r.gamma_sync = loss.gamma;
  r.reduction_factor = loss.reduction;
  return r;
}

TableCode append_sync(const TableCode& nondecodable, const TableCode& sync) { return product_code(nondecodable, sync); }

namespace {

const char* kBinarySource = "external: best known binary nondecodable rate";
const char* kQ4Source = "external: best known quaternary nondecodable rate";
const char* kQ4Lifted = "external: quaternary rate lifted from binary rates";
const char* kQ4Recursion = "external: quaternary rate lifted from a binary rate recursion";

std::vector<PresetRow> binary_rows() {
  return {
      {4, 1.8566, kBinarySource, {"[3,4:1,3,1,1]", "[5,4:1,5,3,6]"}},
      {5, 1.9689, kBinarySource, {"[4,5:1,4,3,1,1]"}},
      {6, 2.1331, kBinarySource, {"[5,6:1,5,3,2,1,1]"}},
      {7, 2.1723, kBinarySource, {"[6,7:1,6,5,3,1,1,1]", "[8,7:1,8,4,6,3,4,2]"}},
  };
}

std::vector<PresetRow> quaternary_rows() {
  return {
      {5, 3.9328, kQ4Source, {"[2,5:1,2,2,3,3]_4"}},
      {6, 4.2594, kQ4Source, {"[2,6:1,2,2,3,2,1]_4"}},
      {7, 4.3394, kQ4Source, {"[2,7:1,2,2,2,1,1,1]_4"}},
      {8, 4.5088, kQ4Lifted, {"[3,8:1,3,3,3,2,1,1,3]_4"}},
      {9, 4.5836, kQ4Lifted, {"[3,9:1,3,3,3,2,1,1,1,2]_4"}},
      {10, 4.6932, kQ4Lifted, {"[3,10:1,3,3,3,2,1,1,1,1,1]_4"}},
      {11, 4.7193, kQ4Recursion, {"[4,11:1,4,2,4,2,6,3,4,2,2,1]_4"}},
  };
}

const std::vector<RatePreset>& presets() {
  static const std::vector<RatePreset> all = {
      {"tableV", 2, 64, binary_rows()},
      {"tableVI", 2, 256, binary_rows()},
      {"tableVII", 4, 64, quaternary_rows()},
      {"tableVIII", 4, 256, quaternary_rows()},
      {"ternary", 3, 64, {{4, 2.9856, "external: two-write binary rate times q-1", {"[2,4:1,2,2,2]_3"}}}},
  };
  return all;
}

// Half-up decimal rounding: 3.125 prints as 3.13. The small offset
// absorbs binary representation error of exact decimal ties.
std::string fixed(double v, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double rounded = std::floor(v * scale + 0.5 + 1e-7) / scale;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, rounded);
  return buf;
}

}  // namespace

const RatePreset& rate_preset(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  throw WomError(ErrorCode::UnknownEntry, "no rate preset '" + std::string(name) + "'");
}

std::vector<std::string> rate_preset_names() {
  std::vector<std::string> names;
  for (const auto& p : presets()) names.push_back(p.name);
  return names;
}

std::vector<RateReport> emit_rate_table(const RatePreset& preset) {
  std::vector<RateReport> out;
  for (const auto& row : preset.rows) {
    for (const auto& id : row.sync_codes) {
      const auto sync = CodeParams::parse(id);
      if (sync.q != preset.q || sync.t() != row.t_nd) {
        throw WomError(ErrorCode::GenerationCountMismatch, id + " does not fit t_nd=" + std::to_string(row.t_nd) + ", q=" + std::to_string(preset.q));
      }
      out.push_back(append_sync(row.r_nd, preset.target_n, sync));
    }
  }
  return out;
}

void write_rate_csv(std::ostream& out, const std::vector<RateReport>& reports) {
  out << "q,target_n,t_nd,R_nd,basic_rate,gamma_basic_pct,sync_code,sync_rate,gamma_sync_pct,reduction_factor\n";
  for (const auto& r : reports) {
    out << r.q << ',' << r.target_n << ',' << r.t_nd << ',' << fixed(r.r_nd, 4) << ',' << fixed(r.basic_rate, 4) << ','
        << fixed(100 * r.gamma_basic, 2) << ",\"" << r.sync_code << "\"," << fixed(r.sync_rate, 4) << ',' << fixed(100 * r.gamma_sync, 2)
        << ',' << fixed(r.reduction_factor, 2) << '\n';
  }
}

}  // namespace womkit
