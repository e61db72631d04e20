#include "womkit/code_params.hpp"

#include <charconv>
#include <cmath>

#include "womkit/error.hpp"

namespace womkit {

void CodeParams::validate() const {
  if (q < 2) throw WomError(ErrorCode::SchemaError, "q must be >= 2, got " + std::to_string(q));
  if (n < 1) throw WomError(ErrorCode::SchemaError, "n must be >= 1, got " + std::to_string(n));
  if (sizes.empty()) throw WomError(ErrorCode::SchemaError, "a code needs at least one generation");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) throw WomError(ErrorCode::SchemaError, "M_" + std::to_string(i + 1) + " must be >= 1");
  }
}

std::string CodeParams::to_string() const {
  std::string out = "[" + std::to_string(n) + "," + std::to_string(t()) + ":";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sizes[i]);
  }
  return out + "]_" + std::to_string(q);
}

namespace {

long long parse_int(std::string_view text, std::string_view whole) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw WomError(ErrorCode::ParseError, "bad integer '" + std::string(text) + "' in \"" + std::string(whole) + "\"");
  return value;
}

}  // namespace

CodeParams CodeParams::parse(std::string_view text) {
  const auto open = text.find('[');
  const auto close = text.find(']');
  const auto colon = text.find(':');
  if (open != 0 || close == std::string_view::npos || colon == std::string_view::npos || colon > close)
    throw WomError(ErrorCode::ParseError, "expected [n,t:M1,...,Mt]_q, got \"" + std::string(text) + "\"");
  CodeParams p;
  const auto head = text.substr(1, colon - 1);
  const auto comma = head.find(',');
  if (comma == std::string_view::npos) throw WomError(ErrorCode::ParseError, "missing t in \"" + std::string(text) + "\"");
  p.n = static_cast<int>(parse_int(head.substr(0, comma), text));
  const auto t = parse_int(head.substr(comma + 1), text);
  auto body = text.substr(colon + 1, close - colon - 1);
  while (!body.empty()) {
    const auto next = body.find(',');
    p.sizes.push_back(parse_int(body.substr(0, next), text));
    if (next == std::string_view::npos) break;
    body.remove_prefix(next + 1);
  }
  auto tail = text.substr(close + 1);
  if (!tail.empty()) {
    if (tail.front() != '_') throw WomError(ErrorCode::ParseError, "unexpected suffix in \"" + std::string(text) + "\"");
    p.q = static_cast<int>(parse_int(tail.substr(1), text));
  }
  if (t != p.t()) throw WomError(ErrorCode::ParseError, "t=" + std::to_string(t) + " but " + std::to_string(p.t()) + " sizes listed");
  p.validate();
  return p;
}

WomRate wom_rate(const CodeParams& params) {
  WomRate rate;
  rate.per_generation.reserve(params.sizes.size());
  for (auto m : params.sizes) {
    const double r = std::log2(static_cast<double>(m)) / params.n;
    rate.per_generation.push_back(r);
    rate.total += r;
  }
  return rate;
}

bool check_fixed_rate(const CodeParams& params) {
  for (auto m : params.sizes)
    if (m != params.sizes.front()) return false;
  return true;
}

}  // namespace womkit
