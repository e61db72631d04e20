#include "womkit/table_code.hpp"

#include <algorithm>

#include "womkit/error.hpp"

namespace womkit {

TableCode::TableCode(int q, int n, std::vector<Generation> generations) : generations_(std::move(generations)) {
  params_.q = q;
  params_.n = n;
  for (const auto& g : generations_) params_.sizes.push_back(static_cast<long long>(g.size()));
  params_.validate();

  index_.resize(generations_.size());
  for (std::size_t gi = 0; gi < generations_.size(); ++gi) {
    const auto where = [&](std::size_t ci) {
      return "generation " + std::to_string(gi + 1) + ", class " + std::to_string(ci + 1);
    };
    for (std::size_t ci = 0; ci < generations_[gi].size(); ++ci) {
      const auto& cls = generations_[gi][ci];
      if (cls.empty()) throw WomError(ErrorCode::SchemaError, where(ci) + " is empty");
      for (const auto& s : cls) {
        if (s.n() != n || s.q() != q)
          throw WomError(ErrorCode::SchemaError, where(ci) + ": state " + s.to_string() + " does not match n=" +
                                                     std::to_string(n) + ", q=" + std::to_string(q));
        auto [it, inserted] = index_[gi].emplace(s, static_cast<int>(ci) + 1);
        if (!inserted) {
          throw WomError(ErrorCode::SchemaError, where(ci) + ": state " + s.to_string() + " already belongs to class " +
                                                     std::to_string(it->second) + " of the same generation");
        }
      }
    }
  }
}

const Generation& TableCode::generation(int i) const {
  if (i < 1 || i > t()) throw WomError(ErrorCode::GenerationOutOfRange, "generation " + std::to_string(i) + " not in 1.." + std::to_string(t()));
  return generations_[static_cast<std::size_t>(i - 1)];
}

const CodewordClass& TableCode::codeword_class(int i, int m) const {
  const auto& g = generation(i);
  if (m < 1 || m > static_cast<int>(g.size()))
    throw WomError(ErrorCode::MessageOutOfRange, "message " + std::to_string(m) + " not in 1.." + std::to_string(g.size()) +
                                                     " at generation " + std::to_string(i));
  return g[static_cast<std::size_t>(m - 1)];
}

std::optional<int> TableCode::message_of(int i, const MemoryState& state) const {
  if (i < 1 || i > t()) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(i - 1)];
  if (auto it = idx.find(state); it != idx.end()) return it->second;
  return std::nullopt;
}

std::vector<MemoryState> TableCode::image(int i) const {
  std::vector<MemoryState> out;
  for (const auto& cls : generation(i)) out.insert(out.end(), cls.begin(), cls.end());
  std::sort(out.begin(), out.end(), listing_order);
  return out;
}

}  // namespace womkit
