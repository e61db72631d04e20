#include "womkit/search/cover.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "womkit/search/slice.hpp"

namespace womkit::search {

namespace {

// Fixed-width bit vector over lower-state indices.
struct Bits {
  std::vector<std::uint64_t> w;
  explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
  void set(int k) { w[static_cast<std::size_t>(k) >> 6] |= 1ULL << (k & 63); }
  bool test(int k) const { return (w[static_cast<std::size_t>(k) >> 6] >> (k & 63)) & 1ULL; }
  int count_new(const Bits& other) const {  // |other \ this|
    int c = 0;
    for (std::size_t j = 0; j < w.size(); ++j) c += std::popcount(other.w[j] & ~w[j]);
    return c;
  }
  void merge(const Bits& other) {
    for (std::size_t j = 0; j < w.size(); ++j) w[j] |= other.w[j];
  }
};

std::vector<Bits> cover_bits(const CoverInstance& inst) {
  std::vector<Bits> out;
  out.reserve(inst.upper.size());
  for (const auto& list : inst.covers) {
    Bits b(inst.lower.size());
    for (int x : list) b.set(x);
    out.push_back(std::move(b));
  }
  return out;
}

class CoverSearch {
 public:
  CoverSearch(const CoverInstance& inst, long long budget, int target, bool fix_first)
      : inst_(inst), bits_(cover_bits(inst)), budget_(budget), target_(target), fix_first_(fix_first),
        excluded_(inst.upper.size(), 0) {}

  // Looks for covers with fewer than `ceiling` states.
  void run(int ceiling) {
    best_size_ = ceiling;
    root_bound_ = -1;
    Bits covered(inst_.lower.size());
    std::vector<int> chosen;
    dfs(covered, static_cast<int>(inst_.lower.size()), chosen);
  }

  const std::vector<int>& best() const { return best_; }
  int best_size() const { return best_size_; }
  bool aborted() const { return aborted_; }
  long long nodes() const { return nodes_; }
  int root_bound() const { return root_bound_; }

 private:
  // Fewest further sets whose marginal gains can add up to `uncovered`.
  int gain_bound(const Bits& covered, int uncovered) const {
    std::vector<int> hist(static_cast<std::size_t>(inst_.max_cover) + 1, 0);
    for (std::size_t y = 0; y < bits_.size(); ++y) {
      if (excluded_[y]) continue;
      ++hist[static_cast<std::size_t>(covered.count_new(bits_[y]))];
    }
    int need = 0;
    int sum = 0;
    for (int v = inst_.max_cover; v > 0 && sum < uncovered; --v) {
      for (int c = hist[static_cast<std::size_t>(v)]; c > 0 && sum < uncovered; --c) {
        sum += v;
        ++need;
      }
    }
    return sum < uncovered ? 1 << 29 : need;
  }

  void dfs(const Bits& covered, int uncovered, std::vector<int>& chosen) {
    if (aborted_ || done_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    const int depth = static_cast<int>(chosen.size());
    if (uncovered == 0) {
      if (depth < best_size_) {
        best_ = chosen;
        best_size_ = depth;
        if (depth <= target_) done_ = true;
      }
      return;
    }
    const int bound = gain_bound(covered, uncovered);
    if (root_bound_ < 0) root_bound_ = bound;
    if (depth + bound >= best_size_) return;

    int pick = -1;
    int pick_options = 1 << 30;
    for (std::size_t x = 0; x < inst_.lower.size(); ++x) {
      if (covered.test(static_cast<int>(x))) continue;
      int options = 0;
      for (int y : inst_.covered_by[x]) options += !excluded_[static_cast<std::size_t>(y)];
      if (options < pick_options) {
        pick_options = options;
        pick = static_cast<int>(x);
        if (options <= 1) break;
      }
    }
    if (pick_options == 0) return;

    std::vector<std::pair<int, int>> cands;
    for (int y : inst_.covered_by[static_cast<std::size_t>(pick)]) {
      if (!excluded_[static_cast<std::size_t>(y)]) cands.emplace_back(-covered.count_new(bits_[static_cast<std::size_t>(y)]), y);
    }
    std::sort(cands.begin(), cands.end());
    if (fix_first_ && depth == 0) cands.resize(1);

    std::vector<int> tried;
    for (const auto& [neg_gain, y] : cands) {
      Bits next = covered;
      next.merge(bits_[static_cast<std::size_t>(y)]);
      chosen.push_back(y);
      dfs(next, uncovered + neg_gain, chosen);
      chosen.pop_back();
      if (aborted_ || done_) break;
      // Later siblings never use y: covers containing y were all explored.
      excluded_[static_cast<std::size_t>(y)] = 1;
      tried.push_back(y);
      if (depth + gain_bound(covered, uncovered) >= best_size_) break;
    }
    for (int y : tried) excluded_[static_cast<std::size_t>(y)] = 0;
  }

  const CoverInstance& inst_;
  std::vector<Bits> bits_;
  long long budget_;
  int target_;
  bool fix_first_;
  std::vector<char> excluded_;
  std::vector<int> best_;
  int best_size_ = 0;
  long long nodes_ = 0;
  bool aborted_ = false;
  bool done_ = false;
  int root_bound_ = -1;
};

}  // namespace

CoverInstance make_cover_instance(std::vector<MemoryState> lower, std::vector<MemoryState> upper) {
  CoverInstance inst;
  inst.lower = std::move(lower);
  inst.upper = std::move(upper);
  inst.covers.resize(inst.upper.size());
  inst.covered_by.resize(inst.lower.size());
  for (std::size_t y = 0; y < inst.upper.size(); ++y) {
    for (std::size_t x = 0; x < inst.lower.size(); ++x) {
      if (is_below(inst.lower[x], inst.upper[y])) {
        inst.covers[y].push_back(static_cast<int>(x));
        inst.covered_by[x].push_back(static_cast<int>(y));
      }
    }
    inst.max_cover = std::max(inst.max_cover, static_cast<int>(inst.covers[y].size()));
  }
  return inst;
}

CoverInstance slice_cover_instance(int q, int n, int i) {
  return make_cover_instance(enumerate_slice(q, n, i - 1).states, enumerate_slice(q, n, i).states);
}

std::vector<int> greedy_cover(const CoverInstance& inst) {
  const auto bits = cover_bits(inst);
  Bits covered(inst.lower.size());
  int uncovered = static_cast<int>(inst.lower.size());
  std::vector<int> out;
  while (uncovered > 0) {
    int best = -1;
    int gain = 0;
    for (std::size_t y = 0; y < bits.size(); ++y) {
      const int g = covered.count_new(bits[y]);
      if (g > gain) {
        gain = g;
        best = static_cast<int>(y);
      }
    }
    if (best < 0) return {};
    covered.merge(bits[static_cast<std::size_t>(best)]);
    uncovered -= gain;
    out.push_back(best);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SetCoverResult min_set_cover(const CoverInstance& inst, long long budget, int known_lower_bound, bool fix_first_choice) {
  SetCoverResult result;
  auto initial = greedy_cover(inst);
  if (initial.empty() && !inst.lower.empty()) {
    result.best = -1;
    result.exact = true;
    return result;
  }
  int simple = 0;
  if (inst.max_cover > 0) simple = static_cast<int>((inst.lower.size() + static_cast<std::size_t>(inst.max_cover) - 1) / static_cast<std::size_t>(inst.max_cover));
  const int lower = std::max(simple, known_lower_bound);
  if (static_cast<int>(initial.size()) <= lower) {
    result.best = static_cast<int>(initial.size());
    result.witness = initial;
    result.lower_bound = result.best;
    result.exact = true;
    return result;
  }
  CoverSearch search(inst, budget, lower, fix_first_choice);
  search.run(static_cast<int>(initial.size()));
  result.witness = search.best().empty() ? initial : search.best();
  result.best = static_cast<int>(result.witness.size());
  std::sort(result.witness.begin(), result.witness.end());
  result.nodes = search.nodes();
  result.exact = !search.aborted();
  result.lower_bound = result.exact ? result.best : std::max(lower, search.root_bound());
  return result;
}

CoverBelowResult find_cover_below(const CoverInstance& inst, int limit, long long budget, bool fix_first_choice) {
  CoverBelowResult result;
  CoverSearch search(inst, budget, limit, fix_first_choice);
  search.run(limit + 1);
  result.nodes = search.nodes();
  if (!search.best().empty() || (inst.lower.empty() && limit >= 0)) {
    result.status = SearchStatus::Found;
    result.witness = search.best();
    std::sort(result.witness.begin(), result.witness.end());
  } else {
    result.status = search.aborted() ? SearchStatus::BudgetExhausted : SearchStatus::Infeasible;
  }
  return result;
}

namespace {

class DisjointSearch {
 public:
  DisjointSearch(const CoverInstance& inst, int k, long long budget)
      : inst_(inst), k_(k), budget_(budget), owner_(inst.upper.size(), -1),
        hits_(static_cast<std::size_t>(k), std::vector<char>(inst.lower.size(), 0)),
        missing_(static_cast<std::size_t>(k), static_cast<int>(inst.lower.size())),
        reached_(inst.lower.size(), 0), avail_(inst.lower.size(), 0), free_(static_cast<int>(inst.upper.size())) {
    for (std::size_t x = 0; x < inst.lower.size(); ++x) avail_[x] = static_cast<int>(inst.covered_by[x].size());
  }

  SearchStatus run() {
    for (std::size_t x = 0; x < inst_.lower.size(); ++x) {
      if (avail_[x] < k_) return SearchStatus::Infeasible;
    }
    dfs();
    if (found_) return SearchStatus::Found;
    return aborted_ ? SearchStatus::BudgetExhausted : SearchStatus::Infeasible;
  }

  std::vector<std::vector<int>> classes() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(k_));
    for (std::size_t y = 0; y < solution_.size(); ++y) {
      if (solution_[y] >= 0) out[static_cast<std::size_t>(solution_[y])].push_back(static_cast<int>(y));
    }
    return out;
  }
  long long nodes() const { return nodes_; }

 private:
  int slack(std::size_t x) const { return avail_[x] - (k_ - reached_[x]); }

  // Returns false if some lower state can no longer be covered k times.
  bool assign(int y, int c) {
    owner_[static_cast<std::size_t>(y)] = c;
    --free_;
    bool ok = true;
    auto& hit = hits_[static_cast<std::size_t>(c)];
    for (int x : inst_.covers[static_cast<std::size_t>(y)]) {
      const auto xs = static_cast<std::size_t>(x);
      --avail_[xs];
      if (hit[xs]++ == 0) {
        ++reached_[xs];
        --missing_[static_cast<std::size_t>(c)];
      }
      if (slack(xs) < 0) ok = false;
    }
    return ok;
  }

  void unassign(int y, int c) {
    owner_[static_cast<std::size_t>(y)] = -1;
    ++free_;
    auto& hit = hits_[static_cast<std::size_t>(c)];
    for (int x : inst_.covers[static_cast<std::size_t>(y)]) {
      const auto xs = static_cast<std::size_t>(x);
      ++avail_[xs];
      if (--hit[xs] == 0) {
        --reached_[xs];
        ++missing_[static_cast<std::size_t>(c)];
      }
    }
  }

  void dfs() {
    if (found_ || aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    int demand = 0;
    for (int c = 0; c < k_; ++c) {
      const int m = missing_[static_cast<std::size_t>(c)];
      demand += (m + inst_.max_cover - 1) / inst_.max_cover;
    }
    if (demand == 0) {
      found_ = true;
      solution_ = owner_;
      return;
    }
    if (demand > free_) return;

    std::size_t pick = inst_.lower.size();
    int best_slack = 1 << 30;
    int best_avail = 1 << 30;
    for (std::size_t x = 0; x < inst_.lower.size(); ++x) {
      if (reached_[x] == k_) continue;
      const int s = slack(x);
      if (s < best_slack || (s == best_slack && avail_[x] < best_avail)) {
        best_slack = s;
        best_avail = avail_[x];
        pick = x;
      }
    }
    int c = 0;
    while (hits_[static_cast<std::size_t>(c)][pick]) ++c;

    const auto& hit = hits_[static_cast<std::size_t>(c)];
    std::vector<std::pair<int, int>> cands;
    for (int y : inst_.covered_by[pick]) {
      if (owner_[static_cast<std::size_t>(y)] >= 0) continue;
      int gain = 0;
      for (int x : inst_.covers[static_cast<std::size_t>(y)]) gain += !hit[static_cast<std::size_t>(x)];
      cands.emplace_back(-gain, y);
    }
    std::sort(cands.begin(), cands.end());
    for (const auto& [g, y] : cands) {
      if (assign(y, c)) dfs();
      unassign(y, c);
      if (found_ || aborted_) return;
    }
  }

  const CoverInstance& inst_;
  int k_;
  long long budget_;
  std::vector<int> owner_;
  std::vector<int> solution_;
  std::vector<std::vector<char>> hits_;  // hits_[c][x]: number of class-c states above x
  std::vector<int> missing_;             // per class: lower states not yet covered
  std::vector<int> reached_;             // per lower state: classes covering it
  std::vector<int> avail_;               // per lower state: free upper states above it
  int free_;
  long long nodes_ = 0;
  bool found_ = false;
  bool aborted_ = false;
};

}  // namespace

DisjointCoverResult find_disjoint_covers(const CoverInstance& inst, int k, long long budget) {
  DisjointCoverResult result;
  if (k <= 0) {
    result.status = SearchStatus::Found;
    return result;
  }
  if (inst.lower.empty()) {
    // Every non-empty class covers nothing; one state per class suffices.
    if (static_cast<int>(inst.upper.size()) < k) return result;
    result.status = SearchStatus::Found;
    for (int c = 0; c < k; ++c) result.classes.push_back({c});
    return result;
  }
  DisjointSearch search(inst, k, budget);
  result.status = search.run();
  result.nodes = search.nodes();
  if (result.status == SearchStatus::Found) result.classes = search.classes();
  return result;
}

std::vector<std::vector<int>> greedy_disjoint_covers(const CoverInstance& inst) {
  std::vector<std::vector<int>> out;
  std::vector<int> remaining(inst.upper.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  while (!remaining.empty()) {
    std::vector<MemoryState> ups;
    for (int y : remaining) ups.push_back(inst.upper[static_cast<std::size_t>(y)]);
    auto sub = make_cover_instance(inst.lower, ups);
    auto picked = greedy_cover(sub);
    if (picked.empty() && !inst.lower.empty()) break;
    if (inst.lower.empty()) picked = {0};
    std::vector<int> cls;
    for (int j : picked) cls.push_back(remaining[static_cast<std::size_t>(j)]);
    out.push_back(cls);
    std::vector<int> rest;
    std::set_difference(remaining.begin(), remaining.end(), cls.begin(), cls.end(), std::back_inserter(rest));
    remaining = std::move(rest);
  }
  return out;
}

}  // namespace womkit::search
