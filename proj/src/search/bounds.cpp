#include "womkit/search/bounds.hpp"

#include <algorithm>

#include "womkit/error.hpp"
#include "womkit/search/cover.hpp"
#include "womkit/search/partition.hpp"
#include "womkit/search/slice.hpp"

namespace womkit::search {

namespace {

void check_range(int q, int n, int i) {
  if (q < 2 || n < 1 || i < 1 || i > n * (q - 1)) {
    throw WomError(ErrorCode::PreconditionViolation,
                   "need 1 <= i <= n(q-1), got q=" + std::to_string(q) + " n=" + std::to_string(n) + " i=" + std::to_string(i));
  }
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace

std::uint64_t bound_closed_form(int n, int i) {
  check_range(2, n, i);
  return binomial(n, i) / ceil_div(binomial(n, i - 1), static_cast<std::uint64_t>(i));
}

std::uint64_t schonheim_bound(int n, int i) {
  // L(n, k, t) = ceil(n/k * L(n-1, k-1, t-1)), L(., ., 0) = 1; here k = i, t = i-1.
  std::uint64_t value = 1;
  for (int depth = i - 1; depth >= 1; --depth) {
    const auto vv = static_cast<std::uint64_t>(n - depth + 1);
    const auto kk = static_cast<std::uint64_t>(i - depth + 1);
    value = ceil_div(vv * value, kk);
  }
  return value;
}

namespace {

int class_lower_bound(int q, int n, int i, const CoverInstance& inst) {
  int lower = static_cast<int>(ceil_div(inst.lower.size(), static_cast<std::uint64_t>(inst.max_cover)));
  if (q == 2) lower = std::max(lower, static_cast<int>(schonheim_bound(n, i)));
  return lower;
}

}  // namespace

ClassSizeResult min_class_size(int q, int n, int i, long long budget) {
  check_range(q, n, i);
  const auto inst = slice_cover_instance(q, n, i);
  const int lower = class_lower_bound(q, n, i, inst);
  const auto r = min_set_cover(inst, budget, lower, q == 2);
  ClassSizeResult out;
  out.upper = r.best;
  out.lower = r.exact ? r.best : std::max(lower, r.lower_bound);
  out.nodes = r.nodes;
  return out;
}

BResult bound_B(int q, int n, int i, long long budget) {
  check_range(q, n, i);
  const auto inst = slice_cover_instance(q, n, i);
  const std::uint64_t total = inst.upper.size();
  ClassSizeResult cs;
  cs.lower = class_lower_bound(q, n, i, inst);
  cs.upper = static_cast<int>(greedy_cover(inst).size());
  long long left = budget;
  while (total / static_cast<std::uint64_t>(cs.lower) != total / static_cast<std::uint64_t>(cs.upper) && left > 0) {
    // Largest class size that would still raise B above floor(total/upper).
    const auto next_b = total / static_cast<std::uint64_t>(cs.upper) + 1;
    const int limit = static_cast<int>(total / next_b);
    auto r = find_cover_below(inst, limit, left, q == 2);
    cs.nodes += r.nodes;
    left -= r.nodes;
    if (r.status == SearchStatus::Found) {
      cs.upper = static_cast<int>(r.witness.size());
    } else if (r.status == SearchStatus::Infeasible) {
      cs.lower = limit + 1;
    } else {
      break;
    }
  }
  BResult out;
  out.class_size = cs;
  out.low = total / static_cast<std::uint64_t>(cs.upper);
  out.high = total / static_cast<std::uint64_t>(cs.lower);
  return out;
}

BoundRecord compute_bound_record(int q, int n, int i, bool with_a, long long budget) {
  BoundRecord rec;
  rec.q = q;
  rec.n = n;
  rec.i = i;
  if (q == 2) rec.closed_form = bound_closed_form(n, i);
  rec.b = bound_B(q, n, i, budget);
  if (with_a) {
    const auto pr = max_partition(q, n, i, budget);
    rec.a = pr.partition.size();
    rec.a_exact = pr.exact;
  }
  return rec;
}

void write_bound_csv(std::ostream& out, const std::vector<BoundRecord>& records) {
  out << "q,n,i,closed_form,B,A,exact_flag,witness_file\n";
  for (const auto& r : records) {
    out << r.q << ',' << r.n << ',' << r.i << ',';
    if (r.closed_form) out << *r.closed_form;
    out << ',';
    if (r.b.known()) {
      out << r.b.value();
    } else {
      out << r.b.low << ".." << r.b.high;
    }
    out << ',';
    if (r.a > 0) out << r.a;
    out << ',' << (r.a_exact ? 1 : 0) << ',' << r.witness_file << '\n';
  }
}

}  // namespace womkit::search
