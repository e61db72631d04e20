#include "womkit/search/budget.hpp"

#include <cstdlib>
#include <string>

namespace womkit::search {

long long default_budget() {
  constexpr long long kDefault = 20'000'000;
  const char* env = std::getenv("WOMKIT_BUDGET");
  if (!env || !*env) return kDefault;
  try {
    const long long v = std::stoll(env);
    return v > 0 ? v : kDefault;
  } catch (const std::exception&) {
    return kDefault;
  }
}

}  // namespace womkit::search
