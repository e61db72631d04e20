#pragma once

namespace womkit::search {

// Node-expansion cap for the branch-and-bound searches. WOMKIT_BUDGET in
// the environment overrides the built-in default.
long long default_budget();

}  // namespace womkit::search
