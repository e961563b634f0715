#pragma once

#include <cstdint>

namespace ringlab {

// Cost guard for every enumeration-based operation. An operation whose
// search space exceeds the relevant limit refuses to start (budget_error)
// instead of silently truncating.
struct SearchBudget {
    std::uint64_t max_ring_order = 65536;
    std::uint64_t max_membership_tuples = std::uint64_t{1} << 24;
};

} // namespace ringlab
