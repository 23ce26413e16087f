// audit.hpp
// Seeded random-ensemble audit quantifying how the criteria relate on
// generic X-states: the realignment test is necessary-only, so it misses
// part of the PPT-entangled population; the modified criterion is expected
// to recover all of it, and any sample where its inequality fails is kept
// with full state and margins instead of being dropped.

#pragma once

#include <cstdint>
#include <vector>

#include "xent/criteria.hpp"
#include "xent/states.hpp"

namespace xent {

// One PPT-entangled sample whose trace norm fell below the branch threshold.
struct AuditDisagreement {
    std::uint64_t sample_index = 0;
    XState state;
    double trace_norm = 0.0;
    double threshold = 0.0;
    NegativeBranch branch = NegativeBranch::None;
};

struct AuditSummary {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t ppt_entangled = 0;
    std::uint64_t ccn_detected = 0;  // among the PPT-entangled samples
    std::uint64_t thm1_detected = 0;
    std::uint64_t ccn_missed_but_thm1_caught = 0;
    std::vector<AuditDisagreement> disagreements;
};

// Draws `samples` states from XStateSampler(seed) and classifies each.
// Deterministic for a fixed seed.
AuditSummary run_audit(std::uint64_t samples, std::uint64_t seed, const Tolerance& tol = {});

}  // namespace xent
