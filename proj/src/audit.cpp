#include "xent/audit.hpp"

namespace xent {

AuditSummary run_audit(std::uint64_t samples, std::uint64_t seed, const Tolerance& tol) {
    AuditSummary sum;
    sum.samples = samples;
    sum.seed = seed;

    XStateSampler sampler(seed);
    for (std::uint64_t k = 0; k < samples; ++k) {
        const XState s = sampler.next();
        const PptSpectrum spec = ppt_spectrum(s, tol);
        if (spec.negative_branch == NegativeBranch::None) continue;

        ++sum.ppt_entangled;
        const RealignmentBreakdown b = realignment_breakdown(s, tol);
        const double threshold = theorem1_threshold(spec, tol);
        const bool ccn_hit = b.trace_norm > 1.0 + tol.eps_psd;
        const bool thm1_hit = b.trace_norm >= threshold - tol.eps_psd;
        if (ccn_hit) ++sum.ccn_detected;
        if (thm1_hit) ++sum.thm1_detected;
        if (!ccn_hit && thm1_hit) ++sum.ccn_missed_but_thm1_caught;
        if (!thm1_hit)
            sum.disagreements.push_back({k, s, b.trace_norm, threshold, spec.negative_branch});
    }
    return sum;
}

}  // namespace xent
