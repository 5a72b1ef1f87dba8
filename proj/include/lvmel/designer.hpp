#pragma once
#include <optional>

#include "lvmel/closed_forms.hpp"
#include "lvmel/zeros.hpp"

namespace lvmel {

// Taylor coefficients of M at the annulus anchor:
//   M(h) = s1 t + s2 t^2 + s3 t^3 + s4 t^4 + O(t^5),  t = h - anchor.
// s3 and s4 depend only on the tail pair (a4, a5).
struct SExpansion {
    AnnulusSpec annulus;
    double s1, s2, s3, s4;
};

struct Configuration {
    int u;  // zeros on U+ (around C+)
    int v;  // zeros on U- (around C-)
};

SExpansion s_expansion(const MelnikovN3& q);

// Unique zero h0 = -4 a5 / a4 of M''' (shared by both annuli); nullopt when
// a4 = 0 (M''' never vanishes, each annulus capped at two zeros).
std::optional<double> shared_inflection(double a4, double a5);

// A quintuple with exactly k simple zeros on the annulus, built by solving
// for the null combination of the ECT prefix basis (f0..fk) vanishing at k
// interior targets; the Chebyshev bound then forces exactly those zeros.
// Target quantiles ladder toward the anchor until certification succeeds.
MelnikovN3 realize_zero_count(const SystemParams& p, const AnnulusSpec& annulus, int k);

// Variant with the tail pair (a4, a5) pinned (the other annulus consumed it);
// only a2, a3 are free, so k <= 2.
MelnikovN3 realize_zero_count_fixed_tail(const SystemParams& p, const AnnulusSpec& annulus,
                                         int k, double a4, double a5);

// Full degree-3 coefficient set realizing the simultaneous configuration
// (u, v) for X29, through the free coefficients
// (a11, b11, b00, a01, b21, b30), everything else zero. Throws
// TargetImpossibleError with the h0 certificate for (3,3).
PerturbationCoeffs realize_configuration(const SystemParams& p, Configuration target);

// The certified counts of a coefficient set on both annuli (helper used by
// the realization tests and the CLI report).
std::pair<ZeroReport, ZeroReport> certify_configuration(const SystemParams& p,
                                                        const PerturbationCoeffs& coeffs);

}  // namespace lvmel
