#pragma once
#include <vector>

#include "lvmel/kernels.hpp"
#include "lvmel/system.hpp"

namespace lvmel {

// ECT verdict for the ordered basis (f0, f1, f2, f3) on an annulus, where
//   f0 = h - ha, f1 = h^2 - ha^2, f2 = sqrt(4-h^2) - sqrt(4-ha^2),
//   f3 = h sqrt(4-h^2) - ha sqrt(4-ha^2)
// and ha is the annulus anchor. Full when the Wronskians Omega_1..Omega_4
// keep their sign on the whole open interval; otherwise Omega_3 has a single
// interior sign change at d and the basis is an ECT system on (anchor, d).
struct EctVerdict {
    AnnulusSpec annulus;
    bool full;
    double d_lo = 0.0, d_hi = 0.0;  // bracket of d, width <= 1e-12 (partial only)
    std::vector<std::pair<double, int>> witness;  // (h, sign of Omega_3) scan
};

// f-basis element value (order 0..3).
double ect_basis(const AnnulusSpec& annulus, int order, double h);

// Closed-form Wronskian Omega_i of the first i basis elements, i in 1..4.
double omega(const SystemParams& p, const AnnulusSpec& annulus, int order, double h);

// Closed form of Omega_3'(h) = -12 h (h - ha)^2 / (4 - h^2)^{5/2}.
double omega3_derivative(const SystemParams& p, const AnnulusSpec& annulus, double h);

// Relative discrepancy |FD - closed| / (1 + |closed|) of the finite-difference
// Wronskian determinant against omega(). step = 0 picks per-order steps
// scaled by (4 - h^2).
double omega_vs_wronskian(const SystemParams& p, const AnnulusSpec& annulus, int order,
                          double h, double step = 0.0);

EctVerdict ect_verdict(const SystemParams& p, const AnnulusSpec& annulus,
                       int scan_points = 2048,
                       kernels::Exec exec = kernels::Exec::Parallel);

}  // namespace lvmel
