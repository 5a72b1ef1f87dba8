#pragma once
#include <utility>

#include "lvmel/coeffs.hpp"
#include "lvmel/system.hpp"

namespace lvmel {

// Reduced n=3 Melnikov form on one annulus:
//   M(h) = a1 + a2 h + a3 h^2 + (a4 + a5 h) sqrt(4 - h^2),
// with a1 pinned by the center-level zero M(anchor) = 0 through
//   a1 = m a2 + n a3 + p a4 + q a5,
//   m = -anchor, n = -anchor^2, p = -sqrt(4-anchor^2), q = anchor * p.
struct MelnikovN3 {
    AnnulusSpec annulus;
    double a1, a2, a3, a4, a5;
    double m, n, p, q;
};

MelnikovN3 make_melnikov_n3(const AnnulusSpec& annulus, double a2, double a3, double a4,
                            double a5);

// Closed forms of the building blocks; branch selected by the annulus tag.
std::pair<double, double> cf_J01(const SystemParams& p, double h, const AnnulusSpec& annulus);

// J_k for k >= 2 via the symmetric t-moment expansion: every moment
// int t^{2m+2} / (1+t^2)^{k+1} dt equals B(m+3/2, k-m-1/2) / 2, so the
// paper's d_ij constants come out exact. Valid for both families; supports
// 2 <= k <= 8.
double cf_Jk(const SystemParams& p, double h, int k);

double cf_S(const SystemParams& p, double h, const AnnulusSpec& annulus, int i);
double cf_R(const SystemParams& p, double h, const AnnulusSpec& annulus, int i);

// The explicit cubic-perturbation coefficient reduction (a2..a5 linear in
// the a_ij, b_ij; a1 from the dependency). Requires coeffs.degree() == 3.
MelnikovN3 melnikov_n3_coeffs(const SystemParams& p, const PerturbationCoeffs& coeffs,
                              const AnnulusSpec& annulus);

double melnikov_n3_eval(const MelnikovN3& q, double h);

}  // namespace lvmel
