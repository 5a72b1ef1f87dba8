#pragma once
#include <functional>
#include <vector>

#include "lvmel/closed_forms.hpp"
#include "lvmel/system.hpp"

namespace lvmel {

enum class ZeroKind { Simple, EvenTouch, Uncertain };

struct ZeroReport {
    AnnulusSpec annulus;
    std::vector<std::pair<double, ZeroKind>> zeros;  // sorted, strictly interior
    int count = 0;                                   // Simple + EvenTouch entries
    bool degenerate_all_zero = false;                // M identically zero
};

// Real roots of sum_k coeffs[k] x^k (ascending), leading coefficients smaller
// than 1e-13 * scale dropped. Closed-form ladder plus Newton polish.
std::vector<double> poly_real_roots(const std::vector<double>& coeffs);

// Zeros of M(h) = a1 + a2 h + a3 h^2 + (a4 + a5 h) sqrt(4-h^2) on the open
// annulus. The radical is removed by squaring to the quartic
// (a1 + a2 h + a3 h^2)^2 - (a4 + a5 h)^2 (4 - h^2); spurious branch roots are
// filtered by the sign condition P (a4 + a5 h) <= 0, tangencies are flagged.
ZeroReport count_zeros_n3(const MelnikovN3& q);

struct SignChangeReport {
    int count = 0;                                   // certified lower bound
    std::vector<std::pair<double, double>> brackets; // isolating intervals
};

// Strict sign alternations of `f` on a grid over [lo, hi], each refined by
// bisection to width <= bracket_width.
SignChangeReport count_sign_changes(const std::function<double(double)>& f, double lo,
                                    double hi, int grid_size,
                                    double bracket_width = 1e-10);

}  // namespace lvmel
