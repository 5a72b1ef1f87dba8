#include "lvmel/chebyshev.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace lvmel {

namespace {

constexpr double kClamp = 1e-9;  // blow-up guard near h = +-2

double clamp_h(double h) {
    if (h > 2.0 - kClamp) return 2.0 - kClamp;
    if (h < -2.0 + kClamp) return -2.0 + kClamp;
    return h;
}

// Omega_3 = T1 - T2; the pair is also needed for the cancellation deadband
// near the anchor (where the two O(1) terms cancel to fifth order).
void omega3_terms(double ha, double h, double& t1, double& t2) {
    double g2 = 4.0 - h * h;
    t1 = 2.0 / std::pow(g2, 1.5) * (ha * h * h * h - 6.0 * h * h + 16.0 - 2.0 * ha * ha);
    t2 = 2.0 * std::sqrt(4.0 - ha * ha);
}

int deadband_sign(double ha, double h) {
    double t1, t2;
    omega3_terms(ha, h, t1, t2);
    double v = t1 - t2;
    if (std::abs(v) <= 1e-13 * (std::abs(t1) + std::abs(t2))) return 0;
    return v > 0.0 ? 1 : -1;
}

}  // namespace

double ect_basis(const AnnulusSpec& annulus, int order, double h) {
    double ha = annulus.anchor;
    double ga = std::sqrt(4.0 - ha * ha);
    switch (order) {
        case 0: return h - ha;
        case 1: return h * h - ha * ha;
        case 2: return std::sqrt(4.0 - h * h) - ga;
        case 3: return h * std::sqrt(4.0 - h * h) - ha * ga;
    }
    throw Error("ect_basis order must be 0..3");
}

double omega(const SystemParams& /*p*/, const AnnulusSpec& annulus, int order, double h) {
    h = clamp_h(h);
    double ha = annulus.anchor;
    switch (order) {
        case 1: return h - ha;
        case 2: return (h - ha) * (h - ha);
        case 3: {
            double t1, t2;
            omega3_terms(ha, h, t1, t2);
            return t1 - t2;
        }
        case 4: {
            double g2 = 4.0 - h * h;
            return -24.0 / (g2 * g2 * g2) *
                   ((ha * ha - 2.0) * h * h - 4.0 * ha * h + 16.0 - 2.0 * ha * ha +
                    std::sqrt(4.0 - ha * ha) * std::sqrt(g2) * (-4.0 + ha * h));
        }
    }
    throw Error("omega order must be 1..4");
}

double omega3_derivative(const SystemParams& /*p*/, const AnnulusSpec& annulus, double h) {
    h = clamp_h(h);
    double ha = annulus.anchor;
    return -12.0 * h * (h - ha) * (h - ha) / std::pow(4.0 - h * h, 2.5);
}

namespace {

// Richardson-extrapolated central differences: the even error series of the
// symmetric stencils makes (4 D(s/2) - D(s)) / 3 fourth-order accurate.
double fd_derivative(const std::function<double(double)>& f, int order, double h, double s) {
    auto stencil = [&](double ss) {
        switch (order) {
            case 1: return (f(h + ss) - f(h - ss)) / (2.0 * ss);
            case 2: return (f(h + ss) - 2.0 * f(h) + f(h - ss)) / (ss * ss);
            default:
                return (f(h + 2.0 * ss) - 2.0 * f(h + ss) + 2.0 * f(h - ss) -
                        f(h - 2.0 * ss)) / (2.0 * ss * ss * ss);
        }
    };
    return (4.0 * stencil(s / 2.0) - stencil(s)) / 3.0;
}

}  // namespace

double omega_vs_wronskian(const SystemParams& p, const AnnulusSpec& annulus, int order,
                          double h, double step) {
    if (order < 1 || order > 4) throw Error("omega_vs_wronskian order must be 1..4");
    // steps shrink with (4 - h^2): the basis derivatives blow up at the ends
    double u = (4.0 - h * h) / 4.0;
    double s[4] = {0.0, step > 0.0 ? step : 2e-3 * u, step > 0.0 ? step : 4e-3 * u,
                   step > 0.0 ? step : 4e-2 * u};
    s[3] = std::min(s[3], (2.0 - std::abs(h)) / 8.0);
    for (int r = 1; r < order; ++r)
        if (s[r] <= 0.0 || h + s[r] / 2.0 == h)
            throw StepTooSmallError("finite-difference step vanished at this h");

    Eigen::MatrixXd W(order, order);
    for (int col = 0; col < order; ++col) {
        auto f = [&, col](double x) { return ect_basis(annulus, col, x); };
        W(0, col) = f(h);
        for (int r = 1; r < order; ++r) W(r, col) = fd_derivative(f, r, h, s[r]);
    }
    double fd = W.determinant();
    double cf = omega(p, annulus, order, h);
    return std::abs(fd - cf) / (1.0 + std::abs(cf));
}

EctVerdict ect_verdict(const SystemParams& /*p*/, const AnnulusSpec& annulus, int scan_points,
                       kernels::Exec exec) {
    double ha = annulus.anchor;
    double lo = std::max(annulus.lo + kClamp, -2.0 + kClamp);
    double hi = std::min(annulus.hi - kClamp, 2.0 - kClamp);
    auto grid = kernels::linspace(lo, hi, scan_points);
    auto vals = kernels::map_grid(
        grid, [&](double h) { return static_cast<double>(deadband_sign(ha, h)); }, exec);

    EctVerdict out;
    out.annulus = annulus;
    out.witness.reserve(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k)
        out.witness.emplace_back(grid[k], static_cast<int>(vals[k]));

    // transitions between consecutive nonzero signs (zero runs sit only in the
    // cancellation band near the anchor)
    int changes = 0;
    double br_lo = 0.0, br_hi = 0.0;
    int prev_sign = 0;
    double prev_h = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        int s = static_cast<int>(vals[k]);
        if (s == 0) continue;
        if (prev_sign != 0 && s != prev_sign) {
            ++changes;
            br_lo = prev_h;
            br_hi = grid[k];
        }
        prev_sign = s;
        prev_h = grid[k];
    }
    if (changes == 0) {
        out.full = true;
        return out;
    }
    if (changes > 1)
        throw Error("Omega_3 shows multiple interior sign changes; scan inconsistent");
    // bisection on the raw sign (no cancellation near the interior zero d)
    auto raw = [&](double h) {
        double t1, t2;
        omega3_terms(ha, h, t1, t2);
        return t1 - t2;
    };
    double flo = raw(br_lo);
    while (br_hi - br_lo > 1e-12) {
        double mid = 0.5 * (br_lo + br_hi);
        double fm = raw(mid);
        if ((fm > 0.0) == (flo > 0.0)) {
            br_lo = mid;
            flo = fm;
        } else {
            br_hi = mid;
        }
    }
    out.full = false;
    out.d_lo = br_lo;
    out.d_hi = br_hi;
    return out;
}

}  // namespace lvmel
