#include "lvmel/zeros.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace lvmel {

namespace {

void solve_quadratic(double c0, double c1, double c2, std::vector<double>& roots) {
    if (c2 == 0.0) {
        if (c1 != 0.0) roots.push_back(-c0 / c1);
        return;
    }
    double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc < 0.0) return;
    double q = -(c1 + std::copysign(std::sqrt(disc), c1 == 0.0 ? 1.0 : c1)) / 2.0;
    roots.push_back(q / c2);
    if (q != 0.0) roots.push_back(c0 / q);
    else roots.push_back(0.0);
}

// Companion-matrix eigenvalues for degree 3..4: closed-form solvers drop
// multiple roots when a discriminant rounds negative, and the zero counting
// must never lose a candidate. Near-real pairs are kept and left to the
// caller's polish-and-filter stage.
void solve_companion(const std::vector<double>& monic, std::vector<double>& roots) {
    int n = static_cast<int>(monic.size());  // monic[k] = coefficient of x^k, k < n
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
    for (int r = 1; r < n; ++r) C(r, r - 1) = 1.0;
    for (int r = 0; r < n; ++r) C(r, n - 1) = -monic[r];
    Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
    for (int k = 0; k < n; ++k) {
        auto z = es.eigenvalues()(k);
        if (std::abs(z.imag()) <= 1e-6 * (1.0 + std::abs(z.real())))
            roots.push_back(z.real());
    }
}

}  // namespace

std::vector<double> poly_real_roots(const std::vector<double>& coeffs) {
    double scale = 0.0;
    for (double c : coeffs) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) return {};
    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg > 0 && std::abs(coeffs[deg]) < 1e-13 * scale) --deg;

    std::vector<double> roots;
    if (deg <= 0) return roots;
    if (deg == 1) {
        roots.push_back(-coeffs[0] / coeffs[1]);
    } else if (deg == 2) {
        solve_quadratic(coeffs[0], coeffs[1], coeffs[2], roots);
    } else if (deg <= 4) {
        std::vector<double> monic(deg);
        for (int k = 0; k < deg; ++k) monic[k] = coeffs[k] / coeffs[deg];
        solve_companion(monic, roots);
    } else {
        throw Error("poly_real_roots supports degree <= 4");
    }

    // Newton polish against the full polynomial (closed forms lose digits)
    auto eval = [&](double x, double& d) {
        double v = coeffs[deg];
        d = 0.0;
        for (int k = deg - 1; k >= 0; --k) {
            d = d * x + v;
            v = v * x + coeffs[k];
        }
        return v;
    };
    for (double& x : roots) {
        for (int it = 0; it < 40; ++it) {
            double d, v = eval(x, d);
            if (d == 0.0) break;
            double step = v / d;
            x -= step;
            if (std::abs(step) <= 1e-16 * (1.0 + std::abs(x))) break;
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

ZeroReport count_zeros_n3(const MelnikovN3& q) {
    ZeroReport rep;
    rep.annulus = q.annulus;
    double scale = std::abs(q.a1) + 2.0 * std::abs(q.a2) + 4.0 * std::abs(q.a3) +
                   2.0 * std::abs(q.a4) + 4.0 * std::abs(q.a5);
    if (scale == 0.0) {
        rep.degenerate_all_zero = true;
        return rep;
    }

    std::vector<double> candidates;
    bool tail_zero = std::abs(q.a4) < 1e-14 * scale && std::abs(q.a5) < 1e-14 * scale;
    if (tail_zero) {
        candidates = poly_real_roots({q.a1, q.a2, q.a3});
    } else {
        // (a1 + a2 h + a3 h^2)^2 - (a4 + a5 h)^2 (4 - h^2)
        double c0 = q.a1 * q.a1 - 4.0 * q.a4 * q.a4;
        double c1 = 2.0 * q.a1 * q.a2 - 8.0 * q.a4 * q.a5;
        double c2 = q.a2 * q.a2 + 2.0 * q.a1 * q.a3 - 4.0 * q.a5 * q.a5 + q.a4 * q.a4;
        double c3 = 2.0 * q.a2 * q.a3 + 2.0 * q.a4 * q.a5;
        double c4 = q.a3 * q.a3 + q.a5 * q.a5;
        candidates = poly_real_roots({c0, c1, c2, c3, c4});
    }

    // Polish on M itself: multiple roots of the squared quartic come out of
    // the eigenvalue solver with large spreads, splitting one zero into
    // several and leaking the structural anchor root past the interior
    // margin. Simple zeros converge under Newton on M; tangency candidates
    // (M' ~ 0) are pulled to the extremum by Newton on M' instead, which
    // collapses their duplicates to one point.
    auto deriv = [&](double h) {
        double g = std::sqrt(4.0 - h * h);
        return q.a2 + 2.0 * q.a3 * h + q.a5 * g - (q.a4 + q.a5 * h) * h / g;
    };
    auto deriv2 = [&](double h) {
        double g = std::sqrt(4.0 - h * h);
        return 2.0 * q.a3 - 2.0 * q.a5 * h / g - (q.a4 + q.a5 * h) * 4.0 / (g * g * g);
    };
    const double wander = 2e-3;
    std::vector<double> polished;
    polished.reserve(candidates.size() * 2);
    for (double h : candidates) {
        if (!(h > -2.0 && h < 2.0)) continue;
        const double h0 = h;
        bool tangent = false;
        for (int it = 0; it < 50; ++it) {
            double d = deriv(h);
            if (std::abs(d) < 1e-7 * scale) {
                tangent = true;
                break;
            }
            double step = melnikov_n3_eval(q, h) / d;
            double next = h - step;
            if (!(next > -2.0 && next < 2.0) ||
                std::abs(next - h0) > wander * (1.0 + std::abs(h0))) {
                h = h0;
                break;
            }
            h = next;
            if (std::abs(step) <= 1e-16 * (1.0 + std::abs(h))) break;
        }
        polished.push_back(h);
        if (!tangent) continue;
        // separately track the nearby extremum; the residual filter keeps at
        // most one of the pair
        for (int it = 0; it < 50; ++it) {
            double d2 = deriv2(h);
            if (d2 == 0.0) break;
            double step = deriv(h) / d2;
            double next = h - step;
            if (!(next > -2.0 && next < 2.0) ||
                std::abs(next - h0) > wander * (1.0 + std::abs(h0)))
                break;
            h = next;
            if (std::abs(step) <= 1e-16 * (1.0 + std::abs(h))) break;
        }
        polished.push_back(h);
    }
    candidates = std::move(polished);
    std::sort(candidates.begin(), candidates.end());

    const double interior_margin = 1e-9;
    const double residual_tol = 1e-10 * scale;
    const double cluster_window = 1e-6;
    std::vector<std::pair<double, double>> accepted;  // (h, |M(h)|)
    for (double h : candidates) {
        if (!(h > q.annulus.lo + interior_margin && h < q.annulus.hi - interior_margin))
            continue;
        if (std::abs(h) >= 2.0) continue;
        // a tangency sitting on the anchor is the structural center-level
        // zero (s1 = 0 instances); its unpolishable satellites are not
        // interior zeros
        if (std::abs(h - q.annulus.anchor) <= cluster_window * (1.0 + std::abs(h)) &&
            std::abs(deriv(h)) <= 1e-6 * scale)
            continue;
        double P = q.a1 + q.a2 * h + q.a3 * h * h;
        double T = q.a4 + q.a5 * h;
        if (!tail_zero && P * T > residual_tol * scale) continue;  // wrong sqrt branch
        double resid = std::abs(melnikov_n3_eval(q, h));
        if (resid > 10.0 * residual_tol) continue;
        // cluster the multiple-root satellites, keeping the best residual
        if (!accepted.empty() &&
            h - accepted.back().first <= cluster_window * (1.0 + std::abs(h))) {
            if (resid < accepted.back().second) accepted.back() = {h, resid};
            continue;
        }
        accepted.emplace_back(h, resid);
    }

    for (const auto& [h, resid] : accepted) {
        ZeroKind kind;
        if (resid > residual_tol) {
            kind = ZeroKind::Uncertain;
        } else {
            // classify by the local sign pattern; probe twice per side in
            // case the inner probe lands inside the tangency's flat spot
            double step = std::max(1e-7, 1e-4 * q.annulus.length());
            double ml = 0.0, mr = 0.0;
            for (double mult : {1.0, 2.0}) {
                double hl = std::max(h - mult * step, q.annulus.lo + interior_margin / 2.0);
                double hr = std::min(h + mult * step, q.annulus.hi - interior_margin / 2.0);
                if (ml == 0.0) ml = melnikov_n3_eval(q, hl);
                if (mr == 0.0) mr = melnikov_n3_eval(q, hr);
            }
            kind = (ml != 0.0 && mr != 0.0 && (ml > 0.0) != (mr > 0.0)) ? ZeroKind::Simple
                                                                        : ZeroKind::EvenTouch;
        }
        rep.zeros.emplace_back(h, kind);
        if (kind != ZeroKind::Uncertain) ++rep.count;
    }
    return rep;
}

SignChangeReport count_sign_changes(const std::function<double(double)>& f, double lo,
                                    double hi, int grid_size, double bracket_width) {
    SignChangeReport rep;
    double prev_x = lo, prev_v = f(lo);
    for (int k = 1; k < grid_size; ++k) {
        double x = lo + (hi - lo) * k / (grid_size - 1);
        double v = f(x);
        if (prev_v != 0.0 && v != 0.0 && (prev_v > 0.0) != (v > 0.0)) {
            double a = prev_x, b = x, fa = prev_v;
            while (b - a > bracket_width) {
                double m = 0.5 * (a + b), fm = f(m);
                if (fm == 0.0) {
                    a = m - 0.25 * bracket_width;
                    b = m + 0.25 * bracket_width;
                    break;
                }
                if ((fm > 0.0) == (fa > 0.0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            rep.brackets.emplace_back(a, b);
            ++rep.count;
        }
        prev_x = x;
        prev_v = v;
    }
    return rep;
}

}  // namespace lvmel
