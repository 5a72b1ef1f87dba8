#include "lvmel/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

namespace lvmel {

namespace {

struct NodeWeight {
    double x, w;
};

// Gauss-Legendre 7 / 15 pair; |G15 - G7| serves as the panel error estimate.
constexpr NodeWeight kG7[] = {
    {-0.94910791234275849, 0.12948496616887065},
    {-0.74153118559939446, 0.27970539148927659},
    {-0.40584515137739718, 0.38183005050511831},
    {0, 0.41795918367346896},
    {0.40584515137739718, 0.38183005050511831},
    {0.74153118559939446, 0.27970539148927659},
    {0.94910791234275849, 0.12948496616887065},
};
constexpr NodeWeight kG15[] = {
    {-0.98799251802048538, 0.030753241996118647},
    {-0.93727339240070595, 0.070366047488108069},
    {-0.84820658341042721, 0.10715922046717177},
    {-0.72441773136017007, 0.13957067792615391},
    {-0.57097217260853883, 0.16626920581699378},
    {-0.39415134707756339, 0.18616100001556188},
    {-0.20119409399743451, 0.19843148532711125},
    {0, 0.2025782419255609},
    {0.20119409399743451, 0.19843148532711125},
    {0.39415134707756339, 0.18616100001556188},
    {0.57097217260853883, 0.16626920581699378},
    {0.72441773136017007, 0.13957067792615391},
    {0.84820658341042721, 0.10715922046717177},
    {0.93727339240070595, 0.070366047488108069},
    {0.98799251802048538, 0.030753241996118647},
};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double g7 = 0.0, g15 = 0.0;
    for (const auto& n : kG7) g7 += n.w * f(mid + half * n.x);
    for (const auto& n : kG15) g15 += n.w * f(mid + half * n.x);
    g7 *= half;
    g15 *= half;
    return {a, b, g15, std::abs(g15 - g7)};
}

double ipow(double x, int e) {
    if (e < 0) return 1.0 / ipow(x, -e);
    double r = 1.0, base = x;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Geometry of the theta-parametrised oval: x(theta) = x1 + (x2-x1) sin^2,
// sqrt(Delta) = s (x2-x1) sin cos with s = sqrt(1 - h^2/4).
struct CurveParam {
    double x1, x2, s, h, lin;  // lin: the linear coefficient in y = (h x - lin)/2 +- w

    double x(double sn) const { return x1 + (x2 - x1) * sn * sn; }
    double w(double sn, double cs) const { return s * (x2 - x1) * sn * cs; }
    double dx(double sn, double cs) const { return (x2 - x1) * 2.0 * sn * cs; }
};

CurveParam curve_param(const SystemParams& p, double h) {
    DeltaRoots r = delta_roots(p, h);
    return {r.x1, r.x2, std::sqrt(1.0 - h * h / 4.0), h, p.c};
}

}  // namespace

Orientation orientation_of(AnnulusTag tag) {
    return tag == AnnulusTag::MinusAnnulus ? Orientation::Negative : Orientation::Positive;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg) {
    std::priority_queue<Panel> queue;
    queue.push(evaluate_panel(f, a, b));
    double total = queue.top().value, err = queue.top().error;
    int used = 1;
    while (err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
        if (used >= cfg.max_subdivisions)
            throw NonConvergenceError("quadrature budget of " +
                                      std::to_string(cfg.max_subdivisions) +
                                      " panels exhausted, error " + std::to_string(err));
        Panel worst = queue.top();
        queue.pop();
        Panel l = evaluate_panel(f, worst.a, 0.5 * (worst.a + worst.b));
        Panel r = evaluate_panel(f, 0.5 * (worst.a + worst.b), worst.b);
        total += l.value + r.value - worst.value;
        err += l.error + r.error - worst.error;
        queue.push(l);
        queue.push(r);
        ++used;
    }
    return total;
}

double oracle_I(const SystemParams& p, double h, MomentIndex idx, Orientation orient,
                const QuadratureConfig& cfg) {
    CurveParam cp = curve_param(p, h);
    int i = idx.i, j = idx.j;
    auto f = [&](double th) {
        double sn = std::sin(th), cs = std::cos(th);
        double x = cp.x(sn), w = cp.w(sn, cs);
        double a = (cp.h * x - cp.lin) / 2.0;
        double bracket = ipow(a - w, j - 2) - ipow(a + w, j - 2);
        return ipow(x, i - 2) * bracket * cp.dx(sn, cs);
    };
    double v = integrate(f, 0.0, M_PI / 2.0, cfg);
    return orient == Orientation::Positive ? v : -v;
}

double oracle_dy_moment(const SystemParams& p, double h, MomentIndex idx, Orientation orient,
                        const QuadratureConfig& cfg) {
    // parametrise by y: x+-(y) = (hy-b)/2 +- sqrt(Psi), Psi = Delta with b,c swapped
    SystemParams swapped = p;
    std::swap(swapped.b, swapped.c);
    CurveParam cp = curve_param(swapped, h);
    int i = idx.i, j = idx.j;
    auto f = [&](double th) {
        double sn = std::sin(th), cs = std::cos(th);
        double y = cp.x(sn), w = cp.w(sn, cs);
        double a = (cp.h * y - cp.lin) / 2.0;
        double bracket = ipow(a + w, i - 2) - ipow(a - w, i - 2);
        return bracket * ipow(y, j - 2) * cp.dx(sn, cs);
    };
    double v = integrate(f, 0.0, M_PI / 2.0, cfg);
    return orient == Orientation::Positive ? v : -v;
}

double oracle_J(const SystemParams& p, double h, int k, const QuadratureConfig& cfg) {
    if (k < 0) throw UnsupportedKError("J_k requires k >= 0");
    CurveParam cp = curve_param(p, h);
    auto f = [&](double th) {
        double sn = std::sin(th), cs = std::cos(th);
        return ipow(cp.x(sn), k - 2) * cp.w(sn, cs) * cp.dx(sn, cs);
    };
    return integrate(f, 0.0, M_PI / 2.0, cfg);
}

double oracle_S(const SystemParams& p, double h, int i, const QuadratureConfig& cfg) {
    CurveParam cp = curve_param(p, h);
    auto f = [&](double th) {
        double sn = std::sin(th), cs = std::cos(th);
        double x = cp.x(sn);
        double den = x * x + p.b * x + 1.0;  // no real roots for 0 <= b < 2
        return 2.0 * ipow(x, i - 2) * cp.w(sn, cs) / den * cp.dx(sn, cs);
    };
    return integrate(f, 0.0, M_PI / 2.0, cfg);
}

double oracle_R(const SystemParams& p, double h, int i, const QuadratureConfig& cfg) {
    CurveParam cp = curve_param(p, h);
    auto f = [&](double th) {
        double sn = std::sin(th), cs = std::cos(th);
        double x = cp.x(sn);
        double den = x * x + p.b * x + 1.0;
        return 2.0 * ipow(x, i - 2) * (h * x - p.c) * cp.w(sn, cs) / (den * den) *
               cp.dx(sn, cs);
    };
    return integrate(f, 0.0, M_PI / 2.0, cfg);
}

double oracle_melnikov(const SystemParams& p, const PerturbationCoeffs& coeffs, double h,
                       const AnnulusSpec& annulus, const QuadratureConfig& cfg,
                       MelnikovMethod method) {
    if (coeffs.degree() > 6)
        throw DegreeMismatchError("oracle_melnikov caps the perturbation degree at 6");
    if (!annulus.contains(h))
        throw OutsideAnnulusError("h outside the requested annulus");
    Orientation orient = orientation_of(annulus.tag);

    if (method == MelnikovMethod::TermSum) {
        double total = 0.0;
        coeffs.for_each([&](int i, int j, double aij, double bij) {
            if (aij != 0.0) total += aij * oracle_dy_moment(p, h, {i, j}, orient, cfg);
            if (bij != 0.0) total -= bij * oracle_I(p, h, {i, j}, orient, cfg);
        });
        return total;
    }

    // Single sweep of R (f dy - g dx) over both branches. With the sin^2
    // substitution dx = (x2-x1) sin(2 th) d th and dx / sqrt(Delta) = 2 d th / s,
    // the dy part y'(x) dx = (h/2) dx +- Delta'(x) d th / s stays smooth.
    CurveParam cp = curve_param(p, h);
    DeltaRoots dr = delta_roots(p, h);
    auto f = [&](double th) {
        double sn = std::sin(th), cs = std::cos(th);
        double x = cp.x(sn), w = cp.w(sn, cs);
        double a = (h * x - p.c) / 2.0;
        double ylo = a - w, yhi = a + w;
        double flo, glo, fhi, ghi;
        coeffs.eval(x, ylo, flo, glo);
        coeffs.eval(x, yhi, fhi, ghi);
        double rlo = 1.0 / (x * x * ylo * ylo), rhi = 1.0 / (x * x * yhi * yhi);
        double dx = cp.dx(sn, cs);
        double dprime = 2.0 * dr.a * x + dr.bq;
        double dy_smooth = h / 2.0 * dx;                 // shared part of y' dx
        double dy_sqrt = dprime / cp.s;                  // (Delta'/(2 sqrt)) dx = this * d th
        return rlo * flo * (dy_smooth - dy_sqrt) - rhi * fhi * (dy_smooth + dy_sqrt) -
               (rlo * glo - rhi * ghi) * dx;
    };
    double v = integrate(f, 0.0, M_PI / 2.0, cfg);
    return orient == Orientation::Positive ? v : -v;
}

}  // namespace lvmel
