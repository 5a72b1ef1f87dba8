#include "lvmel/ode.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>

#include "lvmel/kernels.hpp"

namespace lvmel {

namespace {

namespace odeint = boost::numeric::odeint;
using State = std::array<double, 2>;

struct Rhs {
    const PerturbedField* pf;
    void operator()(const State& s, State& ds, double) const {
        auto [dx, dy] = field_eval(*pf, s[0], s[1]);
        ds[0] = dx;
        ds[1] = dy;
    }
};

// rightmost point of the oval (x = x2 branch junction)
Point2 max_x_point(const SystemParams& p, double h) {
    DeltaRoots r = delta_roots(p, h);
    return {r.x2, (h * r.x2 - p.c) / 2.0};
}

struct Section {
    Point2 center;
    double phi0;

    double angle(const State& s) const {
        return std::atan2(s[1] - center.y, s[0] - center.x);
    }
};

double wrap_delta(double a, double b) {
    double d = a - b;
    while (d > M_PI) d -= 2.0 * M_PI;
    while (d < -M_PI) d += 2.0 * M_PI;
    return d;
}

}  // namespace

PerturbedField::PerturbedField(SystemParams p, PerturbationCoeffs c, double e)
    : params(p), coeffs(std::move(c)), eps(e) {
    if (!(e >= 0.0 && e <= 1e-2))
        throw Error("perturbative regime requires 0 <= eps <= 1e-2");
}

std::pair<double, double> field_eval(const PerturbedField& pf, double x, double y) {
    double f, g;
    pf.coeffs.eval(x, y, f, g);
    double b = pf.params.b, c = pf.params.c;
    return {x * (1.0 + b * x + x * x - y * y) + pf.eps * f,
            y * (-1.0 - c * y + x * x - y * y) + pf.eps * g};
}

int measured_time_orientation(const SystemParams& p, const AnnulusSpec& annulus) {
    double h = 0.5 * (annulus.lo + annulus.hi);
    Point2 pt = max_x_point(p, h);
    // tangent at the rightmost point is vertical; moving up means CCW
    double dy = pt.y * (-1.0 - p.c * pt.y + pt.x * pt.x - pt.y * pt.y);
    return dy > 0.0 ? 1 : -1;
}

ReturnSample poincare_return(const PerturbedField& pf, double h_start,
                             const AnnulusSpec& annulus, const IntegratorConfig& cfg) {
    if (!annulus.contains(h_start))
        throw OutsideAnnulusError("poincare_return: h_start outside the annulus");
    const SystemParams& p = pf.params;
    Point2 start = max_x_point(p, h_start);
    Section sec{center_point(p, annulus.tag), 0.0};
    State s{start.x, start.y};
    sec.phi0 = sec.angle(s);

    const double sx = start.x > 0.0 ? 1.0 : -1.0;
    const double sy = start.y > 0.0 ? 1.0 : -1.0;

    Rhs rhs{&pf};
    auto stepper = odeint::make_controlled<odeint::runge_kutta_fehlberg78<State>>(
        cfg.abs_tol, cfg.rel_tol);

    double t = 0.0, dt = 1e-4;
    double total_angle = 0.0, prev_phi = sec.phi0;
    long steps = 0;
    while (true) {
        if (++steps > cfg.max_steps || t > cfg.max_time)
            throw IntegrationFailureError("revolution not completed within budget");
        State s_prev = s;
        double t_prev = t;
        odeint::controlled_step_result res;
        int tries = 0;
        do {
            res = stepper.try_step(rhs, s, t, dt);
            if (++tries > 200) throw IntegrationFailureError("step size collapsed");
        } while (res == odeint::fail);

        if (s[0] * sx <= 0.0 || s[1] * sy <= 0.0)
            throw LeftAnnulusError("trajectory crossed an invariant axis");
        double hv = first_integral(p, s[0], s[1]);
        if (hv < -2.5 || hv > 2.5)
            throw LeftAnnulusError("trajectory left the level band");

        double phi = sec.angle(s);
        double dphi = wrap_delta(phi, prev_phi);
        prev_phi = phi;
        double before = total_angle;
        total_angle += dphi;

        double target = std::copysign(2.0 * M_PI, total_angle);
        if (std::abs(total_angle) >= 2.0 * M_PI) {
            // crossing inside [t_prev, t]: bisect on the accumulated angle by
            // re-integrating the short bracket from s_prev
            State refined = s;
            auto angle_at = [&](double tau) {
                if (tau <= 0.0) {
                    refined = s_prev;
                    return before - target;
                }
                State z = s_prev;
                double tt = 0.0, ddt = std::min(tau, dt);
                auto st = odeint::make_controlled<odeint::runge_kutta_fehlberg78<State>>(
                    cfg.abs_tol, cfg.rel_tol);
                double acc = before, pphi = sec.angle(z);
                int guard = 0;
                while (tt < tau) {
                    ddt = std::min(ddt, tau - tt);
                    if (st.try_step(rhs, z, tt, ddt) == odeint::success) {
                        double ph = sec.angle(z);
                        acc += wrap_delta(ph, pphi);
                        pphi = ph;
                    }
                    if (++guard > 100000)
                        throw IntegrationFailureError("crossing refinement stalled");
                }
                refined = z;
                return acc - target;
            };
            double lo = 0.0, hi = t - t_prev;
            double flo = angle_at(lo);
            while (hi - lo > 1e-12 * std::max(1.0, t)) {
                double mid = 0.5 * (lo + hi);
                double fm = angle_at(mid);
                if ((fm > 0.0) == (flo > 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            angle_at(0.5 * (lo + hi));
            ReturnSample out;
            out.h_start = h_start;
            out.h_return = first_integral(p, refined[0], refined[1]);
            out.flight_time = t_prev + 0.5 * (lo + hi);
            return out;
        }
    }
}

double return_displacement(const PerturbedField& pf, double h_start,
                           const AnnulusSpec& annulus, const IntegratorConfig& cfg) {
    double ret = poincare_return(pf, h_start, annulus, cfg).h_return;
    PerturbedField reference(pf.params, pf.coeffs, 0.0);
    double ref = poincare_return(reference, h_start, annulus, cfg).h_return;
    return ret - ref;
}

CycleReport detect_cycles(const PerturbedField& pf, const AnnulusSpec& annulus,
                          int grid_size, double margin_frac, const IntegratorConfig& cfg) {
    CycleReport rep;
    rep.grid = kernels::annulus_grid(annulus, grid_size, margin_frac);
    rep.displacement = kernels::map_grid(rep.grid, [&](double h) {
        return return_displacement(pf, h, annulus, cfg);
    });

    auto disp = [&](double h) { return return_displacement(pf, h, annulus, cfg); };
    for (std::size_t k = 1; k < rep.grid.size(); ++k) {
        double va = rep.displacement[k - 1], vb = rep.displacement[k];
        if (va == 0.0 || vb == 0.0 || (va > 0.0) == (vb > 0.0)) continue;
        double a = rep.grid[k - 1], b = rep.grid[k], fa = va;
        double width_goal = 1e-4 * annulus.length();
        while (b - a > width_goal) {
            double m = 0.5 * (a + b), fm = disp(m);
            if (fm == 0.0) break;
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
    return rep;
}

}  // namespace lvmel
