#pragma once
#include <utility>
#include <vector>

#include "lvmel/coeffs.hpp"
#include "lvmel/system.hpp"

namespace lvmel {

// The perturbed flow
//   x' = x (1 + b x + x^2 - y^2) + eps f(x, y)
//   y' = y (-1 - c y + x^2 - y^2) + eps g(x, y).
struct PerturbedField {
    SystemParams params;
    PerturbationCoeffs coeffs;
    double eps;

    PerturbedField(SystemParams p, PerturbationCoeffs c, double e);
};

struct ReturnSample {
    double h_start;
    double h_return;
    int revolutions = 1;
    double flight_time;
};

std::pair<double, double> field_eval(const PerturbedField& pf, double x, double y);

// Sign of the time orientation of the unperturbed flow on the annulus:
// +1 counterclockwise, -1 clockwise (measured from the tangent at the
// rightmost point of a mid-annulus oval, not assumed).
int measured_time_orientation(const SystemParams& p, const AnnulusSpec& annulus);

struct IntegratorConfig {
    double rel_tol = 1e-12;
    double abs_tol = 1e-13;
    double max_time = 1e4;
    long max_steps = 20'000'000;
};

// One revolution of the Poincare map on the section ray from the annulus
// center through the max-x point of Gamma_{h_start}; H is the transverse
// coordinate, so h_return - h_start = eps M(h_start) + O(eps^2).
ReturnSample poincare_return(const PerturbedField& pf, double h_start,
                             const AnnulusSpec& annulus, const IntegratorConfig& cfg = {});

// Return displacement with the integrator's own drift removed: the eps = 0
// revolution conserves H exactly, so its computed return is a direct sample
// of the accumulated integration error along the same orbit.
double return_displacement(const PerturbedField& pf, double h_start,
                           const AnnulusSpec& annulus, const IntegratorConfig& cfg = {});

struct CycleReport {
    std::vector<double> grid;
    std::vector<double> displacement;                 // h_return - h_start
    std::vector<std::pair<double, double>> brackets;  // limit-cycle witnesses
    int count = 0;
};

// Sign changes of the return displacement over an interior grid, each
// refined by bisection; every bracket witnesses a limit cycle at this eps.
CycleReport detect_cycles(const PerturbedField& pf, const AnnulusSpec& annulus,
                          int grid_size, double margin_frac = 0.02,
                          const IntegratorConfig& cfg = {});

}  // namespace lvmel
