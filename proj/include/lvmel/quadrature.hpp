#pragma once
#include <functional>

#include "lvmel/coeffs.hpp"
#include "lvmel/system.hpp"

namespace lvmel {

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 4000;
};

struct MomentIndex {
    int i = 0;
    int j = 0;
};

// Contour orientation. The paper traverses Gamma_h positively (counter-
// clockwise) when it surrounds C+ or the X210 center, negatively around C-;
// that choice also matches the time orientation of the unperturbed flow.
enum class Orientation { Positive, Negative };

// Module-wide convention: the orientation M(h) is defined with on each annulus.
Orientation orientation_of(AnnulusTag tag);

// Adaptive Gauss quadrature of a smooth integrand on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg = {});

// Moments of the level oval, by direct quadrature over the two branches
// y+-(x) = (hx-c)/2 +- sqrt(Delta) with the substitution
// x = x1 + (x2-x1) sin^2(theta) absorbing the endpoint square roots.
//
// oracle_I  : contour integral of x^{i-2} y^{j-2} dx over Gamma_h
// oracle_dy : contour integral of x^{i-2} y^{j-2} dy over Gamma_h
double oracle_I(const SystemParams& p, double h, MomentIndex idx,
                Orientation orient, const QuadratureConfig& cfg = {});
double oracle_dy_moment(const SystemParams& p, double h, MomentIndex idx,
                        Orientation orient, const QuadratureConfig& cfg = {});

// Unoriented building-block integrals over [x1, x2]:
//   J_k = int x^{k-2} sqrt(Delta) dx
//   S_i = int 2 x^{i-2} sqrt(Delta) / (x^2 + b x + 1) dx
//   R_i = int 2 x^{i-2} (h x - c) sqrt(Delta) / (x^2 + b x + 1)^2 dx
double oracle_J(const SystemParams& p, double h, int k, const QuadratureConfig& cfg = {});
double oracle_S(const SystemParams& p, double h, int i, const QuadratureConfig& cfg = {});
double oracle_R(const SystemParams& p, double h, int i, const QuadratureConfig& cfg = {});

enum class MelnikovMethod {
    Fused,    // single sweep of the assembled one-form R (f dy - g dx)
    TermSum,  // sum of per-monomial moment integrals
};

// First-order Melnikov integral of the perturbation (f, g) over Gamma_h,
// traversed with the annulus's convention orientation. Degree cap n <= 6.
double oracle_melnikov(const SystemParams& p, const PerturbationCoeffs& coeffs,
                       double h, const AnnulusSpec& annulus,
                       const QuadratureConfig& cfg = {},
                       MelnikovMethod method = MelnikovMethod::Fused);

}  // namespace lvmel
