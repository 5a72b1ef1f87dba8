#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "lvmel/errors.hpp"

namespace lvmel {

// The two Lotka-Volterra subfamilies with rational first integral
//   H = (1 + b x + c y + x^2 + y^2) / (x y),  integrating factor x^-2 y^-2:
//   X29:  0 <= b < c < 2   (two period annuli),
//   X210: 0 <  b = c < 2   (one period annulus).
enum class Family { X29, X210 };

enum class AnnulusTag { MinusAnnulus, PlusAnnulus, SingleAnnulus };

struct SystemParams {
    Family family;
    double b;
    double c;

    static SystemParams x29(double b, double c);
    static SystemParams x210(double b);

    double gamma() const;  // sqrt(4 - b^2)
    double delta() const;  // sqrt(4 - c^2)
};

// Open h-interval of a period annulus. `anchor` is the center level at the
// degenerate end (h-, h+ or 2-b^2), where M vanishes structurally.
struct AnnulusSpec {
    AnnulusTag tag;
    double lo;
    double hi;
    double anchor;

    double length() const { return hi - lo; }
    bool contains(double h, double margin = 1e-9) const {
        return h > lo + margin && h < hi - margin;
    }
};

// Roots of Delta(x) = (h^2/4-1) x^2 - (c h/2 + b) x + c^2/4 - 1, the
// x-projection of the level oval; Delta > 0 strictly between them.
struct DeltaRoots {
    double h;
    double x1, x2;       // x1 < x2
    double a, bq, cq;    // quadratic coefficients of Delta
};

struct Point2 {
    double x, y;
};

// Center levels: X29 returns (h-, h+) = ((-bc -+ gamma*delta)/2); X210 the
// single value 2 - b^2 (returned in both slots).
std::pair<double, double> center_levels(const SystemParams& p);

AnnulusSpec annulus(const SystemParams& p, AnnulusTag tag);

// All annuli of the family, in increasing h order.
std::vector<AnnulusSpec> annuli(const SystemParams& p);

// Annulus whose open interval contains h (with the 1e-9 endpoint margin).
std::optional<AnnulusSpec> annulus_containing(const SystemParams& p, double h);

DeltaRoots delta_roots(const SystemParams& p, double h);

// Closed polyline of the level oval Gamma_h, 2m points.
std::vector<Point2> level_curve_sample(const SystemParams& p, double h, int m);

double first_integral(const SystemParams& p, double x, double y);

// Coordinates of the center the annulus surrounds.
Point2 center_point(const SystemParams& p, AnnulusTag tag);

}  // namespace lvmel
