#include "lvmel/system.hpp"

#include <cmath>
#include <string>

namespace lvmel {

namespace {
constexpr double kEndpointMargin = 1e-9;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}
}  // namespace

SystemParams SystemParams::x29(double b, double c) {
    if (!(0.0 <= b && b < c && c < 2.0))
        throw Error("X29 requires 0 <= b < c < 2, got b=" + fmt(b) + " c=" + fmt(c));
    return {Family::X29, b, c};
}

SystemParams SystemParams::x210(double b) {
    if (!(0.0 < b && b < 2.0))
        throw Error("X210 requires 0 < b < 2, got b=" + fmt(b));
    return {Family::X210, b, b};
}

double SystemParams::gamma() const { return std::sqrt(4.0 - b * b); }
double SystemParams::delta() const { return std::sqrt(4.0 - c * c); }

std::pair<double, double> center_levels(const SystemParams& p) {
    if (p.family == Family::X210) {
        double hc = 2.0 - p.b * p.b;
        return {hc, hc};
    }
    double gd = p.gamma() * p.delta();
    return {(-p.b * p.c - gd) / 2.0, (-p.b * p.c + gd) / 2.0};
}

AnnulusSpec annulus(const SystemParams& p, AnnulusTag tag) {
    auto [hlo, hhi] = center_levels(p);
    if (p.family == Family::X210) {
        if (tag != AnnulusTag::SingleAnnulus)
            throw IncompatibleTagError("X210 has only the single annulus (2-b^2, 2)");
        return {tag, hlo, 2.0, hlo};
    }
    switch (tag) {
        case AnnulusTag::MinusAnnulus: return {tag, -2.0, hlo, hlo};
        case AnnulusTag::PlusAnnulus: return {tag, hhi, 2.0, hhi};
        default: throw IncompatibleTagError("X29 has annuli U- and U+, not a single one");
    }
}

std::vector<AnnulusSpec> annuli(const SystemParams& p) {
    if (p.family == Family::X210) return {annulus(p, AnnulusTag::SingleAnnulus)};
    return {annulus(p, AnnulusTag::MinusAnnulus), annulus(p, AnnulusTag::PlusAnnulus)};
}

std::optional<AnnulusSpec> annulus_containing(const SystemParams& p, double h) {
    for (const auto& a : annuli(p))
        if (a.contains(h, kEndpointMargin)) return a;
    return std::nullopt;
}

DeltaRoots delta_roots(const SystemParams& p, double h) {
    if (!annulus_containing(p, h))
        throw OutsideAnnulusError("h=" + fmt(h) + " is not interior to a period annulus");
    double A = h * h / 4.0 - 1.0;
    double B = -(p.c * h / 2.0 + p.b);
    double C = p.c * p.c / 4.0 - 1.0;
    double disc = B * B - 4.0 * A * C;
    if (disc <= 0.0)
        throw OutsideAnnulusError("Delta has no real roots at h=" + fmt(h));
    // larger-magnitude root first, companion by Viete: stable near h -> +-2
    double q = -(B + std::copysign(std::sqrt(disc), B == 0.0 ? 1.0 : B)) / 2.0;
    double r1 = q / A, r2 = C / q;
    DeltaRoots out;
    out.h = h;
    out.x1 = std::min(r1, r2);
    out.x2 = std::max(r1, r2);
    out.a = A;
    out.bq = B;
    out.cq = C;
    return out;
}

std::vector<Point2> level_curve_sample(const SystemParams& p, double h, int m) {
    if (m < 8) throw Error("level_curve_sample requires m >= 8");
    DeltaRoots r = delta_roots(p, h);
    double s = std::sqrt(1.0 - h * h / 4.0);
    std::vector<Point2> pts;
    pts.reserve(2 * m);
    // phi in [0, 2pi): lower branch first, then upper; turning points at phi = 0, pi
    for (int k = 0; k < 2 * m; ++k) {
        double phi = M_PI * k / m;
        double half = phi / 2.0;
        double sn = std::sin(half), cs = std::cos(half);
        double x = r.x1 + (r.x2 - r.x1) * sn * sn;
        double w = s * (r.x2 - r.x1) * std::abs(sn * cs);
        double y = (h * x - p.c) / 2.0 + (k < m ? -w : w);
        pts.push_back({x, y});
    }
    return pts;
}

double first_integral(const SystemParams& p, double x, double y) {
    return (1.0 + p.b * x + p.c * y + x * x + y * y) / (x * y);
}

Point2 center_point(const SystemParams& p, AnnulusTag tag) {
    if (p.family == Family::X210) {
        if (tag != AnnulusTag::SingleAnnulus)
            throw IncompatibleTagError("X210 has a single center");
        return {-1.0 / p.b, -1.0 / p.b};
    }
    double g = p.gamma(), d = p.delta();
    double sg = (tag == AnnulusTag::PlusAnnulus) ? 1.0 : -1.0;
    if (tag == AnnulusTag::SingleAnnulus)
        throw IncompatibleTagError("X29 centers are C- and C+");
    double den = 2.0 * (d * d - g * g);
    return {d * (-p.b * d + sg * p.c * g) / den,
            g * (-p.c * g + sg * p.b * d) / (2.0 * (g * g - d * d))};
}

}  // namespace lvmel
