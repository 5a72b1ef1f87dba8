#include "lvmel/closed_forms.hpp"

#include <cmath>

namespace lvmel {

namespace {

void require_interior(const AnnulusSpec& annulus, double h) {
    if (!annulus.contains(h)) throw OutsideAnnulusError("h outside the annulus interval");
}

bool plus_branch(const AnnulusSpec& a) { return a.tag != AnnulusTag::MinusAnnulus; }

double binomial(int n, int k) {
    double r = 1.0;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

}  // namespace

MelnikovN3 make_melnikov_n3(const AnnulusSpec& annulus, double a2, double a3, double a4,
                            double a5) {
    MelnikovN3 q;
    q.annulus = annulus;
    double ha = annulus.anchor;
    q.m = -ha;
    q.n = -ha * ha;
    q.p = -std::sqrt(4.0 - ha * ha);
    q.q = -ha * std::sqrt(4.0 - ha * ha);
    q.a2 = a2;
    q.a3 = a3;
    q.a4 = a4;
    q.a5 = a5;
    q.a1 = q.m * a2 + q.n * a3 + q.p * a4 + q.q * a5;
    return q;
}

std::pair<double, double> cf_J01(const SystemParams& p, double h, const AnnulusSpec& annulus) {
    require_interior(annulus, h);
    double gh = std::sqrt(4.0 - h * h);
    if (p.family == Family::X210) {
        double gb = p.gamma();
        double j1 = -p.b * (2.0 + h) / (2.0 * gh) * M_PI + gb / 2.0 * M_PI;
        double j0 = p.b * (2.0 + h) / (2.0 * gb) * M_PI - gh / 2.0 * M_PI;
        return {j0, j1};
    }
    double gc = p.delta();
    double sg = plus_branch(annulus) ? 1.0 : -1.0;
    double j1 = -(2.0 * p.b + p.c * h) / (2.0 * gh) * M_PI + sg * gc / 2.0 * M_PI;
    double j0 = sg * (2.0 * p.b + p.c * h) / (2.0 * gc) * M_PI - gh / 2.0 * M_PI;
    return {j0, j1};
}

double cf_Jk(const SystemParams& p, double h, int k) {
    if (k < 2 || k > 8) throw UnsupportedKError("cf_Jk supports 2 <= k <= 8");
    DeltaRoots r = delta_roots(p, h);
    double total = 0.0;
    for (int m = 0; m <= k - 2; ++m) {
        double beta = 0.5 * std::exp(std::lgamma(m + 1.5) + std::lgamma(k - m - 0.5) -
                                     std::lgamma(k + 1.0));
        double sym = 0.5 * (std::pow(r.x1, m) * std::pow(r.x2, k - 2 - m) +
                            std::pow(r.x2, m) * std::pow(r.x1, k - 2 - m));
        total += binomial(k - 2, m) * sym * beta;
    }
    double span = r.x2 - r.x1;
    return std::sqrt(4.0 - h * h) * span * span * total;
}

double cf_S(const SystemParams& p, double h, const AnnulusSpec& annulus, int i) {
    require_interior(annulus, h);
    double gb = p.gamma(), gh = std::sqrt(4.0 - h * h);
    if (p.family == Family::X210) {
        double b = p.b;
        switch (i) {
            case 0: return 2.0 * b * (h - (2.0 - b * b)) / gb * M_PI;
            case 1: return -2.0 * (h - (2.0 - b * b)) / gb * M_PI;
            case 2: return b * (2.0 + h) / gb * M_PI - gh * M_PI;
            case 3:
                return -(b * b + (b * b - 2.0) * h) / gb * M_PI -
                       b * (-2.0 + h + h * h) / gh * M_PI;
        }
        throw UnsupportedKError("S_i supports i in 0..3");
    }
    double b = p.b, c = p.c, gc = p.delta();
    double sg = plus_branch(annulus) ? 1.0 : -1.0;
    switch (i) {
        case 0:
            return ((b * b - 2.0) * c + b * h) / gb * M_PI +
                   sg * ((c * c - 2.0) * b + c * h) / gc * M_PI;
        case 1: return -(b * c + 2.0 * h) / gb * M_PI + sg * gc * M_PI;
        case 2: return (2.0 * c + b * h) / gb * M_PI - gh * M_PI;
        case 3:
            return -(b * c + (b * b - 2.0) * h) / gb * M_PI -
                   (-2.0 * b + c * h + b * h * h) / gh * M_PI;
    }
    throw UnsupportedKError("S_i supports i in 0..3");
}

double cf_R(const SystemParams& p, double h, const AnnulusSpec& annulus, int i) {
    require_interior(annulus, h);
    double gh = std::sqrt(4.0 - h * h);
    double gb32 = std::pow(4.0 - p.b * p.b, 1.5);
    if (p.family == Family::X210) {
        double b = p.b, hc = 2.0 - b * b;
        switch (i) {
            case 0:
                return -4.0 * (h - hc) * (h - b * b * b * b + 5.0 * b * b - 2.0) * M_PI / gb32;
            case 1: return 2.0 * b * (h - hc) * (h - b * b + 6.0) * M_PI / gb32;
            case 2: return -4.0 * (h - hc) * (h + 2.0) * M_PI / gb32;
            case 3:
                return -b * (h + 2.0) * (b * b * h - 6.0 * h - 2.0 * b * b + 4.0) * M_PI / gb32 -
                       h * gh * M_PI;
        }
        throw UnsupportedKError("R_i supports i in 0..3");
    }
    double b = p.b, c = p.c, gb = p.gamma(), gc = p.delta();
    double sg = plus_branch(annulus) ? 1.0 : -1.0;
    switch (i) {
        case 0:
            return 2.0 * (-8.0 + 6.0 * c * c - 6.0 * b * b * (-1.0 + c * c) +
                          b * b * b * b * (-1.0 + c * c)) * M_PI / gb32 -
                   sg * 2.0 * b * c * (-3.0 + c * c) * M_PI / gc +
                   h * (2.0 * b * (-6.0 + b * b) * c * M_PI / gb32 -
                        sg * 2.0 * (-2.0 + c * c) * M_PI / gc) -
                   4.0 * h * h * M_PI / gb32;
        case 1:
            return 2.0 * b * c * c * M_PI / gb32 + b * (c * c - 2.0) * M_PI / gb -
                   sg * c * gc * M_PI + 8.0 * c * h * M_PI / gb32 +
                   2.0 * b * h * h * M_PI / gb32;
        case 2:
            return -4.0 * (-4.0 + b * b + c * c + b * c * h + h * h) * M_PI / gb32;
        case 3:
            return (2.0 * b * (-4.0 + b * b + c * c) + 8.0 * c * h -
                    b * (-6.0 + b * b) * h * h) * M_PI / gb32 -
                   h * gh * M_PI;
    }
    throw UnsupportedKError("R_i supports i in 0..3");
}

MelnikovN3 melnikov_n3_coeffs(const SystemParams& p, const PerturbationCoeffs& coeffs,
                              const AnnulusSpec& annulus) {
    if (coeffs.degree() != 3)
        throw DegreeMismatchError("melnikov_n3_coeffs requires perturbation degree 3");
    auto A = [&](int i, int j) { return coeffs.a(i, j); };
    auto B = [&](int i, int j) { return coeffs.b(i, j); };
    double a2, a3, a4, a5;
    if (p.family == Family::X210) {
        double b = p.b, gb = p.gamma();
        double gb32 = std::pow(4.0 - b * b, 1.5);
        double b4 = b * b * b * b;
        a2 = -4.0 * (B(0, 0) + A(0, 0)) * (4.0 - 6.0 * b * b + b4) * M_PI / gb32 -
             8.0 * (B(1, 0) + A(0, 1) + B(3, 0) + A(0, 3)) * b * M_PI / gb32 -
             2.0 * (B(0, 1) + A(1, 0)) * b * M_PI / gb +
             4.0 * (B(2, 0) + A(0, 2)) * b * b * M_PI / gb32 +
             2.0 * (B(1, 1) + A(1, 1)) * M_PI / gb -
             (B(2, 1) + A(1, 2) - B(0, 3) - A(3, 0)) * b * M_PI / gb;
        a3 = 4.0 * (B(0, 0) + B(2, 0) + A(0, 0) + A(0, 2)) * M_PI / gb32 -
             2.0 * (B(1, 0) + A(0, 1)) * b * M_PI / gb32 +
             (B(3, 0) + A(0, 3)) * b * (-6.0 + b * b) * M_PI / gb32;
        a4 = (B(2, 1) - B(0, 3) + A(1, 2) - A(3, 0)) * M_PI;
        a5 = (B(3, 0) + A(0, 3)) * M_PI;
    } else {
        double b = p.b, c = p.c, gb = p.gamma(), gc = p.delta();
        double gb32 = std::pow(4.0 - b * b, 1.5), gc32 = std::pow(4.0 - c * c, 1.5);
        double sg = plus_branch(annulus) ? 1.0 : -1.0;
        a2 = B(0, 0) * (sg * 2.0 * b * c * (6.0 - b * b) * M_PI / gb32 +
                        2.0 * (-2.0 + c * c) * M_PI / gc) +
             A(0, 0) * (-2.0 * b * c * (-6.0 + c * c) * M_PI / gc32 +
                        sg * 2.0 * (-2.0 + b * b) * M_PI / gb) -
             (B(0, 1) + A(1, 0)) * (sg * b * M_PI / gb + c * M_PI / gc) +
             sg * 2.0 * B(1, 1) * M_PI / gb + 2.0 * A(1, 1) * M_PI / gc +
             sg * b * (-B(2, 1) + A(3, 0)) * M_PI / gb +
             sg * 4.0 * c * (-2.0 * B(1, 0) + B(2, 0) * b - 2.0 * B(3, 0)) * M_PI / gb32 -
             4.0 * b * (2.0 * A(0, 1) - A(0, 2) * c + 2.0 * A(0, 3)) * M_PI / gc32 -
             c * (A(1, 2) - B(0, 3)) * M_PI / gc;
        a3 = sg * 4.0 * (B(0, 0) + B(2, 0)) * M_PI / gb32 +
             4.0 * (A(0, 0) + A(0, 2)) * M_PI / gc32 -
             sg * 2.0 * B(1, 0) * b * M_PI / gb32 - 2.0 * A(0, 1) * c * M_PI / gc32 +
             sg * B(3, 0) * b * (-6.0 + b * b) * M_PI / gb32 +
             A(0, 3) * c * (-6.0 + c * c) * M_PI / gc32;
        a4 = sg * (B(2, 1) - B(0, 3) + A(1, 2) - A(3, 0)) * M_PI;
        a5 = sg * (B(3, 0) + A(0, 3)) * M_PI;
    }
    return make_melnikov_n3(annulus, a2, a3, a4, a5);
}

double melnikov_n3_eval(const MelnikovN3& q, double h) {
    return q.a1 + q.a2 * h + q.a3 * h * h + (q.a4 + q.a5 * h) * std::sqrt(4.0 - h * h);
}

}  // namespace lvmel
