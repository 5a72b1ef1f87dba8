#include <doctest.h>

#include <cmath>

#include "lvmel/chebyshev.hpp"

using namespace lvmel;

TEST_CASE("Wronskian closed forms against frozen references") {
    auto p = SystemParams::x29(0.5, 1.2);
    auto up = annulus(p, AnnulusTag::PlusAnnulus);
    auto um = annulus(p, AnnulusTag::MinusAnnulus);
    CHECK(omega(p, up, 3, 1.7) == doctest::Approx(-0.25695853633077403).epsilon(1e-13));
    CHECK(omega(p, up, 4, 1.7) == doctest::Approx(-0.46744680589406906).epsilon(1e-13));
    CHECK(omega(p, um, 3, -1.93) == doctest::Approx(-0.061119099003092536).epsilon(1e-13));
    CHECK(omega(p, um, 4, -1.93) == doctest::Approx(-0.56984984070573974).epsilon(1e-13));
}

TEST_CASE("Omega_1, Omega_2 structure and anchor zeros") {
    auto p = SystemParams::x29(0.5, 1.2);
    for (const auto& an : annuli(p)) {
        CHECK(omega(p, an, 1, an.anchor) == 0.0);
        CHECK(std::abs(omega(p, an, 3, an.anchor)) <= 1e-12);
        for (int k = 0; k < 200; ++k) {
            double h = an.lo + (0.005 + 0.99 * k / 199.0) * an.length();
            double w1 = omega(p, an, 1, h);
            CHECK(std::abs(omega(p, an, 2, h) - w1 * w1) <= 1e-14 * (1.0 + w1 * w1));
        }
    }
}

TEST_CASE("Omega_4 vanishes only at the anchor") {
    auto p = SystemParams::x29(0.5, 1.2);
    for (const auto& an : annuli(p)) {
        double worst = 1e300;
        for (int k = 0; k < 400; ++k) {
            double h = an.lo + (0.01 + 0.98 * k / 399.0) * an.length();
            double t = h - an.anchor;
            worst = std::min(worst, std::abs(omega(p, an, 4, h) / (t * t * t * t)));
        }
        CHECK(worst > 1e-3);  // Omega_4 / (h - ha)^4 bounded away from zero
    }
}

TEST_CASE("Omega_3 derivative closed form") {
    auto p = SystemParams::x29(0.5, 1.2);
    auto up = annulus(p, AnnulusTag::PlusAnnulus);
    CHECK(omega3_derivative(p, up, 0.0) == 0.0);
    CHECK(std::abs(omega3_derivative(p, up, up.anchor)) <= 1e-14);
    for (double h : {0.3, 1.0, 1.7, 1.95})
        CHECK(omega3_derivative(p, up, h) < 0.0);
    // finite differences of omega(3)
    for (double h : {0.8, 1.5, -1.2}) {
        double s = 1e-6;
        double fd = (omega(p, up, 3, h + s) - omega(p, up, 3, h - s)) / (2.0 * s);
        CHECK(omega3_derivative(p, up, h) == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("finite-difference Wronskians match the closed forms") {
    auto p = SystemParams::x29(0.5, 1.2);
    for (const auto& an : annuli(p)) {
        double h = an.lo + 0.5 * an.length();
        CHECK(omega_vs_wronskian(p, an, 1, h) == 0.0);
        CHECK(omega_vs_wronskian(p, an, 2, h) <= 1e-8);
        CHECK(omega_vs_wronskian(p, an, 3, h) <= 1e-6);
        CHECK(omega_vs_wronskian(p, an, 4, h) <= 1e-4);
    }
    // explicit uniform step, mid U+ (third derivatives amplify roundoff)
    auto up = annulus(p, AnnulusTag::PlusAnnulus);
    double h_up = up.lo + 0.5 * up.length();
    CHECK(omega_vs_wronskian(p, up, 3, h_up, 1e-5) <= 1e-6);
    CHECK(omega_vs_wronskian(p, up, 4, h_up, 1e-3) <= 1e-4);
    CHECK_THROWS_AS(omega_vs_wronskian(p, up, 3, 1.7, 1e-18), StepTooSmallError);
}

TEST_CASE("ECT verdicts reproduce the proposition case split") {
    {
        auto p = SystemParams::x29(0.0, 1.0);  // b^2 + c^2 <= 4
        CHECK(ect_verdict(p, annulus(p, AnnulusTag::MinusAnnulus)).full);
        CHECK(ect_verdict(p, annulus(p, AnnulusTag::PlusAnnulus)).full);
    }
    {
        auto p = SystemParams::x29(1.5, 1.9);  // b^2 + c^2 > 4
        CHECK(ect_verdict(p, annulus(p, AnnulusTag::MinusAnnulus)).full);
        auto v = ect_verdict(p, annulus(p, AnnulusTag::PlusAnnulus));
        CHECK_FALSE(v.full);
        CHECK(v.d_hi - v.d_lo <= 1e-12);
        CHECK(v.d_lo == doctest::Approx(0.35182743458663657).epsilon(1e-9));
        CHECK(annulus(p, AnnulusTag::PlusAnnulus).contains(v.d_lo, 0.0));
    }
    {
        auto q = SystemParams::x210(1.0);  // b <= sqrt(2)
        CHECK(ect_verdict(q, annulus(q, AnnulusTag::SingleAnnulus)).full);
        auto q2 = SystemParams::x210(1.8);
        auto v = ect_verdict(q2, annulus(q2, AnnulusTag::SingleAnnulus));
        CHECK_FALSE(v.full);
        CHECK(v.d_lo == doctest::Approx(0.4421453725766164).epsilon(1e-9));
    }
}

TEST_CASE("verdicts are stable under grid refinement") {
    auto p = SystemParams::x29(1.5, 1.9);
    auto up = annulus(p, AnnulusTag::PlusAnnulus);
    auto coarse = ect_verdict(p, up, 1000);
    auto fine = ect_verdict(p, up, 10000);
    CHECK(coarse.full == fine.full);
    CHECK(coarse.d_lo == doctest::Approx(fine.d_lo).epsilon(1e-10));

    auto x = SystemParams::x29(0.5, 1.5);
    auto um = annulus(x, AnnulusTag::MinusAnnulus);
    CHECK(ect_verdict(x, um, 1000).full == ect_verdict(x, um, 10000).full);
}

TEST_CASE("Omega_3 sign structure") {
    // negative throughout U- for every X29 sample
    for (const auto& p : {SystemParams::x29(0.0, 1.0), SystemParams::x29(0.5, 1.5),
                          SystemParams::x29(1.2, 1.8), SystemParams::x29(1.5, 1.9)}) {
        auto um = annulus(p, AnnulusTag::MinusAnnulus);
        for (int k = 0; k < 100; ++k) {
            double h = um.lo + (0.001 + 0.99 * k / 99.0) * um.length();
            double t1 = omega(p, um, 3, h);
            if (std::abs(h - um.anchor) > 1e-3)  // outside the cancellation band
                CHECK(t1 < 0.0);
        }
    }
    // partial case: positive before d, negative after, value at 0 as printed
    auto p = SystemParams::x29(1.5, 1.9);
    auto up = annulus(p, AnnulusTag::PlusAnnulus);
    auto v = ect_verdict(p, up);
    double ha = up.anchor;
    CHECK(omega(p, up, 3, 0.0) ==
          doctest::Approx(std::pow(std::sqrt(4.0 - ha * ha) - 2.0, 2) / 2.0).epsilon(1e-12));
    for (double frac : {0.2, 0.5, 0.8}) {
        double before = ha + frac * (v.d_lo - ha);
        if (std::abs(before - ha) > 1e-3) CHECK(omega(p, up, 3, before) > 0.0);
        double after = v.d_hi + frac * (2.0 - v.d_hi);
        if (after < 2.0 - 1e-6) CHECK(omega(p, up, 3, after) < 0.0);
    }
}
