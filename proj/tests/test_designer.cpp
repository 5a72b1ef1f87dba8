#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "lvmel/designer.hpp"

using namespace lvmel;

TEST_CASE("s-expansion against the frozen reference and trivial cases") {
    auto p = SystemParams::x29(0.5, 1.2);
    auto up = annulus(p, AnnulusTag::PlusAnnulus);
    SExpansion s = s_expansion(make_melnikov_n3(up, 0.3, -0.7, 1.1, 0.4));
    CHECK(s.s1 == doctest::Approx(-2.1035240707632816).epsilon(1e-13));
    CHECK(s.s2 == doctest::Approx(-1.8595839695793359).epsilon(1e-13));
    CHECK(s.s3 == doctest::Approx(-0.63992375858720463).epsilon(1e-13));
    CHECK(s.s4 == doctest::Approx(-0.46877430862260594).epsilon(1e-13));

    SExpansion lin = s_expansion(make_melnikov_n3(up, 1.0, 0.0, 0.0, 0.0));
    CHECK(lin.s1 == 1.0);
    CHECK(lin.s2 == 0.0);
    CHECK(lin.s3 == 0.0);
    CHECK(lin.s4 == 0.0);

    // a4 = 1, a5 = 0 (local): s3 = -2 ha / (4 - ha^2)^(5/2)
    double ha = up.anchor;
    SExpansion tail = s_expansion(make_melnikov_n3(up, 0.0, 0.0, 1.0, 0.0));
    CHECK(tail.s3 == doctest::Approx(-2.0 * ha / std::pow(4.0 - ha * ha, 2.5)).epsilon(1e-13));
    auto um = annulus(p, AnnulusTag::MinusAnnulus);
    double hm = um.anchor;
    SExpansion tailm = s_expansion(make_melnikov_n3(um, 0.0, 0.0, -1.0, 0.0));
    CHECK(tailm.s3 == doctest::Approx(2.0 * hm / std::pow(4.0 - hm * hm, 2.5)).epsilon(1e-13));
}

namespace {

// Taylor coefficient M^(k)(anchor)/k! by Richardson-extrapolated central
// stencils; the closed form continues smoothly across the anchor, so the
// symmetric windows are legitimate.
double taylor_coeff(const MelnikovN3& q, int order) {
    double a = q.annulus.anchor;
    double u = (4.0 - a * a) / 4.0;
    auto f = [&](double h) { return melnikov_n3_eval(q, h); };
    auto stencil = [&](double s) {
        switch (order) {
            case 1: return (f(a + s) - f(a - s)) / (2.0 * s);
            case 2: return (f(a + s) - 2.0 * f(a) + f(a - s)) / (s * s);
            case 3:
                return (f(a + 2 * s) - 2.0 * f(a + s) + 2.0 * f(a - s) - f(a - 2 * s)) /
                       (2.0 * s * s * s);
            default:
                return (f(a + 2 * s) - 4.0 * f(a + s) + 6.0 * f(a) - 4.0 * f(a - s) +
                        f(a - 2 * s)) / (s * s * s * s);
        }
    };
    double step = (order <= 2 ? 8e-3 : order == 3 ? 6e-2 : 1.2e-1) * u;
    step = std::min(step, (2.0 - std::abs(a)) / 8.0);
    // two Richardson levels kill the s^2 and s^4 error terms
    double d = (64.0 * stencil(step / 4.0) - 20.0 * stencil(step / 2.0) + stencil(step)) / 45.0;
    double fact[5] = {1, 1, 2, 6, 24};
    return d / fact[order];
}

}  // namespace

TEST_CASE("s-expansion matches Taylor coefficients of the reduced form") {
    auto p = SystemParams::x29(0.5, 1.2);
    std::mt19937_64 rng(31);
    std::normal_distribution<double> N(0.0, 1.0);
    for (const auto& an : annuli(p)) {
        MelnikovN3 q = make_melnikov_n3(an, N(rng), N(rng), N(rng), N(rng));
        SExpansion s = s_expansion(q);
        CHECK(taylor_coeff(q, 1) == doctest::Approx(s.s1).epsilon(1e-6));
        CHECK(taylor_coeff(q, 2) == doctest::Approx(s.s2).epsilon(1e-6));
        CHECK(taylor_coeff(q, 3) == doctest::Approx(s.s3).epsilon(1e-6));
        CHECK(taylor_coeff(q, 4) == doctest::Approx(s.s4).epsilon(1e-6));
    }
}

TEST_CASE("shared inflection level") {
    CHECK(shared_inflection(1.0, 0.0).value() == 0.0);
    CHECK_FALSE(shared_inflection(0.0, 1.0).has_value());
    CHECK(shared_inflection(2.0, -1.0).value() == doctest::Approx(2.0));
}

TEST_CASE("three zeros on an annulus trap h0 inside it") {
    auto p = SystemParams::x29(0.0, 1.0);
    auto up = annulus(p, AnnulusTag::PlusAnnulus);
    auto um = annulus(p, AnnulusTag::MinusAnnulus);
    MelnikovN3 q = realize_zero_count(p, up, 3);
    auto h0 = shared_inflection(q.a4, q.a5);
    REQUIRE(h0.has_value());
    CHECK(up.contains(*h0, 0.0));
    CHECK_FALSE(um.contains(*h0, 0.0));
    // with that tail fixed, U- never reaches 3 for any (a2, a3)
    std::mt19937_64 rng(37);
    std::normal_distribution<double> N(0.0, 1.0);
    for (int t = 0; t < 200; ++t) {
        MelnikovN3 qm = make_melnikov_n3(um, N(rng), N(rng), -q.a4, -q.a5);
        CHECK(count_zeros_n3(qm).count <= 2);
    }
}

TEST_CASE("U- and U+ are disjoint across the parameter box") {
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            double b = 1.9 * i / 9.0;
            double c = std::min(b + 1e-2 + (2.0 - b) * j / 9.0, 1.99);
            if (!(b < c)) continue;
            auto p = SystemParams::x29(b, c);
            auto up = annulus(p, AnnulusTag::PlusAnnulus);
            auto um = annulus(p, AnnulusTag::MinusAnnulus);
            CHECK(um.hi <= up.lo);
        }
}

TEST_CASE("realize_zero_count produces certified counts") {
    for (const auto& p : {SystemParams::x29(0.0, 1.0), SystemParams::x29(0.5, 1.5)})
        for (const auto& an : annuli(p))
            for (int k = 0; k <= 3; ++k) {
                MelnikovN3 q = realize_zero_count(p, an, k);
                auto rep = count_zeros_n3(q);
                CHECK(rep.count == k);
                for (const auto& [h, kind] : rep.zeros) {
                    CHECK(kind == ZeroKind::Simple);
                    CHECK(an.contains(h, 0.0));
                }
            }
    // X210 ladder, including the partial-ECT parameter
    for (double b : {1.0, 1.8}) {
        auto q = SystemParams::x210(b);
        auto an = annulus(q, AnnulusTag::SingleAnnulus);
        for (int k = 0; k <= 3; ++k)
            CHECK(count_zeros_n3(realize_zero_count(q, an, k)).count == k);
    }
    auto p = SystemParams::x29(0.0, 1.0);
    CHECK_THROWS(realize_zero_count(p, annulus(p, AnnulusTag::PlusAnnulus), 4));
}

TEST_CASE("all fifteen configurations realize and certify") {
    auto p = SystemParams::x29(0.0, 1.0);
    for (int u = 0; u <= 3; ++u)
        for (int v = 0; v <= 3; ++v) {
            if (u + v > 5 || (u == 3 && v == 3)) continue;
            CAPTURE(u);
            CAPTURE(v);
            PerturbationCoeffs coeffs = realize_configuration(p, {u, v});
            auto [rp, rm] = certify_configuration(p, coeffs);
            CHECK(rp.count == u);
            CHECK(rm.count == v);

            // only the six designated free coefficients may be nonzero
            coeffs.for_each([&](int i, int j, double av, double bv) {
                bool a_free = (i == 1 && j == 1) || (i == 0 && j == 1);
                bool b_free = (i == 1 && j == 1) || (i == 0 && j == 0) ||
                              (i == 2 && j == 1) || (i == 3 && j == 0);
                if (!a_free) CHECK(av == 0.0);
                if (!b_free) CHECK(bv == 0.0);
            });
        }
}

TEST_CASE("inversion round-trip reproduces the quintuple targets") {
    auto p = SystemParams::x29(0.0, 1.0);
    auto up = annulus(p, AnnulusTag::PlusAnnulus);
    auto um = annulus(p, AnnulusTag::MinusAnnulus);
    PerturbationCoeffs coeffs = realize_configuration(p, {3, 2});
    MelnikovN3 qp = melnikov_n3_coeffs(p, coeffs, up);
    MelnikovN3 qm = melnikov_n3_coeffs(p, coeffs, um);
    // tail coupling holds exactly
    CHECK(qm.a4 == doctest::Approx(-qp.a4).epsilon(1e-10));
    CHECK(qm.a5 == doctest::Approx(-qp.a5).epsilon(1e-10));
    // counts are the designed ones with simple zeros
    auto rp = count_zeros_n3(qp);
    REQUIRE(rp.count == 3);
    for (const auto& [h, kind] : rp.zeros) CHECK(kind == ZeroKind::Simple);
}

TEST_CASE("(3,3) raises the impossibility certificate") {
    auto p = SystemParams::x29(0.0, 1.0);
    auto up = annulus(p, AnnulusTag::PlusAnnulus);
    auto um = annulus(p, AnnulusTag::MinusAnnulus);
    try {
        realize_configuration(p, {3, 3});
        FAIL("expected TargetImpossibleError");
    } catch (const TargetImpossibleError& e) {
        CHECK(e.certificate.h0_in_uplus);
        CHECK(e.certificate.h0_in_uminus);
        CHECK(up.contains(e.certificate.h0_from_uplus_attempt, 0.0));
        CHECK(um.contains(e.certificate.h0_from_uminus_attempt, 0.0));
    }
}

TEST_CASE("designer contract errors") {
    auto q = SystemParams::x210(1.0);
    CHECK_THROWS(realize_configuration(q, {1, 1}));
    auto p = SystemParams::x29(0.0, 1.0);
    CHECK_THROWS(realize_configuration(p, {4, 0}));
    CHECK_THROWS(realize_configuration(p, {3, -1}));
}
