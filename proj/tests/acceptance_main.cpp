// Acceptance suite: one line per criterion, exit nonzero on any failure.
//
//   lvmel_acceptance                 run all eight criteria
//   lvmel_acceptance --criterion N   run one
#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "lvmel/certify.hpp"
#include "lvmel/chebyshev.hpp"

using namespace lvmel;
using certify::CheckResult;

namespace {

struct Criterion {
    bool pass = true;
    double worst = 0.0;
    std::string detail;

    void fold(const CheckResult& c) {
        pass = pass && c.pass;
        worst = std::max(worst, c.measured / (c.limit != 0.0 ? c.limit : 1.0));
        if (!c.pass) detail += c.name + " [" + c.note + "] ";
    }
};

std::vector<SystemParams> all_sets() {
    auto sets = certify::default_x29_sets();
    auto x210 = certify::default_x210_sets();
    sets.insert(sets.end(), x210.begin(), x210.end());
    return sets;
}

Criterion criterion1() {
    Criterion out;
    for (const auto& p : all_sets()) out.fold(certify::check_closed_forms(p, 20));
    return out;
}

Criterion criterion2() {
    Criterion out;
    for (const auto& p : all_sets()) {
        out.fold(certify::check_melnikov_random(p, 50, 10, 1));
        out.fold(certify::check_melnikov_one_hot(p));
    }
    return out;
}

Criterion criterion3() {
    Criterion out;
    for (const auto& p : certify::default_x29_sets()) out.fold(certify::check_swap_identity(p));
    for (const auto& p : all_sets()) out.fold(certify::check_j2_annihilation(p));
    return out;
}

Criterion criterion4() {
    Criterion out;
    out.fold(certify::check_ect_verdicts());
    for (const auto& p : all_sets()) {
        out.fold(certify::check_wronskian_fd(p));
        out.fold(certify::check_omega2_identity(p));
    }
    return out;
}

Criterion criterion5() {
    Criterion out;
    SystemParams x29 = SystemParams::x29(0.0, 1.0);
    SystemParams x210 = SystemParams::x210(1.0);
    out.fold(certify::check_sharpness_construct(x29));
    out.fold(certify::check_sharpness_construct(x210));
    out.fold(certify::check_sharpness_random(x29, 10000, 2));
    out.fold(certify::check_sharpness_random(x210, 10000, 3));
    return out;
}

Criterion criterion6() {
    Criterion out;
    SystemParams x29 = SystemParams::x29(0.0, 1.0);
    out.fold(certify::check_all_configurations(x29));
    out.fold(certify::check_33_certificate(x29));
    out.fold(certify::check_simultaneous_random(x29, 10000, 4));
    return out;
}

Criterion criterion7() {
    Criterion out;
    SystemParams x29 = SystemParams::x29(0.0, 1.0);
    SystemParams x210 = SystemParams::x210(1.0);
    for (int n : {4, 5}) {
        out.fold(certify::check_general_n_bound(x29, n, 1000, 64, 5 + n));
        out.fold(certify::check_general_n_bound(x210, n, 1000, 64, 15 + n));
    }
    return out;
}

Criterion criterion8() {
    Criterion out;
    SystemParams p = SystemParams::x29(0.0, 1.0);
    PerturbationCoeffs inst10 = realize_configuration(p, {1, 0});
    PerturbationCoeffs inst32 = realize_configuration(p, {3, 2});
    for (const auto& coeffs : {inst10, inst32})
        for (auto tag : {AnnulusTag::PlusAnnulus, AnnulusTag::MinusAnnulus})
            for (double eps : {1e-4, 1e-5})
                out.fold(certify::check_ode_richardson(p, coeffs, tag, eps, 5));
    // bracket counts at the smaller eps; the designed zeros are separated by
    // more than 5% of each interval
    for (const auto& coeffs : {inst10, inst32})
        for (auto tag : {AnnulusTag::PlusAnnulus, AnnulusTag::MinusAnnulus})
            out.fold(certify::check_ode_brackets(p, coeffs, tag, 1e-5, 24));
    return out;
}

const char* kNames[8] = {
    "closed-form certification vs quadrature oracle (rel 1e-8)",
    "melnikov n=3 reduction vs oracle, random + one-hot (rel 1e-8)",
    "swap identity (1e-9) and j=2 annihilation (1e-10)",
    "ECT verdicts, Wronskian finite differences (1e-4), Omega2 = Omega1^2",
    "sharpness: certified 3-zero instances; 1e4 draws never exceed 3",
    "simultaneity: all (u,v), (3,3) certificate, 1e4 draws total <= 5",
    "general-n bound sampling at n=4,5 (2n-3 and [(3n-3)/2])",
    "ODE first-order validation: Richardson 0.5%, bracket counts",
};
const double kTargets[8] = {60.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 300.0};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int k = 1; k < argc; ++k)
        if (std::strcmp(argv[k], "--criterion") == 0 && k + 1 < argc) only = std::atoi(argv[k + 1]);

    Criterion (*runners[8])() = {criterion1, criterion2, criterion3, criterion4,
                                 criterion5, criterion6, criterion7, criterion8};
    bool all_pass = true;
    for (int k = 1; k <= 8; ++k) {
        if (only != 0 && k != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Criterion c;
        try {
            c = runners[k - 1]();
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (kTargets[k - 1] > 0.0 && secs > kTargets[k - 1]) {
            c.pass = false;
            c.detail += "runtime target exceeded ";
        }
        all_pass = all_pass && c.pass;
        std::printf("criterion %d %s  %s  (worst/limit %.3g, %.1f s%s)\n", k,
                    c.pass ? "PASS" : "FAIL", kNames[k - 1], c.worst, secs,
                    c.detail.empty() ? "" : (" | " + c.detail).c_str());
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
