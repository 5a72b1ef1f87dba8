#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "lvmel/designer.hpp"
#include "lvmel/kernels.hpp"
#include "lvmel/ode.hpp"
#include "lvmel/quadrature.hpp"

namespace lvmel {
namespace certify {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;  // the extremal quantity the check bounds
    double limit = 0.0;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass = true;
    double seconds = 0.0;

    void add(CheckResult c) {
        pass = pass && c.pass;
        checks.push_back(std::move(c));
    }
};

// Default parameter sets: both ECT cases of each proposition are covered.
std::vector<SystemParams> default_x29_sets();
std::vector<SystemParams> default_x210_sets();

// --- closed-forms suite ---------------------------------------------------
CheckResult check_closed_forms(const SystemParams& p, int grid_n = 20,
                               kernels::Exec exec = kernels::Exec::Parallel);
CheckResult check_melnikov_random(const SystemParams& p, int n_sets = 50, int n_h = 10,
                                  std::uint64_t seed = 1,
                                  kernels::Exec exec = kernels::Exec::Parallel);
CheckResult check_melnikov_one_hot(const SystemParams& p, int n_h = 3);
CheckResult check_swap_identity(const SystemParams& p, int n_h = 10);
CheckResult check_j2_annihilation(const SystemParams& p, int n_h = 10);

// --- ect suite --------------------------------------------------------------
CheckResult check_ect_verdicts();
CheckResult check_wronskian_fd(const SystemParams& p, int n_h = 7);
CheckResult check_omega2_identity(const SystemParams& p, int n_h = 200);

// --- bounds suite -----------------------------------------------------------
CheckResult check_sharpness_random(const SystemParams& p, int n_draws = 10000,
                                   std::uint64_t seed = 2,
                                   kernels::Exec exec = kernels::Exec::Parallel);
CheckResult check_simultaneous_random(const SystemParams& p, int n_draws = 10000,
                                      std::uint64_t seed = 3,
                                      kernels::Exec exec = kernels::Exec::Parallel);
CheckResult check_general_n_bound(const SystemParams& p, int degree, int n_draws = 1000,
                                  int grid = 64, std::uint64_t seed = 4,
                                  kernels::Exec exec = kernels::Exec::Parallel);

// --- configs suite ----------------------------------------------------------
CheckResult check_sharpness_construct(const SystemParams& p);
CheckResult check_all_configurations(const SystemParams& p);
CheckResult check_33_certificate(const SystemParams& p);

// --- ode validation (acceptance criterion 8) --------------------------------
CheckResult check_ode_richardson(const SystemParams& p, const PerturbationCoeffs& coeffs,
                                 AnnulusTag tag, double eps, int n_h = 5,
                                 kernels::Exec exec = kernels::Exec::Parallel);
CheckResult check_ode_brackets(const SystemParams& p, const PerturbationCoeffs& coeffs,
                               AnnulusTag tag, double eps, int grid = 24,
                               kernels::Exec exec = kernels::Exec::Parallel);

// Suite assemblers (cmd_certify surface).
SuiteReport closed_forms_suite(std::uint64_t seed = 1,
                               kernels::Exec exec = kernels::Exec::Parallel);
SuiteReport ect_suite(kernels::Exec exec = kernels::Exec::Parallel);
SuiteReport bounds_suite(std::uint64_t seed = 2, int n_draws = 10000, int n_draws_general = 1000,
                         kernels::Exec exec = kernels::Exec::Parallel);
SuiteReport configs_suite(kernels::Exec exec = kernels::Exec::Parallel);

}  // namespace certify
}  // namespace lvmel
