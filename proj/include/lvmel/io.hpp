#pragma once
#include <string>

#include "lvmel/coeffs.hpp"
#include "lvmel/system.hpp"

namespace lvmel {

// On-disk coefficient file:
//   {"family":"X29","b":0.0,"c":1.0,"n":3,"a":{"1,1":0.5},"b_coeffs":{"3,0":1.0}}
// Omitted entries are zero; unknown keys are rejected.
struct CoeffFile {
    SystemParams params;
    PerturbationCoeffs coeffs;
};

CoeffFile load_coeff_file(const std::string& path);
CoeffFile parse_coeff_json(const std::string& text);
std::string coeff_file_to_json(const SystemParams& params, const PerturbationCoeffs& coeffs);
void save_coeff_file(const std::string& path, const SystemParams& params,
                     const PerturbationCoeffs& coeffs);

// Full round-trip float formatting for the CSV outputs.
std::string format_double(double v);

}  // namespace lvmel
