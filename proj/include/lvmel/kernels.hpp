#pragma once
#include <cstdint>
#include <functional>
#include <vector>

#include "lvmel/system.hpp"

namespace lvmel {
namespace kernels {

enum class Exec { Serial, Parallel };

// Worker cap: min(MEL_THREADS, hardware). Parallel falls back to serial
// when OpenMP is unavailable; per-element results are identical either way.
int thread_cap();

std::vector<double> linspace(double lo, double hi, int n);

// Interior h-grid of an annulus with a fractional margin at both ends.
std::vector<double> annulus_grid(const AnnulusSpec& a, int n, double margin_frac = 0.02);

// Evaluates f at every grid point. The parallel kernel and the serial
// reference compute identical values (pure per-element work).
std::vector<double> map_grid(const std::vector<double>& xs,
                             const std::function<double(double)>& f,
                             Exec exec = Exec::Parallel);

// max over draw indices of fn(index); used by the randomized bound sweeps.
int sweep_max(int n_draws, const std::function<int(int)>& fn, Exec exec = Exec::Parallel);

// Deterministic per-index stream seed (splitmix64 mix of seed and index),
// so parallel draws are independent of scheduling.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace kernels
}  // namespace lvmel
