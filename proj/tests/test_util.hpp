#pragma once

#include <random>

#include "kp/runner.hpp"
#include "kp/spectral.hpp"

namespace kptest {

using namespace kp;

/// Smooth random zero-x-mean field, deterministic in the seed.
inline RealField random_zero_mean(const Grid2D& g, std::uint64_t seed, double amplitude = 1.0) {
  RealField f = random_smooth_field(g, seed, amplitude);
  return zero_x_mean_project(f);
}

inline double max_abs_diff(const Array& a, const Array& b) {
  return (a - b).abs().maxCoeff();
}

}  // namespace kptest
