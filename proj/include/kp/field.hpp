#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

#include "kp/grid.hpp"

namespace kp {

using Array = Eigen::ArrayXXd;     // (nx, ny), column-major: index j*nx + i, x fastest
using CArray = Eigen::ArrayXXcd;   // spectral coefficients in FFT index order
using Complex = std::complex<double>;

/// Physical-space samples u(x_i, y_j) on a Grid2D.
struct RealField {
  Grid2D grid;
  Array samples;

  RealField() = default;
  explicit RealField(const Grid2D& g) : grid(g), samples(Array::Zero(g.nx, g.ny)) {}
  RealField(const Grid2D& g, Array s) : grid(g), samples(std::move(s)) {}

  /// Sample a function f(x, y) on the lattice.
  static RealField sample(const Grid2D& g, const std::function<double(double, double)>& f) {
    RealField out(g);
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) out.samples(i, j) = f(g.x(i), g.y(j));
    return out;
  }

  bool all_finite() const { return samples.isFinite().all(); }
};

/// Fourier coefficients of a real field, Hermitian-symmetric, with the
/// forward transform normalized by 1/(nx*ny) so coeff(0,0) is the mean.
struct Spectrum {
  Grid2D grid;
  CArray coeffs;
  bool zero_x_mean = false;

  Spectrum() = default;
  explicit Spectrum(const Grid2D& g) : grid(g), coeffs(CArray::Zero(g.nx, g.ny)) {}
  Spectrum(const Grid2D& g, CArray c, bool zxm = false)
      : grid(g), coeffs(std::move(c)), zero_x_mean(zxm) {}

  /// Zero the xi = 0 column; afterwards every y-slice has zero x-average.
  void project_zero_x_mean() {
    coeffs.row(0).setZero();
    zero_x_mean = true;
  }
};

}  // namespace kp
