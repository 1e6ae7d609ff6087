#pragma once

#include <cmath>
#include <numbers>

#include "kp/errors.hpp"

namespace kp {

inline constexpr double pi = std::numbers::pi;

inline bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

/// Doubly periodic rectangle [-Lx/2, Lx/2) x [0, Ly) sampled on an
/// nx-by-ny lattice, x fastest.  Wavenumbers follow FFT index order:
/// index k maps to the signed integer mode k < n/2 ? k : k - n.
struct Grid2D {
  int nx = 0;
  int ny = 0;
  double Lx = 0.0;
  double Ly = 0.0;

  Grid2D() = default;
  Grid2D(int nx_, int ny_, double Lx_, double Ly_) : nx(nx_), ny(ny_), Lx(Lx_), Ly(Ly_) {
    if (!is_pow2(nx) || !is_pow2(ny) || nx < 8 || ny < 8)
      throw ConfigError("Grid2D: nx and ny must be powers of two, each >= 8");
    if (!(Lx > 0.0) || !(Ly > 0.0)) throw ConfigError("Grid2D: Lx and Ly must be positive");
  }

  double dx() const { return Lx / nx; }
  double dy() const { return Ly / ny; }
  /// Quadrature weight of one sample in the trapezoidal area rule.
  double cell_area() const { return Lx * Ly / (double(nx) * ny); }

  /// Spatial sample points; x is centered on 0, y starts at 0.
  double x(int i) const { return (double(i) / nx - 0.5) * Lx; }
  double y(int j) const { return double(j) / ny * Ly; }

  int mode_x(int i) const { return i < nx / 2 ? i : i - nx; }
  int mode_y(int j) const { return j < ny / 2 ? j : j - ny; }

  double xi(int i) const { return 2.0 * pi * mode_x(i) / Lx; }
  double mu(int j) const { return 2.0 * pi * mode_y(j) / Ly; }

  double xi_min() const { return 2.0 * pi / Lx; }
  double xi_max() const { return pi * nx / Lx; }
  double mu_max() const { return pi * ny / Ly; }

  bool operator==(const Grid2D& o) const {
    return nx == o.nx && ny == o.ny && Lx == o.Lx && Ly == o.Ly;
  }
};

}  // namespace kp
