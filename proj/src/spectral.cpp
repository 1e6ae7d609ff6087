#include "kp/spectral.hpp"

#include <cmath>

namespace kp {

double omega(int eps, double xi, double mu) {
  if (xi == 0.0) throw ZeroXFrequency("omega: xi = 0");
  return xi * xi * xi - eps * mu * mu / xi;
}

double sigma(int pm, double tau, double xi, double mu) {
  if (xi == 0.0) throw ZeroXFrequency("sigma: xi = 0");
  // omega_+ corresponds to eps = +1 (KP-II), omega_- to eps = -1.
  return tau - omega(pm, xi, mu);
}

Spectrum dx(const Spectrum& s) {
  Spectrum out(s.grid, s.coeffs, true);
  const Grid2D& g = s.grid;
  for (int i = 0; i < g.nx; ++i) out.coeffs.row(i) *= Complex(0.0, g.xi(i));
  return out;
}

Spectrum dy(const Spectrum& s) {
  Spectrum out(s.grid, s.coeffs, s.zero_x_mean);
  const Grid2D& g = s.grid;
  for (int j = 0; j < g.ny; ++j) out.coeffs.col(j) *= Complex(0.0, g.mu(j));
  return out;
}

bool has_zero_x_mean(const Spectrum& s, double rel_tol) {
  const double col0 = s.coeffs.row(0).abs().maxCoeff();
  const double all = s.coeffs.abs().maxCoeff();
  return col0 <= rel_tol * std::max(1.0, all);
}

Spectrum dx_inverse(const Spectrum& s) {
  if (!has_zero_x_mean(s))
    throw NotZeroXMean("dx_inverse: spectrum has nonzero x-mean content");
  Spectrum out(s.grid, s.coeffs, true);
  const Grid2D& g = s.grid;
  out.coeffs.row(0).setZero();
  for (int i = 1; i < g.nx; ++i) out.coeffs.row(i) /= Complex(0.0, g.xi(i));
  return out;
}

Spectrum apply_x_power(const Spectrum& s, double theta, bool bessel) {
  const Grid2D& g = s.grid;
  if (!bessel && theta < 0.0 && !has_zero_x_mean(s))
    throw NotZeroXMean("apply_x_power: homogeneous negative power needs zero x-mean");
  Spectrum out(s.grid, s.coeffs, s.zero_x_mean);
  for (int i = 0; i < g.nx; ++i) {
    const double xi = g.xi(i);
    double w;
    if (bessel) {
      w = std::pow(1.0 + xi * xi, theta / 2.0);
    } else if (theta == 0.0) {
      w = 1.0;
    } else if (xi == 0.0) {
      w = 0.0;
    } else {
      w = std::pow(std::abs(xi), theta);
    }
    out.coeffs.row(i) *= w;
  }
  if (!bessel && theta < 0.0) out.zero_x_mean = true;
  return out;
}

RealField zero_x_mean_project(const RealField& f) {
  RealField out = f;
  for (int j = 0; j < f.grid.ny; ++j) {
    const double mean = f.samples.col(j).mean();
    out.samples.col(j) -= mean;
  }
  return out;
}

double l2_norm(const RealField& f) {
  return std::sqrt(f.grid.cell_area() * f.samples.square().sum());
}

double linf_norm(const RealField& f) { return f.samples.abs().maxCoeff(); }

double l2_norm(const Spectrum& s) {
  return std::sqrt(s.grid.Lx * s.grid.Ly * s.coeffs.abs2().sum());
}

Spectrum linear_propagate(const Spectrum& s, int eps, double t) {
  Spectrum out(s.grid, s.coeffs, s.zero_x_mean);
  const Grid2D& g = s.grid;
  for (int j = 0; j < g.ny; ++j) {
    const double mu = g.mu(j);
    for (int i = 1; i < g.nx; ++i) {
      const double om = omega(eps, g.xi(i), mu);
      out.coeffs(i, j) *= std::polar(1.0, t * om);
    }
  }
  return out;
}

}  // namespace kp
