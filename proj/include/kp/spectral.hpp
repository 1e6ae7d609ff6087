#pragma once

#include "kp/fft.hpp"

namespace kp {

/// Dispersion relation of the linearized KP equation.  eps = -1 selects
/// KP-I (omega = xi^3 + mu^2/xi), eps = +1 selects KP-II (xi^3 - mu^2/xi).
/// Odd under (xi, mu) -> (-xi, -mu).  Throws ZeroXFrequency at xi = 0.
double omega(int eps, double xi, double mu);

/// sigma_pm(tau, xi, mu) = tau - omega_pm(xi, mu).  pm = +1 or -1.
double sigma(int pm, double tau, double xi, double mu);

/// Spectral x-derivative (multiply by i xi).
Spectrum dx(const Spectrum& s);

/// Spectral y-derivative (multiply by i mu).
Spectrum dy(const Spectrum& s);

/// x-antiderivative: divide by i xi; the xi = 0 column stays zero.
/// Requires zero x-mean (relative to the spectrum's own size).
Spectrum dx_inverse(const Spectrum& s);

/// Multiply coefficients by (1+xi^2)^{theta/2} (bessel = true) or
/// |xi|^theta (bessel = false; the xi = 0 column is zeroed for theta < 0,
/// which requires zero x-mean; |xi|^0 is the identity).
Spectrum apply_x_power(const Spectrum& s, double theta, bool bessel);

/// Subtract the x-average from each y-row.
RealField zero_x_mean_project(const RealField& f);

/// True if the xi = 0 column is negligible against the spectrum size.
bool has_zero_x_mean(const Spectrum& s, double rel_tol = 1e-12);

/// Quadrature L2 norm: sqrt(cell_area * sum u^2).
double l2_norm(const RealField& f);
double linf_norm(const RealField& f);

/// Spectral-side L2 norm under the same convention:
/// sqrt(Lx*Ly * sum |c|^2); equals l2_norm of the field (Parseval).
double l2_norm(const Spectrum& s);

/// Free KP group: coefficients multiplied by exp(i t omega_eps).
Spectrum linear_propagate(const Spectrum& s, int eps, double t);

}  // namespace kp
