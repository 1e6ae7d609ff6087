#include "kp/solutions.hpp"

#include <cmath>
#include <limits>

namespace kp {

RealField line_soliton(double c, const Grid2D& grid, double amplitude_scale) {
  if (!(c > 0.0)) throw ParamConstraintViolated("line_soliton: c must be positive");
  const double peak = amplitude_scale * 1.5 * c;
  RealField f(grid);
  for (int i = 0; i < grid.nx; ++i) {
    const double sech = 1.0 / std::cosh(std::sqrt(c) * grid.x(i) / 2.0);
    const double v = amplitude_scale * 1.5 * c * sech * sech;
    f.samples.row(i).setConstant(v);
  }
  const double edge = std::abs(f.samples(0, 0));
  if (edge > 1e-6 * std::abs(peak))
    throw DomainTooSmall("line_soliton: boundary amplitude " + std::to_string(edge) +
                         " exceeds 1e-6 of peak; enlarge Lx");
  return f;
}

ZaitsevWave zaitsev(double alpha, double delta, const Grid2D& grid, double frame_shift) {
  if (alpha == 0.0 || delta == 0.0)
    throw ParamConstraintViolated("zaitsev: alpha and delta must be nonzero");
  const double a2 = alpha * alpha, d2 = delta * delta;
  if (!(d2 > a2 * a2))
    throw ParamConstraintViolated("zaitsev: requires delta^2 > alpha^4 (strict)");
  if (!(d2 > 3.0 * a2 * a2))
    throw ParamConstraintViolated(
        "zaitsev: profile exists only for delta^2 > 3 alpha^4 in this normalization");
  const double periods = grid.Ly * std::abs(delta) / (2.0 * pi);
  if (std::abs(periods - std::round(periods)) > 1e-9 || periods < 0.5)
    throw PeriodMismatch("zaitsev: 2 pi / delta must divide Ly");

  const double depth = std::sqrt((d2 - 3.0 * a2 * a2) / d2);
  ZaitsevWave out;
  out.params.kind = "zaitsev";
  out.params.alpha = alpha;
  out.params.delta = delta;
  out.params.kappa = d2 / (d2 - a2 * a2);
  out.params.c = a2 * alpha + 3.0 * d2 / alpha;
  out.params.frame_speed = a2 + d2 / a2;
  out.params.modulation_depth = depth;
  out.params.convention = "tau=cosh(aX)-m*cos(dy); u=12 dXX log tau; m^2=(d^2-3a^4)/d^2";

  out.field = RealField(grid);
  double tau_min = std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid.ny; ++j) {
    const double cs = std::cos(delta * grid.y(j));
    for (int i = 0; i < grid.nx; ++i) {
      const double X = grid.x(i) - frame_shift;
      const double ch = std::cosh(alpha * X);
      const double tau = ch - depth * cs;
      tau_min = std::min(tau_min, std::abs(tau));
      out.field.samples(i, j) = 12.0 * a2 * (1.0 - depth * ch * cs) / (tau * tau);
    }
  }
  if (tau_min < 1e-8)
    throw SingularDenominator("zaitsev: tau function reaches " + std::to_string(tau_min));
  return out;
}

ResidualReport traveling_residual(const RealField& f, double c, int eps) {
  ResidualReport rep;
  const double fl2 = l2_norm(f);
  rep.boundary_amp = f.samples.row(0).abs().maxCoeff();
  if (fl2 == 0.0) return rep;

  Spectrum s = to_spectrum(f);
  Spectrum fx = dx(s);
  Spectrum fxxx = dx(dx(fx));
  Spectrum s2 = to_spectrum(RealField(f.grid, f.samples.square()));
  Spectrum ffx = dx(s2);
  // dx^{-1} f_yy: drop the (negligible or absent) zero-x-mean part of f_yy.
  Spectrum fyy = dy(dy(s));
  fyy.project_zero_x_mean();
  Spectrum trans = dx_inverse(fyy);

  CArray rc = -c * fx.coeffs + fxxx.coeffs + 0.5 * ffx.coeffs +
              double(eps) * trans.coeffs;
  Spectrum R(f.grid, std::move(rc), false);
  // Constant-in-x part per y-row is the integration constant; discard it.
  rep.discarded_mean = R.coeffs.row(0).abs().maxCoeff();
  R.project_zero_x_mean();
  rep.rel_residual = l2_norm(R) / fl2;
  return rep;
}

RealField background_forcing(const RealField& psi, const RealField& psi_t, int eps) {
  Spectrum s = to_spectrum(psi);
  Spectrum sxxx = dx(dx(dx(s)));
  Spectrum s2 = to_spectrum(RealField(psi.grid, psi.samples.square()));
  Spectrum ppx = dx(s2);
  Spectrum pyy = dy(dy(s));
  pyy.project_zero_x_mean();
  Spectrum trans = dx_inverse(pyy);
  CArray gc = to_spectrum(psi_t).coeffs + sxxx.coeffs + 0.5 * ppx.coeffs +
              double(eps) * trans.coeffs;
  Spectrum g(psi.grid, std::move(gc), false);
  g.project_zero_x_mean();
  return from_spectrum_unchecked(g);
}

}  // namespace kp
