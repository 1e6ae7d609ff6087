#pragma once

#include <functional>

#include "kp/spectral.hpp"

namespace kp {

/// Linear Fourier rate of the integrated KP equation: i * omega_eps(xi, mu)
/// (zero on the xi = 0 column by the zero-mean convention).
Complex linear_symbol(int eps, double xi, double mu);

/// Plain KP nonlinearity F[-1/2 d_x(u^2)] with 2/3-rule dealiasing on both
/// axes.  The output always has zero x-mean.
Spectrum nonlinear_rhs(const Spectrum& s);

/// 2/3-rule dealias mask entry: true if the mode is kept.
bool dealias_keep(const Grid2D& g, int i, int j);

struct SolverState {
  double t = 0.0;
  Spectrum spectrum;
  double dt = 0.0;
  long steps = 0;
  int eps = -1;  // -1 KP-I, +1 KP-II
};

struct ConservedQuantities {
  double mass = 0.0;
  double energy = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
  double es1 = 0.0;
};

/// Quadrature of u^2.
double conserved_mass(const RealField& f);

/// 1/2 int u_x^2 - eps/2 int (dx^{-1} u_y)^2 - 1/6 int u^3.  Requires the
/// dx^{-1} term to be well defined (throws NotZeroXMean otherwise;
/// y-independent fields always pass).
double conserved_energy(const RealField& f, int eps);

ConservedQuantities conserved_quantities(const RealField& f, int eps);

/// Nonlinear part of the split right-hand side, possibly time dependent.
using NonlinearRhs = std::function<Spectrum(const Spectrum&, double)>;

/// Fourth-order exponential time differencing (Cox-Matthews stages) with
/// phi-function coefficients evaluated by averaging the defining formulas
/// over 32 points on a unit-radius contour around each dt*lambda.
class EtdRk4 {
 public:
  EtdRk4(const Grid2D& grid, int eps, double dt, bool nonlinear_enabled = true);

  double dt() const { return dt_; }
  const Grid2D& grid() const { return grid_; }

  /// Advance one step with the plain KP nonlinearity (or none).
  void step(SolverState& state) const;

  /// Advance one step with a caller-supplied nonlinear term.
  void step(SolverState& state, const NonlinearRhs& rhs) const;

 private:
  Grid2D grid_;
  int eps_;
  double dt_;
  bool nonlinear_enabled_;
  CArray E_, E2_, Q_, f1_, f2_, f3_;
};

/// Step-size rule: min(requested, 0.5 dx / max(1, |u0|_inf)).
double default_dt(const Grid2D& g, double requested, double u0_linf);

/// Throws NonFinite if a coefficient is non-finite or exceeds 1e12.
void check_finite(const Spectrum& s);

}  // namespace kp
