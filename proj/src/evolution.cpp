#include "kp/evolution.hpp"

#include <cmath>

#include "kp/decomposition.hpp"

namespace kp {

Complex linear_symbol(int eps, double xi, double mu) {
  if (xi == 0.0) return Complex(0.0, 0.0);
  return Complex(0.0, omega(eps, xi, mu));
}

bool dealias_keep(const Grid2D& g, int i, int j) {
  return std::abs(g.mode_x(i)) <= g.nx / 3 && std::abs(g.mode_y(j)) <= g.ny / 3;
}

namespace {

void apply_dealias(CArray& c, const Grid2D& g) {
  for (int i = 0; i < g.nx; ++i)
    if (std::abs(g.mode_x(i)) > g.nx / 3) c.row(i).setZero();
  for (int j = 0; j < g.ny; ++j)
    if (std::abs(g.mode_y(j)) > g.ny / 3) c.col(j).setZero();
}

}  // namespace

Spectrum nonlinear_rhs(const Spectrum& s) {
  const Grid2D& g = s.grid;
  Spectrum cut(g, s.coeffs, s.zero_x_mean);
  apply_dealias(cut.coeffs, g);
  RealField u = from_spectrum_unchecked(cut);
  Spectrum prod = to_spectrum(RealField(g, u.samples.square()));
  apply_dealias(prod.coeffs, g);
  Spectrum out = dx(prod);
  out.coeffs *= -0.5;
  out.zero_x_mean = true;
  return out;
}

double conserved_mass(const RealField& f) {
  return f.grid.cell_area() * f.samples.square().sum();
}

double conserved_energy(const RealField& f, int eps) {
  Spectrum s = to_spectrum(f);
  RealField ux = from_spectrum_unchecked(dx(s));
  Spectrum sy = dy(s);
  if (!has_zero_x_mean(sy))
    throw NotZeroXMean("conserved_energy: dx^{-1} u_y undefined (nonzero x-mean y-variation)");
  sy.project_zero_x_mean();
  RealField uyI = from_spectrum_unchecked(dx_inverse(sy));
  const double dA = f.grid.cell_area();
  const double grad = 0.5 * dA * ux.samples.square().sum();
  const double trans = 0.5 * dA * uyI.samples.square().sum();
  const double cubic = dA / 6.0 * f.samples.cube().sum();
  return grad - eps * trans - cubic;
}

ConservedQuantities conserved_quantities(const RealField& f, int eps) {
  ConservedQuantities q;
  q.mass = conserved_mass(f);
  q.energy = conserved_energy(f, eps);
  q.l2 = std::sqrt(q.mass);
  q.linf = linf_norm(f);
  // es1 needs zero x-mean; report it on the projected field.
  Spectrum s = to_spectrum(f);
  s.project_zero_x_mean();
  q.es1 = es_norm(s, 1.0);
  return q;
}

EtdRk4::EtdRk4(const Grid2D& grid, int eps, double dt, bool nonlinear_enabled)
    : grid_(grid), eps_(eps), dt_(dt), nonlinear_enabled_(nonlinear_enabled) {
  if (!(dt > 0.0)) throw ConfigError("EtdRk4: dt must be positive");
  const int nx = grid.nx, ny = grid.ny;
  E_.resize(nx, ny);
  E2_.resize(nx, ny);
  Q_.resize(nx, ny);
  f1_.resize(nx, ny);
  f2_.resize(nx, ny);
  f3_.resize(nx, ny);
  constexpr int M = 32;
  Complex roots[M];
  for (int m = 0; m < M; ++m) roots[m] = std::polar(1.0, 2.0 * pi * (m + 0.5) / M);
  for (int j = 0; j < ny; ++j) {
    const double mu = grid.mu(j);
    for (int i = 0; i < nx; ++i) {
      const Complex z = dt * linear_symbol(eps, grid.xi(i), mu);
      E_(i, j) = std::exp(z);
      E2_(i, j) = std::exp(z / 2.0);
      Complex q{}, a{}, b{}, c{};
      for (int m = 0; m < M; ++m) {
        const Complex s = z + roots[m];
        const Complex es = std::exp(s), es2 = std::exp(s / 2.0);
        const Complex s2 = s * s, s3 = s2 * s;
        q += (es2 - 1.0) / s;
        a += (-4.0 - s + es * (4.0 - 3.0 * s + s2)) / s3;
        b += (2.0 + s + es * (-2.0 + s)) / s3;
        c += (-4.0 - 3.0 * s - s2 + es * (4.0 - s)) / s3;
      }
      Q_(i, j) = dt * q / double(M);
      f1_(i, j) = dt * a / double(M);
      f2_(i, j) = dt * b / double(M);
      f3_(i, j) = dt * c / double(M);
    }
  }
}

void EtdRk4::step(SolverState& state) const {
  if (nonlinear_enabled_) {
    step(state, [](const Spectrum& s, double) { return nonlinear_rhs(s); });
  } else {
    step(state, [](const Spectrum& s, double) {
      return Spectrum(s.grid, CArray::Zero(s.grid.nx, s.grid.ny), true);
    });
  }
}

void EtdRk4::step(SolverState& state, const NonlinearRhs& rhs) const {
  if (!(state.spectrum.grid == grid_)) throw ConfigError("EtdRk4: grid mismatch");
  const double t = state.t;
  const CArray& v = state.spectrum.coeffs;

  const Spectrum Nv = rhs(state.spectrum, t);
  Spectrum sa(grid_, E2_ * v + Q_ * Nv.coeffs, true);
  sa.coeffs.row(0).setZero();
  const Spectrum Na = rhs(sa, t + dt_ / 2.0);
  Spectrum sb(grid_, E2_ * v + Q_ * Na.coeffs, true);
  sb.coeffs.row(0).setZero();
  const Spectrum Nb = rhs(sb, t + dt_ / 2.0);
  Spectrum sc(grid_, E2_ * sa.coeffs + Q_ * (2.0 * Nb.coeffs - Nv.coeffs), true);
  sc.coeffs.row(0).setZero();
  const Spectrum Nc = rhs(sc, t + dt_);

  state.spectrum.coeffs =
      E_ * v + f1_ * Nv.coeffs + 2.0 * f2_ * (Na.coeffs + Nb.coeffs) + f3_ * Nc.coeffs;
  state.spectrum.project_zero_x_mean();
  state.t = t + dt_;
  state.steps += 1;
  check_finite(state.spectrum);
}

double default_dt(const Grid2D& g, double requested, double u0_linf) {
  return std::min(requested, 0.5 * g.dx() / std::max(1.0, u0_linf));
}

void check_finite(const Spectrum& s) {
  if (!s.coeffs.isFinite().all() || s.coeffs.abs().maxCoeff() > 1e12)
    throw NonFinite("solution coefficient non-finite or above 1e12 (blow-up guard)");
}

}  // namespace kp
