#include "kp/perturbation.hpp"

#include <cmath>
#include <limits>
#include <memory>

#include "kp/decomposition.hpp"

namespace kp {

Background Background::zero(const Grid2D& g) {
  Background bg;
  bg.psi = [g](double) { return RealField(g); };
  bg.psi_t = [g](double) { return RealField(g); };
  bg.g = [g](double) { return RealField(g); };
  return bg;
}

namespace {

Spectrum translate_x(const Spectrum& s, double shift) {
  Spectrum out(s.grid, s.coeffs, s.zero_x_mean);
  for (int i = 0; i < s.grid.nx; ++i)
    out.coeffs.row(i) *= std::polar(1.0, -s.grid.xi(i) * shift);
  return out;
}

}  // namespace

Background Background::traveling_soliton(const Grid2D& g, double c, double amplitude_scale) {
  Background bg;
  bg.level = HypothesisLevel::H2;
  bg.frame_speed = c;
  auto profile = [g, c, amplitude_scale](double shift) {
    RealField f(g);
    for (int i = 0; i < g.nx; ++i) {
      // wrap x - shift into the periodic box
      double X = g.x(i) - shift;
      X -= g.Lx * std::floor((X + g.Lx / 2.0) / g.Lx);
      const double sech = 1.0 / std::cosh(std::sqrt(c) * X / 2.0);
      f.samples.row(i).setConstant(amplitude_scale * 1.5 * c * sech * sech);
    }
    return f;
  };
  bg.psi = [profile, c](double t) { return profile(c * t); };
  bg.psi_t = [profile, c, g](double t) {
    // -c psi_x, computed spectrally from the resampled profile
    RealField p = profile(c * t);
    Spectrum s = dx(to_spectrum(p));
    s.coeffs *= -c;
    return from_spectrum_unchecked(s);
  };
  // The forcing residual travels with the profile: compute its spectrum
  // once and translate.
  RealField psi0 = profile(0.0);
  Spectrum st = dx(to_spectrum(psi0));
  st.coeffs *= -c;
  Spectrum g0 = to_spectrum(background_forcing(psi0, from_spectrum_unchecked(st), /*eps=*/-1));
  bg.g = [g0, c](double t) { return from_spectrum_unchecked(translate_x(g0, c * t)); };
  return bg;
}

Background Background::static_field(const RealField& psi0, int eps) {
  Background bg;
  RealField zero(psi0.grid);
  RealField g0 = background_forcing(psi0, zero, eps);
  bg.psi = [psi0](double) { return psi0; };
  bg.psi_t = [zero](double) { return zero; };
  bg.g = [g0](double) { return g0; };
  return bg;
}

namespace {

void apply_dealias(CArray& c, const Grid2D& g) {
  for (int i = 0; i < g.nx; ++i)
    if (std::abs(g.mode_x(i)) > g.nx / 3) c.row(i).setZero();
  for (int j = 0; j < g.ny; ++j)
    if (std::abs(g.mode_y(j)) > g.ny / 3) c.col(j).setZero();
}

RealField forcing_at(const Background& bg, double t, int eps) {
  if (bg.g) return bg.g(t);
  return background_forcing(bg.psi(t), bg.psi_t(t), eps);
}

}  // namespace

Spectrum perturbation_rhs(const Spectrum& v, const Background& bg, double t, int eps,
                          CouplingVariant coupling) {
  const Grid2D& g = v.grid;
  if (!has_zero_x_mean(v)) throw NotZeroXMean("perturbation_rhs: v must have zero x-mean");

  Spectrum cut(g, v.coeffs, true);
  apply_dealias(cut.coeffs, g);
  RealField vu = from_spectrum_unchecked(cut);

  // -1/2 d_x(v^2), matching the plain evolver's arithmetic exactly.
  Spectrum prod = to_spectrum(RealField(g, vu.samples.square()));
  apply_dealias(prod.coeffs, g);
  Spectrum out = dx(prod);
  out.coeffs *= -0.5;

  if (bg.psi) {
    RealField psi = bg.psi(t);
    Spectrum psis = to_spectrum(psi);
    apply_dealias(psis.coeffs, g);
    RealField psiu = from_spectrum_unchecked(psis);
    Spectrum vpsi = to_spectrum(RealField(g, vu.samples * psiu.samples));
    apply_dealias(vpsi.coeffs, g);
    const double coeff = coupling == CouplingVariant::full ? 1.0 : 0.5;
    out.coeffs -= coeff * dx(vpsi).coeffs;
  }
  if (bg.g || bg.psi_t) {
    Spectrum gs = to_spectrum(forcing_at(bg, t, eps));
    gs.project_zero_x_mean();
    out.coeffs -= gs.coeffs;
  }
  out.zero_x_mean = true;
  out.coeffs.row(0).setZero();
  return out;
}

PerturbationRun simulate_perturbation(const RealField& v0, const Background& bg,
                                      const PerturbationOptions& opt) {
  const Grid2D& g = v0.grid;
  if (bg.level == HypothesisLevel::H2) {
    // H2 requires the forcing to live in the energy space at the start.
    RealField g0 = forcing_at(bg, 0.0, opt.eps);
    Spectrum gs = to_spectrum(g0);
    gs.project_zero_x_mean();
    const double es = es_norm(gs, 1.0);
    if (!std::isfinite(es)) throw NonFinite("background forcing has no finite E^s norm");
  }

  Spectrum s0 = to_spectrum(v0);
  s0.project_zero_x_mean();
  SolverState state{0.0, std::move(s0), opt.dt, 0, opt.eps};

  long nsteps = std::lround(opt.T / opt.dt);
  if (nsteps < 1) nsteps = 1;
  const EtdRk4 stepper(g, opt.eps, opt.T / double(nsteps));
  const long stride = std::max(1L, nsteps / std::max(1, opt.samples));

  // Stage times repeat within and across steps; memoize the providers.
  auto cached = [](std::function<RealField(double)> fn) -> std::function<RealField(double)> {
    if (!fn) return fn;
    struct Memo {
      double t = std::numeric_limits<double>::quiet_NaN();
      RealField value;
    };
    auto memo = std::make_shared<Memo>();
    return [fn, memo](double t) {
      if (!(memo->t == t)) {
        memo->value = fn(t);
        memo->t = t;
      }
      return memo->value;
    };
  };
  Background bgc = bg;
  bgc.psi = cached(bg.psi);
  bgc.psi_t = cached(bg.psi_t);
  bgc.g = cached(bg.g);
  const Background& bg_run = bgc;

  NonlinearRhs rhs;
  if (opt.linearized) {
    Background lin = bg_run;
    rhs = [lin, &opt](const Spectrum& v, double t) {
      // linearized about psi: drop the v v_x self-interaction
      Spectrum full = perturbation_rhs(v, lin, t, opt.eps, opt.coupling);
      Spectrum self = nonlinear_rhs(v);
      full.coeffs -= self.coeffs;
      return full;
    };
  } else {
    rhs = [bg_run, &opt](const Spectrum& v, double t) {
      return perturbation_rhs(v, bg_run, t, opt.eps, opt.coupling);
    };
  }

  PerturbationRun run;
  auto record = [&](const SolverState& st) {
    PerturbationSample row;
    row.t = st.t;
    Spectrum sp = st.spectrum;
    row.v_hs = anisotropic_norm(sp, opt.hs_order, 0.0);
    row.v_es1 = es_norm(sp, 1.0);
    RealField v = from_spectrum_unchecked(sp);
    if (bg.psi) {
      RealField u(v.grid, bg.psi(st.t).samples + v.samples);
      row.u_mass = conserved_mass(u);
    }
    row.g_norm = l2_norm(forcing_at(bg, st.t, opt.eps));
    run.samples.push_back(row);
  };

  record(state);
  for (long k = 0; k < nsteps; ++k) {
    stepper.step(state, rhs);
    if (k + 1 == nsteps || (k + 1) % stride == 0) record(state);
  }
  run.state = std::move(state);
  return run;
}

DifferenceSeries difference_experiment(const RealField& u01, const RealField& u02, int eps,
                                       double dt, double T, double s, int samples) {
  const Grid2D& g = u01.grid;
  Spectrum s1 = to_spectrum(u01);
  s1.project_zero_x_mean();
  Spectrum s2 = to_spectrum(u02);
  s2.project_zero_x_mean();

  Spectrum w0(g, s1.coeffs - s2.coeffs, true);
  const double denom = hbar_norm(w0, s);
  if (denom == 0.0) throw IdenticalData("difference_experiment: identical initial data");

  long nsteps = std::lround(T / dt);
  if (nsteps < 1) nsteps = 1;
  const EtdRk4 stepper(g, eps, T / double(nsteps));
  const long stride = std::max(1L, nsteps / std::max(1, samples));

  SolverState a{0.0, std::move(s1), dt, 0, eps};
  SolverState b{0.0, std::move(s2), dt, 0, eps};
  DifferenceSeries out;
  out.t.push_back(0.0);
  out.ratio.push_back(1.0);
  for (long k = 0; k < nsteps; ++k) {
    stepper.step(a);
    stepper.step(b);
    if (k + 1 == nsteps || (k + 1) % stride == 0) {
      Spectrum w(g, a.spectrum.coeffs - b.spectrum.coeffs, true);
      out.t.push_back(a.t);
      out.ratio.push_back(hbar_norm(w, s) / denom);
    }
  }
  return out;
}

}  // namespace kp
