#include "kp/runner.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "kp/decomposition.hpp"
#include "kp/probes.hpp"
#include "kp/snapshot.hpp"
#include "kp/version.hpp"

namespace kp {

RealField random_smooth_field(const Grid2D& g, std::uint64_t seed, double amplitude) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Spectrum s(g);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const double decay =
          std::exp(-0.35 * (std::abs(double(g.mode_x(i))) + std::abs(double(g.mode_y(j)))));
      s.coeffs(i, j) = Complex(gauss(rng), gauss(rng)) * decay;
    }
  // Hermitianize by a physical round trip, then normalize the amplitude.
  RealField f(g, from_spectrum_unchecked(s).samples);
  const double peak = linf_norm(f);
  if (peak > 0.0) f.samples *= amplitude / peak;
  return f;
}

RealField build_initial_condition(const RunConfig& cfg, const Grid2D& g) {
  const std::string& kind = cfg.ic_kind;
  if (kind == "gaussian") {
    return RealField::sample(g, [&](double x, double y) {
      const double yc = y - g.Ly / 2.0;
      return cfg.ic_amplitude *
             std::exp(-(x * x + yc * yc) / (2.0 * cfg.ic_sigma * cfg.ic_sigma));
    });
  }
  if (kind == "cos_mode") {
    const double kx = 2.0 * pi * cfg.ic_kx / g.Lx;
    const double ky = 2.0 * pi * cfg.ic_ky / g.Ly;
    return RealField::sample(
        g, [&](double x, double y) { return cfg.ic_amplitude * std::cos(kx * x + ky * y); });
  }
  if (kind == "soliton") return line_soliton(cfg.ic_c, g, 1.0);
  if (kind == "soliton_exact") return line_soliton(cfg.ic_c, g, kLineSolitonExactScale);
  if (kind == "zaitsev") return zaitsev(cfg.ic_alpha, cfg.ic_delta, g).field;
  if (kind == "random") return random_smooth_field(g, cfg.seed, cfg.ic_amplitude);
  if (kind == "freq_bump") {
    RealField f = frequency_bump_field(g, cfg.ic_xi_lo, cfg.ic_xi_hi, cfg.ic_mu_hi);
    const double peak = linf_norm(f);
    if (peak > 0.0) f.samples *= cfg.ic_amplitude / peak;
    return f;
  }
  if (kind == "snapshot") {
    Snapshot s = read_snapshot(cfg.ic_path);
    if (!(s.field.grid == g))
      throw ConfigError("snapshot grid does not match the configured grid");
    return s.field;
  }
  throw ConfigError("unknown ic.kind '" + kind + "'");
}

namespace {

std::string diag_header(const RunConfig& cfg) {
  std::string h = "step,t,dt,mass,energy,l2,linf";
  for (const auto& [s1, s2] : cfg.hs_norms)
    h += ",hs_" + format_g17(s1) + "_" + format_g17(s2);
  for (double s : cfg.es_norms) h += ",es_" + format_g17(s);
  return h;
}

std::string diag_row(const RunConfig& cfg, const SolverState& st) {
  RealField u = from_spectrum_unchecked(st.spectrum);
  ConservedQuantities q = conserved_quantities(u, st.eps);
  std::string row = std::to_string(st.steps) + "," + format_g17(st.t) + "," +
                    format_g17(st.dt) + "," + format_g17(q.mass) + "," + format_g17(q.energy) +
                    "," + format_g17(q.l2) + "," + format_g17(q.linf);
  for (const auto& [s1, s2] : cfg.hs_norms)
    row += "," + format_g17(anisotropic_norm(st.spectrum, s1, s2));
  for (double s : cfg.es_norms) row += "," + format_g17(es_norm(st.spectrum, s));
  return row;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  os << text;
}

double spectral_mass(const Spectrum& s) { return s.grid.Lx * s.grid.Ly * s.coeffs.abs2().sum(); }

std::map<std::string, std::string> base_notes() {
  return {{"build", kVersion},
          {"soliton_exact_amplitude_scale", format_g17(kLineSolitonExactScale)},
          {"zaitsev_convention",
           "tau=cosh(aX)-m*cos(dy); u=12 dXX log tau; m^2=(d^2-3a^4)/d^2; frame=a^2+d^2/a^2"}};
}

}  // namespace

SimulateResult simulate(const RunConfig& cfg, const std::string& out_dir) {
  const Grid2D g(cfg.nx, cfg.ny, cfg.Lx, cfg.Ly);
  RealField u0 = build_initial_condition(cfg, g);
  Spectrum s0 = to_spectrum(u0);
  s0.project_zero_x_mean();

  double dt = default_dt(g, cfg.dt, linf_norm(u0));
  // Step count per output interval; dt adjusted to land on the interval.
  long per = std::lround(std::ceil(cfg.output_interval / dt - 1e-12));
  if (per < 1) per = 1;
  dt = cfg.output_interval / double(per);
  const long intervals = std::lround(cfg.T / cfg.output_interval);

  SimulateResult res;
  res.state = SolverState{0.0, std::move(s0), dt, 0, cfg.eps()};
  res.csv_header = diag_header(cfg);

  const bool to_disk = !out_dir.empty();
  if (to_disk) {
    std::filesystem::create_directories(out_dir);
    auto notes = base_notes();
    notes["projected_x_mean_linf"] =
        format_g17(linf_norm(RealField(g, u0.samples - from_spectrum_unchecked(res.state.spectrum).samples)));
    write_text(out_dir + "/manifest.cfg", manifest_text(cfg, notes));
  }

  auto snap = [&](long interval_idx) {
    if (!to_disk || !cfg.snapshots) return;
    char name[32];
    std::snprintf(name, sizeof name, "snap_%06ld.kpf", interval_idx);
    write_snapshot(out_dir + "/" + std::string(name),
                   from_spectrum_unchecked(res.state.spectrum), res.state.t);
  };

  {
    RealField u = from_spectrum_unchecked(res.state.spectrum);
    res.initial_mass = conserved_mass(u);
    res.initial_energy = conserved_energy(u, cfg.eps());
  }
  res.csv_rows.push_back(diag_row(cfg, res.state));
  snap(0);

  EtdRk4 stepper(g, cfg.eps(), dt);
  try {
    for (long k = 0; k < intervals; ++k) {
      for (long s = 0; s < per; ++s) {
        if (cfg.drift_guard) {
          const double m_before = spectral_mass(res.state.spectrum);
          SolverState trial = res.state;
          trial.dt = stepper.dt();
          stepper.step(trial);
          const double m_after = spectral_mass(trial.spectrum);
          if (m_before > 0.0 && std::abs(m_after - m_before) / m_before > 1e-9) {
            // Halve the step and redo from the same state.
            dt = stepper.dt() / 2.0;
            stepper = EtdRk4(g, cfg.eps(), dt);
            per *= 2;
            s = s * 2;  // completed half-steps so far, redo included below
            trial = res.state;
            trial.dt = dt;
            stepper.step(trial);
          }
          res.state = std::move(trial);
        } else {
          res.state.dt = stepper.dt();
          stepper.step(res.state);
        }
      }
      res.csv_rows.push_back(diag_row(cfg, res.state));
      snap(k + 1);
    }
  } catch (const NonFinite&) {
    res.status = RunStatus::truncated;
  }

  if (to_disk) {
    std::string csv = res.csv_header + "\n";
    for (const auto& r : res.csv_rows) csv += r + "\n";
    write_text(out_dir + "/diagnostics.csv", csv);
    if (res.status == RunStatus::truncated)
      write_snapshot(out_dir + "/last_finite.kpf", from_spectrum_unchecked(res.state.spectrum),
                     res.state.t);
  }
  return res;
}

PerturbResult perturb(const RunConfig& cfg, const std::string& out_dir) {
  const Grid2D g(cfg.nx, cfg.ny, cfg.Lx, cfg.Ly);
  Background bg;
  if (cfg.bg_kind == "none") {
    bg = Background::zero(g);
  } else if (cfg.bg_kind == "soliton") {
    bg = Background::traveling_soliton(g, cfg.bg_c, cfg.bg_amplitude_scale);
  } else if (cfg.bg_kind == "static_snapshot") {
    Snapshot s = read_snapshot(cfg.bg_path);
    if (!(s.field.grid == g)) throw ConfigError("background snapshot grid mismatch");
    bg = Background::static_field(s.field, cfg.eps());
  } else {
    throw ConfigError("unknown perturbation.background '" + cfg.bg_kind + "'");
  }

  RealField v0 = build_initial_condition(cfg, g);
  PerturbationOptions opt;
  opt.eps = cfg.eps();
  opt.dt = default_dt(g, cfg.dt, linf_norm(v0));
  opt.T = cfg.T;
  opt.hs_order = cfg.hs_norms.front().first;
  opt.samples = int(std::lround(cfg.T / cfg.output_interval));
  opt.coupling = cfg.coupling == "half" ? CouplingVariant::half : CouplingVariant::full;

  PerturbResult res;
  try {
    res.run = simulate_perturbation(v0, bg, opt);
  } catch (const NonFinite&) {
    res.status = RunStatus::truncated;
  }

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    auto notes = base_notes();
    notes["coupling_variant"] = cfg.coupling;
    write_text(out_dir + "/manifest.cfg", manifest_text(cfg, notes));
    std::string csv = "t,v_hs,v_es1,u_mass,g_norm\n";
    for (const auto& r : res.run.samples)
      csv += format_g17(r.t) + "," + format_g17(r.v_hs) + "," + format_g17(r.v_es1) + "," +
             format_g17(r.u_mass) + "," + format_g17(r.g_norm) + "\n";
    write_text(out_dir + "/diagnostics.csv", csv);
  }
  return res;
}

}  // namespace kp
