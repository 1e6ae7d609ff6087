#pragma once

#include "kp/config.hpp"
#include "kp/perturbation.hpp"

namespace kp {

/// Smooth random field: Hermitian spectrum with exp(-0.35(|kx|+|ky|))
/// mode decay and unit-normalized amplitude, deterministic in the seed.
RealField random_smooth_field(const Grid2D& g, std::uint64_t seed, double amplitude = 1.0);

/// Build the configured initial condition (not yet zero-mean projected).
RealField build_initial_condition(const RunConfig& cfg, const Grid2D& g);

enum class RunStatus { ok, truncated };

struct SimulateResult {
  RunStatus status = RunStatus::ok;
  SolverState state;           // final (or last finite) state
  std::vector<std::string> csv_rows;
  std::string csv_header;
  double initial_mass = 0.0;
  double initial_energy = 0.0;
};

/// Run the configured evolution; when out_dir is nonempty, write
/// diagnostics.csv, manifest.cfg and KPF1 snapshots there.
SimulateResult simulate(const RunConfig& cfg, const std::string& out_dir);

struct PerturbResult {
  RunStatus status = RunStatus::ok;
  PerturbationRun run;
};

PerturbResult perturb(const RunConfig& cfg, const std::string& out_dir);

}  // namespace kp
