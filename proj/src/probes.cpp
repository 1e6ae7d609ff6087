#include "kp/probes.hpp"

#include <cmath>

#include "kp/decomposition.hpp"

namespace kp {

double beta_exponent(double q, double r) { return 3.0 * (0.5 - 1.0 / r - 1.0 / q); }

bool is_admissible(double q, double r) {
  if (q < 2.0 || r < 2.0) return false;
  const double iq = 1.0 / q, ir = 1.0 / r;
  if (!(0.5 * (0.5 - ir) <= iq + 1e-15 && iq <= 0.5 - ir + 1e-15)) return false;
  if (std::isinf(r) && (q == 2.0 || q == 4.0)) return false;
  return true;
}

AdmissiblePair::AdmissiblePair(double q_, double r_) : q(q_), r(r_), beta(beta_exponent(q_, r_)) {
  if (!is_admissible(q, r))
    throw NotAdmissible("pair (q, r) = (" + std::to_string(q) + ", " + std::to_string(r) +
                        ") is not admissible");
}

namespace {

double space_norm(const RealField& u, double r) {
  if (std::isinf(r)) return linf_norm(u);
  const double dA = u.grid.cell_area();
  return std::pow(dA * u.samples.abs().pow(r).sum(), 1.0 / r);
}

}  // namespace

double strichartz_ratio(const RealField& phi, const AdmissiblePair& pair, double T, int eps,
                        int nt) {
  const double l2 = l2_norm(phi);
  if (l2 == 0.0) throw ZeroField("strichartz_ratio: zero data");
  Spectrum s = to_spectrum(phi);
  if (pair.beta != 0.0) s = apply_x_power(s, -pair.beta, /*bessel=*/false);

  const double span = std::abs(T);
  const double sign = T < 0.0 ? -1.0 : 1.0;
  if (std::isinf(pair.q)) {
    double worst = 0.0;
    for (int k = 0; k < nt; ++k) {
      const double t = sign * (k + 0.5) * span / nt;
      worst = std::max(worst, space_norm(from_spectrum_unchecked(linear_propagate(s, eps, t)),
                                         pair.r));
    }
    return worst / l2;
  }
  double acc = 0.0;
  for (int k = 0; k < nt; ++k) {
    const double t = sign * (k + 0.5) * span / nt;
    const double lr = space_norm(from_spectrum_unchecked(linear_propagate(s, eps, t)), pair.r);
    acc += std::pow(lr, pair.q) * (span / nt);
  }
  return std::pow(acc, 1.0 / pair.q) / l2;
}

DecayFit decay_probe(const RealField& phi, double eps_decay, const std::vector<double>& times,
                     int eps) {
  if (!(eps_decay >= 0.0 && eps_decay < 1.5))
    throw ConfigError("decay_probe: eps must lie in [0, 3/2)");
  const Grid2D& g = phi.grid;
  Spectrum s = to_spectrum(phi);
  s.project_zero_x_mean();

  // Recirculation window from the x-group speed over the active modes.
  const double peak = s.coeffs.abs().maxCoeff();
  if (peak == 0.0) throw ZeroField("decay_probe: zero data");
  double vmax = 0.0;
  for (int j = 0; j < g.ny; ++j) {
    const double mu = g.mu(j);
    for (int i = 1; i < g.nx; ++i) {
      if (std::abs(s.coeffs(i, j)) <= 1e-8 * peak) continue;
      const double xi = g.xi(i);
      vmax = std::max(vmax, std::abs(3.0 * xi * xi - double(eps) * mu * mu / (xi * xi)));
    }
  }
  DecayFit fit;
  fit.window = vmax > 0.0 ? g.Lx / (3.0 * vmax) : std::numeric_limits<double>::infinity();
  for (double t : times)
    if (!(t > 0.0) || t > fit.window)
      throw RecirculationWindowExceeded("decay_probe: t = " + std::to_string(t) +
                                        " outside (0, " + std::to_string(fit.window) + "]");

  Spectrum weighted = eps_decay > 0.0 ? apply_x_power(s, -eps_decay, false) : s;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double t : times) {
    const RealField u = from_spectrum_unchecked(linear_propagate(weighted, eps, t));
    const double lx = std::log(t), ly = std::log(linf_norm(u));
    fit.t.push_back(t);
    fit.linf.push_back(linf_norm(u));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = double(times.size());
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return fit;
}

ResonancePair resonance_kp2(double xi, double xi1, double mu, double mu1) {
  const double xi2 = xi - xi1;
  if (xi == 0.0 || xi1 == 0.0 || xi2 == 0.0)
    throw DegenerateFrequencies("resonance_kp2: xi, xi1 and xi - xi1 must be nonzero");
  const double mu2 = mu - mu1;
  ResonancePair out{};
  out.lhs = sigma(+1, 0.0, xi1, mu1) + sigma(+1, 0.0, xi2, mu2) - sigma(+1, 0.0, xi, mu);
  const double prod = xi * xi1 * xi2;
  const double cross = mu * xi1 - mu1 * xi;
  out.rhs = prod * (3.0 + cross * cross / (prod * prod));
  return out;
}

RealField frequency_bump_field(const Grid2D& g, double xi_lo, double xi_hi, double mu_hi,
                               double edge) {
  auto step = [](double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t), b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
  };
  Spectrum s(g);
  for (int j = 0; j < g.ny; ++j) {
    const double mu = g.mu(j);
    const double wy = step((mu_hi - std::abs(mu)) / edge);
    if (wy == 0.0) continue;
    for (int i = 0; i < g.nx; ++i) {
      const double xi = g.xi(i);
      const double w = step((std::abs(xi) - xi_lo) / edge) * step((xi_hi - std::abs(xi)) / edge);
      s.coeffs(i, j) = Complex(w * wy, 0.0);
    }
  }
  s.project_zero_x_mean();
  return from_spectrum_unchecked(s);
}

}  // namespace kp
