#include "kp/decomposition.hpp"

#include <algorithm>
#include <cmath>

namespace kp {

double eta_bump(double r) {
  r = std::abs(r);
  constexpr double lo = 1.25, hi = 1.6;
  if (r <= lo) return 1.0;
  if (r >= hi) return 0.0;
  const double t = (hi - r) / (hi - lo);
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

double phi_band(double xi, double N) { return eta_bump(xi / (2.0 * N)) - eta_bump(xi / N); }

namespace {

int scale_exponent(double N) {
  const double j = std::log2(N);
  const double jr = std::round(j);
  if (std::abs(j - jr) > 1e-9) return INT32_MIN;
  return int(jr);
}

struct BandRange {
  int jmin, jmax;  // N = 2^j
};

BandRange band_range(const Grid2D& g) {
  const double nlo = g.xi_min() / 2.0;
  const double nhi = 2.0 * g.xi_max();
  int jmin = int(std::ceil(std::log2(nlo) - 1e-12));
  int jmax = int(std::floor(std::log2(nhi) + 1e-12));
  return {jmin, jmax};
}

}  // namespace

std::vector<double> band_scales(const Grid2D& g) {
  const auto [jmin, jmax] = band_range(g);
  std::vector<double> out;
  for (int j = jmin; j <= jmax; ++j) out.push_back(std::exp2(double(j)));
  return out;
}

double band_weight(const Grid2D& g, const DyadicBand& band, double xi) {
  const auto [jmin, jmax] = band_range(g);
  const int j = scale_exponent(band.N);
  if (j < jmin || j > jmax)
    throw BandOutOfRange("band N = " + std::to_string(band.N) + " not representable on grid");
  switch (band.kind) {
    case BandKind::exact:
      if (xi == 0.0) return 0.0;
      if (j == jmin) return eta_bump(xi / (2.0 * band.N));  // closed downward
      return phi_band(xi, band.N);
    case BandKind::low_pass:
      if (xi == 0.0) return 0.0;
      return eta_bump(xi / (2.0 * band.N));
    case BandKind::high_pass:
      if (xi == 0.0) return 0.0;
      if (j == jmin) return 1.0;
      return 1.0 - eta_bump(xi / band.N);
  }
  return 0.0;
}

Spectrum lp_project(const Spectrum& s, const DyadicBand& band) {
  Spectrum out(s.grid, s.coeffs, s.zero_x_mean);
  for (int i = 0; i < s.grid.nx; ++i)
    out.coeffs.row(i) *= band_weight(s.grid, band, s.grid.xi(i));
  out.coeffs.row(0).setZero();
  out.zero_x_mean = true;
  return out;
}

RealField lp_project(const RealField& f, const DyadicBand& band) {
  return from_spectrum_unchecked(lp_project(to_spectrum(f), band));
}

std::vector<double> band_l2_norms(const Spectrum& s) {
  const Grid2D& g = s.grid;
  const auto scales = band_scales(g);
  // Row masses: sum over mu of |c|^2 per xi row, with the area factor.
  std::vector<double> row_mass(size_t(g.nx));
  for (int i = 0; i < g.nx; ++i) row_mass[size_t(i)] = g.Lx * g.Ly * s.coeffs.row(i).abs2().sum();
  std::vector<double> out(scales.size(), 0.0);
  for (size_t b = 0; b < scales.size(); ++b) {
    const DyadicBand band{scales[b], BandKind::exact};
    double acc = 0.0;
    for (int i = 1; i < g.nx; ++i) {
      const double w = band_weight(g, band, g.xi(i));
      acc += w * w * row_mass[size_t(i)];
    }
    out[b] = std::sqrt(acc);
  }
  return out;
}

double anisotropic_norm(const Spectrum& s, double s1, double s2) {
  const Grid2D& g = s.grid;
  double acc = 0.0;
  for (int j = 0; j < g.ny; ++j) {
    const double mu = g.mu(j);
    const double wy = std::pow(1.0 + mu * mu, s2);
    for (int i = 0; i < g.nx; ++i) {
      const double xi = g.xi(i);
      acc += std::pow(1.0 + xi * xi, s1) * wy * std::norm(s.coeffs(i, j));
    }
  }
  return std::sqrt(g.Lx * g.Ly * acc);
}

double anisotropic_norm(const RealField& f, double s1, double s2) {
  return anisotropic_norm(to_spectrum(f), s1, s2);
}

double es_norm(const Spectrum& s, double order) {
  if (!has_zero_x_mean(s)) throw NotZeroXMean("es_norm: field has nonzero x-mean");
  const double part1 = anisotropic_norm(s, order, 0.0);
  const double part2 = anisotropic_norm(dx_inverse(dy(s)), order - 1.0, 0.0);
  return std::sqrt(part1 * part1 + part2 * part2);
}

double es_norm(const RealField& f, double s) { return es_norm(to_spectrum(f), s); }

double hbar_norm(const Spectrum& s, double order) {
  const auto scales = band_scales(s.grid);
  const auto norms = band_l2_norms(s);
  double acc = 0.0;
  for (size_t b = 0; b < scales.size(); ++b) {
    const double N = scales[b];
    const double w = std::pow(1.0 + N * N, (order - 1.0) / 2.0) *
                     std::pow(1.0 + 1.0 / (N * N), 3.0 / 8.0);
    acc += w * norms[b];
  }
  return acc;
}

double hbar_norm(const RealField& f, double s) { return hbar_norm(to_spectrum(f), s); }

double Envelope::weight(double N) const {
  if (N < 1.0) return 1.0;
  for (size_t i = 0; i < scales.size(); ++i)
    if (std::abs(scales[i] - N) <= 1e-9 * N) return weights[i];
  // Beyond the tabulated top: continue at the maximal admissible rate.
  double w = weights.empty() ? 1.0 : weights.back();
  double top = scales.empty() ? 1.0 : scales.back();
  while (top < N * (1.0 - 1e-9)) {
    top *= 2.0;
    w *= delta;
  }
  return w;
}

bool Envelope::acceptable() const {
  if (delta <= 1.0) return false;
  for (size_t i = 0; i + 1 < weights.size(); ++i) {
    if (!(weights[i] <= weights[i + 1])) return false;
    if (!(weights[i + 1] <= delta * weights[i])) return false;
  }
  return weights.empty() || weights.front() >= 1.0;
}

Envelope build_envelope(const RealField& f, double s, double delta) {
  if (delta <= 1.0) throw ConfigError("build_envelope: delta must exceed 1");
  const Spectrum sp = to_spectrum(f);
  const auto scales = band_scales(f.grid);
  const auto norms = band_l2_norms(sp);

  double total = 0.0;
  std::vector<double> mass(scales.size());
  for (size_t b = 0; b < scales.size(); ++b) {
    const double wN = std::pow(1.0 + scales[b] * scales[b], s / 2.0);
    mass[b] = wN * norms[b];
    total += mass[b] * mass[b];
  }
  total = std::sqrt(total);
  if (total == 0.0) throw ZeroField("build_envelope: zero field");

  // Slowly-varying cover of the normalized band profile.
  std::vector<double> cover(scales.size());
  for (size_t b = 0; b < scales.size(); ++b) {
    double c = 0.0;
    for (size_t m = 0; m < scales.size(); ++m) {
      const double dist = std::abs(std::log2(scales[b]) - std::log2(scales[m]));
      c = std::max(c, (mass[m] / total) * std::pow(delta, -dist));
    }
    cover[b] = std::max(c, 1e-300);
  }

  Envelope env;
  env.delta = delta;
  double prev = 0.0;
  bool first = true;
  double norm0 = 1.0;
  for (size_t b = 0; b < scales.size(); ++b) {
    if (scales[b] < 1.0) continue;
    const double j = std::log2(scales[b]);
    const double raw = std::min(std::pow(delta, j), 1.0 / cover[b]);
    if (first) {
      norm0 = raw;
      first = false;
    }
    double w = raw / norm0;
    if (!env.weights.empty()) {
      w = std::max(w, prev);             // monotone nondecreasing
      w = std::min(w, delta * prev);     // growth capped at delta
    }
    w = std::max(w, 1.0);
    env.scales.push_back(scales[b]);
    env.weights.push_back(w);
    prev = w;
  }
  return env;
}

double weighted_norm(const Spectrum& sp, double s, const Envelope& env) {
  const auto scales = band_scales(sp.grid);
  const auto norms = band_l2_norms(sp);
  double acc = 0.0;
  for (size_t b = 0; b < scales.size(); ++b) {
    const double N = scales[b];
    const double w = env.weight(N) * std::pow(1.0 + N * N, s / 2.0);
    acc += w * w * norms[b] * norms[b];
  }
  return std::sqrt(acc);
}

double weighted_norm(const RealField& f, double s, const Envelope& env) {
  return weighted_norm(to_spectrum(f), s, env);
}

RealField bilinear_multiplier(const BilinearSymbol& a, const RealField& f, const RealField& g,
                              double sup_cap) {
  const Grid2D& gr = f.grid;
  if (!(g.grid == gr)) throw ConfigError("bilinear_multiplier: grid mismatch");
  const int nx = gr.nx, ny = gr.ny;

  // Lattice symbol table; checked against the cap.
  Eigen::MatrixXcd sym(nx, nx);
  double sup = 0.0;
  for (int k1 = 0; k1 < nx; ++k1)
    for (int k2 = 0; k2 < nx; ++k2) {
      const Complex v = a(gr.xi(k1), gr.xi(k2));
      sup = std::max(sup, std::abs(v));
      sym(k1, k2) = v;
    }
  if (sup > sup_cap)
    throw UnboundedSymbol("bilinear_multiplier: |a| reaches " + std::to_string(sup));

  RealField out(gr);
  parallel_for(ny, [&](int j) {
    Eigen::ArrayXcd fh(nx), gh(nx);
    for (int i = 0; i < nx; ++i) {
      fh(i) = f.samples(i, j);
      gh(i) = g.samples(i, j);
    }
    dft1_forward(fh);
    dft1_forward(gh);
    fh /= double(nx);
    gh /= double(nx);
    Eigen::ArrayXcd conv = Eigen::ArrayXcd::Zero(nx);
    for (int k1 = 0; k1 < nx; ++k1) {
      if (fh(k1) == Complex(0.0, 0.0)) continue;
      for (int k2 = 0; k2 < nx; ++k2) {
        const int k = (k1 + k2) & (nx - 1);
        conv(k) += sym(k1, k2) * fh(k1) * gh(k2);
      }
    }
    dft1_inverse(conv);
    for (int i = 0; i < nx; ++i) out.samples(i, j) = conv(i).real();
  });
  return out;
}

BilinearSymbol commutator_symbol_a1(double N, double N3) {
  if (N3 > N / 4.0 + 1e-12)
    throw BandsTooClose("commutator_symbol_a1: requires N3 <= N/4");
  return [N, N3](double xi1, double xi2) -> Complex {
    const double fat = phi_band(xi2, N / 2.0) + phi_band(xi2, N) + phi_band(xi2, 2.0 * N);
    const double bracket = phi_band(xi1 + xi2, N) * (xi1 + xi2) - phi_band(xi2, N) * xi2;
    return Complex(phi_band(xi1, N3) / N3 * fat * bracket, 0.0);
  };
}

}  // namespace kp
