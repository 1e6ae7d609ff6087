#pragma once

#include <functional>
#include <vector>

#include "kp/spectral.hpp"

namespace kp {

/// Radial smooth cutoff: 1 on |r| <= 5/4, 0 on |r| >= 8/5, and the
/// exp-based smooth step in between.  Infinitely differentiable.
double eta_bump(double r);

/// phi(r) = eta(r/2) - eta(r); band weight phi_N(xi) = phi(xi/N).
double phi_band(double xi, double N);

enum class BandKind { exact, low_pass, high_pass };

struct DyadicBand {
  double N = 1.0;
  BandKind kind = BandKind::exact;
};

/// Dyadic scales representable on a grid: powers of two from the smallest
/// >= xi_min/2 up to the largest <= 2*xi_max.  The lowest exact band is
/// closed downward (it absorbs every scale below it), so the exact bands
/// form a partition of unity on the nonzero lattice.
std::vector<double> band_scales(const Grid2D& g);

/// Multiplier weight of a band at x-frequency xi on grid g.
double band_weight(const Grid2D& g, const DyadicBand& band, double xi);

/// Littlewood-Paley projection: multiply the x-frequency spectrum by the
/// band weight (y untouched).  Throws BandOutOfRange for unrepresentable N.
RealField lp_project(const RealField& f, const DyadicBand& band);
Spectrum lp_project(const Spectrum& s, const DyadicBand& band);

/// Per-band L2 norms (quadrature convention), index-aligned with band_scales.
std::vector<double> band_l2_norms(const Spectrum& s);

/// Anisotropic Sobolev norm: weights (1+xi^2)^{s1/2} (1+mu^2)^{s2/2}.
double anisotropic_norm(const RealField& f, double s1, double s2);
double anisotropic_norm(const Spectrum& s, double s1, double s2);

/// Energy-space norm: sqrt(|f|_{H^{s,0}}^2 + |dx^{-1} f_y|_{H^{s-1,0}}^2).
/// Requires zero x-mean.
double es_norm(const RealField& f, double s);
double es_norm(const Spectrum& s, double order);

/// l1-over-bands difference norm with weights <N>^{s-1} <1/N>^{3/4}.
double hbar_norm(const RealField& f, double s);
double hbar_norm(const Spectrum& s, double order);

/// Acceptable dyadic frequency weight: omega_N = 1 for N < 1 and
/// omega_N <= omega_{2N} <= delta * omega_N for N >= 1.
struct Envelope {
  double delta = 2.0;
  std::vector<double> scales;   // dyadic N >= 1, ascending
  std::vector<double> weights;  // omega_N for the scales above

  double weight(double N) const;
  /// Exact acceptability check (the defining inequalities, no tolerance).
  bool acceptable() const;
};

/// KoTz-style envelope adapted to f: slowly-varying cover of the band mass
/// profile, normalized to 1 at N = 1, monotone nondecreasing, growing at
/// the exact rate delta beyond the band support.  Throws ZeroField.
Envelope build_envelope(const RealField& f, double s, double delta);

/// Envelope-weighted Sobolev norm: sqrt(sum omega_N^2 <N>^{2s} |P_N f|^2).
double weighted_norm(const RealField& f, double s, const Envelope& env);
double weighted_norm(const Spectrum& sp, double s, const Envelope& env);

/// Bilinear Fourier multiplier acting per y-row in x:
///   F_x(Lambda_a(f,g))(xi) = sum_{xi1+xi2=xi} a(xi1,xi2) f^(xi1) g^(xi2).
/// Frequencies add modulo the lattice (circular convolution), so a == 1
/// reproduces the pointwise product exactly.  Throws UnboundedSymbol if
/// |a| exceeds sup_cap anywhere on the lattice product.
using BilinearSymbol = std::function<Complex(double, double)>;
RealField bilinear_multiplier(const BilinearSymbol& a, const RealField& f, const RealField& g,
                              double sup_cap = 1e6);

/// Commutator symbol
///   a1(xi1,xi2) = N3^{-1} phi_{N3}(xi1) phit_N(xi2)
///                 [phi_N(xi1+xi2)(xi1+xi2) - phi_N(xi2) xi2]
/// with phit_N the fattened band.  Requires N3 <= N/4 (BandsTooClose).
BilinearSymbol commutator_symbol_a1(double N, double N3);

}  // namespace kp
