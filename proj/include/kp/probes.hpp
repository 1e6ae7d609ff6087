#pragma once

#include <vector>

#include "kp/spectral.hpp"

namespace kp {

/// Strichartz loss exponent beta(q, r) = 3(1/2 - 1/r - 1/q).
double beta_exponent(double q, double r);

/// Admissibility: 2 <= q, r <= inf, (1/2)(1/2 - 1/r) <= 1/q <= 1/2 - 1/r,
/// and (q, r) not in {(2, inf), (4, inf)}.
bool is_admissible(double q, double r);

struct AdmissiblePair {
  double q;
  double r;
  double beta;  // beta_exponent(q, r)

  /// Throws NotAdmissible unless is_admissible(q, r).
  AdmissiblePair(double q_, double r_);
};

/// Mixed-norm quadrature of the free evolution:
///   | D_x^{-beta} U_eps(t) phi |_{L^q_T L^r_xy} / |phi|_{L^2},
/// with L^q in time by uniform sampling (nt midpoints; power mean) and
/// r = inf realized as the grid max.  T may be negative (time-reversed
/// propagation over [T, 0]).  Throws ZeroField on zero data and
/// NotZeroXMean via the D_x^{-beta} weight when applicable.
double strichartz_ratio(const RealField& phi, const AdmissiblePair& pair, double T, int eps,
                        int nt);

/// Least-squares slope of log |D_x^{-e} U(t) phi|_Linf against log t.
/// Requires every t below the recirculation window Lx / (3 vmax), where
/// vmax is the largest |d omega/d xi| over modes carrying at least 1e-8
/// of the peak spectral amplitude.  Throws RecirculationWindowExceeded.
struct DecayFit {
  double slope = 0.0;
  double window = 0.0;
  std::vector<double> t;
  std::vector<double> linf;
};
DecayFit decay_probe(const RealField& phi, double eps_decay, const std::vector<double>& times,
                     int eps);

/// KP-II resonance identity: lhs = sigma_+(t1,x1,m1) + sigma_+(t-t1,...) -
/// sigma_+(t,x,m) evaluated at tau = tau1 = 0 (the tau-dependence cancels);
/// rhs = x x1 (x-x1) (3 + (m x1 - m1 x)^2 / (x x1 (x-x1))^2).
/// Throws DegenerateFrequencies when xi, xi1, or xi-xi1 vanishes.
struct ResonancePair {
  double lhs;
  double rhs;
};
ResonancePair resonance_kp2(double xi, double xi1, double mu, double mu1);

/// Hermitian field whose spectrum is a smooth compactly supported bump:
/// xi in [xi_lo, xi_hi] (mirrored), |mu| <= mu_hi, smooth edges.
/// Used by the decay probe; x-localized and zero-x-mean by construction.
RealField frequency_bump_field(const Grid2D& g, double xi_lo, double xi_hi, double mu_hi,
                               double edge = 0.25);

}  // namespace kp
