#include <doctest.h>

#include <cmath>
#include <random>

#include "kp/probes.hpp"
#include "test_util.hpp"

using namespace kp;

TEST_CASE("beta exponent values") {
  CHECK(beta_exponent(4.0, 4.0) == 0.0);
  CHECK(beta_exponent(8.0, 4.0) == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(beta_exponent(inf, 2.0) == 0.0);
  // cross-formula consistency with the L4 specialization exponent 3/4 - 3/q
  CHECK(beta_exponent(4.0, 4.0) == 3.0 / 4.0 - 3.0 / 4.0);
}

TEST_CASE("admissibility of exponent pairs") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(is_admissible(4.0, 4.0));
  CHECK(is_admissible(inf, 2.0));
  CHECK_FALSE(is_admissible(2.0, inf));
  CHECK_FALSE(is_admissible(4.0, inf));
  CHECK_FALSE(is_admissible(2.0, 2.0));  // 1/q = 1/2 > 1/2 - 1/2
  CHECK_FALSE(is_admissible(1.5, 4.0));
  CHECK_THROWS_AS(AdmissiblePair(2.0, 2.0), NotAdmissible);
}

TEST_CASE("strichartz ratio: unitarity for (inf, 2) on a plane wave") {
  const Grid2D g(32, 16, 2.0 * pi, pi);
  RealField phi =
      RealField::sample(g, [](double x, double y) { return std::cos(2.0 * x + 2.0 * y); });
  const double inf = std::numeric_limits<double>::infinity();
  AdmissiblePair pair(inf, 2.0);
  CHECK(strichartz_ratio(phi, pair, 1.0, -1, 8) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(strichartz_ratio(RealField(g), pair, 1.0, -1, 8), ZeroField);
}

TEST_CASE("strichartz (4,4): dilation family below the frozen constant, stable in nt") {
  const Grid2D g(256, 64, 40.0 * pi, 20.0 * pi);
  AdmissiblePair pair(4.0, 4.0);
  for (double lam : {0.5, 0.71, 1.0, 1.41, 2.0}) {
    RealField phi = RealField::sample(g, [&](double x, double y) {
      const double yc = y - g.Ly / 2.0;
      return lam * lam * std::cos(1.5 * lam * x) *
             std::exp(-(lam * x) * (lam * x) / 8.0 - std::pow(lam * lam * yc, 2) / 8.0);
    });
    phi = zero_x_mean_project(phi);
    const double r16 = strichartz_ratio(phi, pair, 1.0, -1, 16);
    const double r32 = strichartz_ratio(phi, pair, 1.0, -1, 32);
    CHECK(r16 <= 1.0);  // frozen calibration constant C44
    CHECK(std::abs(r32 - r16) / r16 <= 0.02);
  }
}

TEST_CASE("strichartz ratio is invariant under time reversal of reflected data") {
  const Grid2D g(64, 32, 8.0 * pi, 4.0 * pi);
  RealField phi = kptest::random_zero_mean(g, 17);
  AdmissiblePair pair(4.0, 4.0);
  // reflect through the origin: phi~(x, y) = phi(-x, -y) on the lattice
  RealField refl(g);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      refl.samples(i, j) = phi.samples((g.nx - i) % g.nx, (g.ny - j) % g.ny);
  const double fwd = strichartz_ratio(phi, pair, 1.0, -1, 16);
  const double bwd = strichartz_ratio(refl, pair, -1.0, -1, 16);
  CHECK(std::abs(fwd - bwd) < 1e-10 * fwd);
}

TEST_CASE("decay probe: eps = 0 and eps = 3/4 slopes on the large box") {
  const Grid2D g(1024, 64, 200.0 * pi, 12.0 * pi);
  {
    RealField phi = frequency_bump_field(g, 0.8, 2.5, 2.5);
    std::vector<double> times;
    for (int k = 0; k < 12; ++k) times.push_back(0.5 * std::pow(6.0 / 0.5, k / 11.0));
    DecayFit fit = decay_probe(phi, 0.0, times, -1);
    CHECK(std::abs(fit.slope - (-1.0)) < 0.15);
    // window check trips beyond the recirculation time
    CHECK_THROWS_AS(decay_probe(phi, 0.0, {0.5, 2.0 * fit.window}, -1),
                    RecirculationWindowExceeded);
  }
  {
    RealField phi = frequency_bump_field(g, 0.2, 1.5, 1.5);
    std::vector<double> times;
    for (int k = 0; k < 12; ++k) times.push_back(0.8 * std::pow(4.0 / 0.8, k / 11.0));
    DecayFit fit = decay_probe(phi, 0.75, times, -1);
    CHECK(std::abs(fit.slope - (-0.25 - 0.5)) < 0.15);
  }
}

TEST_CASE("decay probe slope moves toward the theory as the box doubles") {
  std::vector<double> times;
  for (int k = 0; k < 10; ++k) times.push_back(0.5 * std::pow(5.0 / 0.5, k / 9.0));
  const Grid2D small(512, 64, 100.0 * pi, 12.0 * pi);
  const Grid2D big(1024, 64, 200.0 * pi, 12.0 * pi);
  const double s1 = decay_probe(frequency_bump_field(small, 0.8, 2.5, 2.5), 0.0, times, -1).slope;
  const double s2 = decay_probe(frequency_bump_field(big, 0.8, 2.5, 2.5), 0.0, times, -1).slope;
  CHECK(std::abs(s2 - (-1.0)) <= std::abs(s1 - (-1.0)) + 0.02);
}

TEST_CASE("sigma values") {
  CHECK(sigma(-1, 1.0, 1.0, 0.0) == 0.0);
  CHECK(sigma(+1, 0.0, 1.0, 1.0) == 0.0);
  // affine in tau, exactly
  CHECK(sigma(+1, 2.5 + 1.25, 2.0, 3.0) - sigma(+1, 2.5, 2.0, 3.0) == 1.25);
  CHECK_THROWS_AS(sigma(+1, 0.0, 0.0, 1.0), ZeroXFrequency);
}

TEST_CASE("resonance identity: hand values, degenerate guard") {
  ResonancePair p = resonance_kp2(2.0, 1.0, 0.0, 0.0);
  CHECK(p.lhs == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(p.rhs == doctest::Approx(6.0).epsilon(1e-15));

  ResonancePair q = resonance_kp2(3.0, 1.0, 1.0, 0.0);
  CHECK(q.lhs == doctest::Approx(18.0 + 1.0 / 6.0).epsilon(1e-14));
  CHECK(q.rhs == doctest::Approx(18.0 + 1.0 / 6.0).epsilon(1e-14));

  CHECK_THROWS_AS(resonance_kp2(2.0, 2.0, 1.0, 0.0), DegenerateFrequencies);
}

TEST_CASE("resonance identity over random triples including near-degenerate") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> uni(-10.0, 10.0);
  double worst = 0.0;
  for (int k = 0; k < 10000; ++k) {
    double xi = uni(rng), xi1 = uni(rng), mu = uni(rng), mu1 = uni(rng);
    if (k % 10 == 0) xi = xi1 + 1e-3;  // near-degenerate family
    if (xi == 0.0 || xi1 == 0.0 || xi == xi1) continue;
    const ResonancePair p = resonance_kp2(xi, xi1, mu, mu1);
    worst = std::max(worst, std::abs(p.lhs - p.rhs) / std::max(1.0, std::abs(p.rhs)));
    // no-resonance property: |rhs| >= 3 |xi xi1 (xi - xi1)|
    CHECK(std::abs(p.rhs) >= 3.0 * std::abs(xi * xi1 * (xi - xi1)) * (1.0 - 1e-14));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("frequency bump field is x-localized and zero-x-mean") {
  const Grid2D g(512, 64, 100.0 * pi, 12.0 * pi);
  RealField phi = frequency_bump_field(g, 0.8, 2.5, 2.5);
  CHECK(has_zero_x_mean(to_spectrum(phi)));
  const double peak = linf_norm(phi);
  CHECK(phi.samples.row(0).abs().maxCoeff() < 1e-8 * peak);
}
