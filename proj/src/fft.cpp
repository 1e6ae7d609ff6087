#include "kp/fft.hpp"

#include <unsupported/Eigen/FFT>

#include <cstdlib>
#include <map>
#include <thread>
#include <vector>

#include "kp/errors.hpp"

namespace kp {

int thread_count() {
  static int cached = [] {
    const char* env = std::getenv("KP_LAB_THREADS");
    long v = env ? std::strtol(env, nullptr, 10) : 0;
    if (v <= 0) v = std::thread::hardware_concurrency();
    if (v < 1) v = 1;
    return int(v);
  }();
  return cached;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  int nt = std::min(thread_count(), n);
  if (nt <= 1 || n < 8) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < n; i += nt) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

namespace {

Eigen::FFT<double>& engine() {
  thread_local Eigen::FFT<double> fft(Eigen::default_fft_impl<double>(),
                                      Eigen::FFT<double>::Unscaled);
  return fft;
}

// Line transforms run serially: desk-scale grids make per-call thread
// dispatch cost exceed the transform work, and serial reductions keep
// diagnostics bit-deterministic regardless of KP_LAB_THREADS.
void dft_lines_x(CArray& a, bool inverse) {
  const int nx = int(a.rows()), ny = int(a.cols());
  const size_t n = size_t(nx);
  std::vector<Complex> in(n), out(n);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) in[size_t(i)] = a(i, j);
    if (inverse)
      engine().inv(out, in);
    else
      engine().fwd(out, in);
    for (int i = 0; i < nx; ++i) a(i, j) = out[size_t(i)];
  }
}

void dft_lines_y(CArray& a, bool inverse) {
  const int nx = int(a.rows()), ny = int(a.cols());
  const size_t n = size_t(ny);
  std::vector<Complex> in(n), out(n);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) in[size_t(j)] = a(i, j);
    if (inverse)
      engine().inv(out, in);
    else
      engine().fwd(out, in);
    for (int j = 0; j < ny; ++j) a(i, j) = out[size_t(j)];
  }
}

}  // namespace

void dft1_forward(Eigen::ArrayXcd& a) {
  const int n = int(a.size());
  std::vector<Complex> in(a.data(), a.data() + n);
  std::vector<Complex> out(in.size());
  engine().fwd(out, in);
  for (int i = 0; i < n; ++i) a(i) = out[size_t(i)];
}

void dft1_inverse(Eigen::ArrayXcd& a) {
  const int n = int(a.size());
  std::vector<Complex> in(a.data(), a.data() + n);
  std::vector<Complex> out(in.size());
  engine().inv(out, in);
  for (int i = 0; i < n; ++i) a(i) = out[size_t(i)];
}

void dft2_forward(CArray& a) {
  dft_lines_x(a, false);
  dft_lines_y(a, false);
}

void dft2_inverse(CArray& a) {
  dft_lines_x(a, true);
  dft_lines_y(a, true);
}

namespace {

// The x-lattice is centered on 0 while the DFT references index 0; odd
// x-modes flip sign so that coefficients match the Fourier series in the
// centered coordinate (the x-period is even, so (-1)^{mode} = (-1)^{index}).
void center_phase_x(CArray& a) {
  for (int i = 1; i < int(a.rows()); i += 2) a.row(i) = -a.row(i);
}

}  // namespace

Spectrum to_spectrum(const RealField& f) {
  const Grid2D& g = f.grid;
  CArray a = f.samples.cast<Complex>();
  dft2_forward(a);
  center_phase_x(a);
  a *= 1.0 / (double(g.nx) * g.ny);
  a.row(g.nx / 2).setZero();  // Nyquist modes carry no symmetric partner
  a.col(g.ny / 2).setZero();
  bool zxm = (a.row(0).abs() == 0.0).all();
  return Spectrum(g, std::move(a), zxm);
}

RealField from_spectrum_unchecked(const Spectrum& s) {
  CArray a = s.coeffs;
  a.row(s.grid.nx / 2).setZero();
  a.col(s.grid.ny / 2).setZero();
  center_phase_x(a);
  dft2_inverse(a);
  return RealField(s.grid, a.real());
}

RealField from_spectrum(const Spectrum& s) {
  CArray a = s.coeffs;
  a.row(s.grid.nx / 2).setZero();
  a.col(s.grid.ny / 2).setZero();
  center_phase_x(a);
  dft2_inverse(a);
  const double im = a.imag().abs().maxCoeff();
  const double re = a.real().abs().maxCoeff();
  if (im > 1e-10 * std::max(1.0, re))
    throw SymmetryViolation("from_spectrum: imaginary residue " + std::to_string(im) +
                            " exceeds threshold (Hermitian symmetry broken)");
  return RealField(s.grid, a.real());
}

}  // namespace kp
