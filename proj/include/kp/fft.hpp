#pragma once

#include "kp/field.hpp"

namespace kp {

/// Number of worker threads for per-line parallel loops.  Controlled by the
/// environment variable KP_LAB_THREADS (0 or unset = auto).  Results do not
/// depend on the thread count: every parallel unit owns a disjoint line.
int thread_count();

/// Run fn(i) for i in [0, n) with the configured parallelism.
void parallel_for(int n, const std::function<void(int)>& fn);

/// Forward DFT, scaled by 1/(nx*ny); Nyquist rows/columns are zeroed.
Spectrum to_spectrum(const RealField& f);

/// Inverse DFT (unscaled).  Throws SymmetryViolation if the imaginary
/// residue exceeds 1e-10 relative to max(1, max |Re|).
RealField from_spectrum(const Spectrum& s);

/// Inverse DFT without the symmetry check (internal fast path).
RealField from_spectrum_unchecked(const Spectrum& s);

/// In-place complex 2D transforms on FFT-ordered coefficient arrays.
void dft2_forward(CArray& a);   // unscaled forward (e^{-i k x})
void dft2_inverse(CArray& a);   // unscaled inverse (e^{+i k x})

/// In-place complex 1D transforms (unscaled).
void dft1_forward(Eigen::ArrayXcd& a);
void dft1_inverse(Eigen::ArrayXcd& a);

}  // namespace kp
