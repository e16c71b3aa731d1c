#pragma once

// FFT plumbing for periodic fields: forward/inverse 2-D transforms and
// diagonal Fourier multipliers.

#include <functional>
#include <vector>

#include "beurling/grid.hpp"

namespace beurling {

/// Unnormalised forward DFT (sign -1) of an n x n row-major array.
std::vector<complex> fft_forward(std::span<const complex> data, int n);
/// Inverse DFT including the 1 / n^2 normalisation.
std::vector<complex> fft_inverse(std::span<const complex> data, int n);

/// Signed integer wavenumber of DFT index i in [-n/2, n/2).
inline int wavenumber(int i, int n) { return i < n / 2 ? i : i - n; }

/// Angular frequency pi k / L used for differentiation; the Nyquist index
/// maps to 0 so real inputs stay real.
double derivative_frequency(const GridSpec& spec, int index);

/// Applies a diagonal multiplier symbol(xi) with xi = xi_x + i xi_y built from
/// derivative_frequency on each axis.
ComplexField apply_multiplier(const ComplexField& f, const std::function<complex(complex xi)>& symbol);

/// Linear (zero-padded, non-periodic) discrete convolution
/// out(z) = h^2 sum_u kernel(z - u) f(u), with kernel evaluated at the lattice
/// displacements (a h, b h), |a|, |b| < n.
ComplexField linear_convolution(const ComplexField& f, const std::function<complex(complex d)>& kernel);

}  // namespace beurling
