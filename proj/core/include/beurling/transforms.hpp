#pragma once

// Beurling-Ahlfors transform B and its relatives on the sampled window.
//
// Two discretisations are provided and kept independent:
//  * the periodic FFT path, multiplier m(xi) = conj(xi) / xi with m(0) = 0;
//  * the truncated kernel path, B_eta f(z) = h^2 sum_u K(z - u) phi(|z - u| / eta) f(u)
//    with K(d) = -1 / (pi d^2), summed over the whole (non-periodic) grid.

#include <span>

#include "beurling/grid.hpp"

namespace beurling {

/// Smooth cutoff: 0 on [0, 1/2], 1 on [1, inf), monotone in between.
struct CutoffProfile {
  /// s(t) = e(t) / (e(t) + e(1 - t)), e(t) = exp(-1/t) for t > 0.
  static double smooth_step(double t);
  double operator()(double t) const { return smooth_step(2.0 * t - 1.0); }
};

/// Throws std::invalid_argument unless eta >= 2h.
void require_resolved_scale(const GridSpec& spec, double eta);

complex beurling_multiplier(complex xi);
complex beurling_kernel(complex d);
/// K_B(d) phi(|d| / eta); zero at d = 0.
complex truncated_kernel(complex d, double eta);

/// FFT path.
ComplexField beurling(const ComplexField& f);
/// Multiplier m(xi)^N; throws for N < 1.
ComplexField beurling_power(const ComplexField& f, int power);

/// Truncated kernel path B_eta over the full grid (zero-padded convolution).
ComplexField beurling_truncated(const ComplexField& f, double eta);
/// Same sum as beurling_truncated evaluated at one sample by direct summation.
complex beurling_truncated_at(const ComplexField& f, double eta, int j, int k);

/// Pointwise max over the scale family of |B_eta f|.
RealField beurling_maximal(const ComplexField& f, std::span<const double> etas);

/// max(|f(z)|, max over family squares containing z of the mean of |f|).
/// The single-cell floor keeps the result monotone in the family.
RealField hl_maximal(const ComplexField& f, const SquareFamily& family);
/// Maximal function over the squares Q(z, r) centred at every sample, r in radii.
RealField centered_maximal(const ComplexField& f, std::span<const double> radii);

enum class Wirtinger { dz, dzbar };

/// Spectral d = (d_x - i d_y) / 2 or dbar = (d_x + i d_y) / 2.
ComplexField wirtinger(const ComplexField& f, Wirtinger which);
/// |df| + |dbar f| at every sample.
RealField total_derivative(const ComplexField& f);

/// Spectral inverse of dbar; zero-frequency (and Nyquist-only) modes map to 0.
ComplexField cauchy(const ComplexField& g);

/// sup |df| + |dbar f|, the Lipschitz constant of a smooth field.
double gradient_sup(const ComplexField& b);

/// [b, B_eta] f = b B_eta f - B_eta(b f) via the truncated kernel path.
ComplexField commutator_truncated(const ComplexField& b, const ComplexField& f, double eta);

/// |[b, B_eta] f - [b, B_{2h}] f| pointwise; the 2h truncation stands in for
/// the principal value.
RealField commutator_truncation_gap(const ComplexField& b, const ComplexField& f, double eta);

}  // namespace beurling
