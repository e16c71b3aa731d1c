#pragma once

// Named and seeded test fields used across experiments and tests.

#include <cstdint>
#include <random>

#include "beurling/grid.hpp"

namespace beurling {

/// Seeded generator whose uniform draws are bit-identical across standard
/// libraries (mt19937_64 output is specified; the conversion here is ours).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// amplitude * exp(-|z - c|^2 / (2 width^2)).
double gaussian(complex z, complex center, double width, double amplitude = 1.0);

/// C_c^infty bump exp(1 - 1 / (1 - s^2)) for s = |z - c| / radius < 1, else 0.
/// Peak value 1 at the centre.
double compact_bump(complex z, complex center, double radius);

/// log max(|z|, floor): a BMO function that is not in CMO.
RealField truncated_log(const GridSpec& spec, double floor);

/// Mean-zero trigonometric polynomial with random complex coefficients on the
/// wavenumbers 0 < max(|kx|, |ky|) <= max_wavenumber, scaled to unit L^2 norm.
ComplexField random_bandlimited(const GridSpec& spec, std::uint64_t seed, int max_wavenumber = 8);

/// Sum of `count` Gaussian bumps with random signs, centres in the central
/// quarter-window [-L/4, L/4]^2 and widths in [width_lo, width_hi].
RealField random_smooth_real(const GridSpec& spec, std::uint64_t seed, int count = 3, double width_lo = 0.25,
                             double width_hi = 0.5);

/// Complex version of random_smooth_real (independent real and imaginary parts).
ComplexField random_smooth_complex(const GridSpec& spec, std::uint64_t seed, int count = 3,
                                   double width_lo = 0.25, double width_hi = 0.5);

}  // namespace beurling
