#include "beurling/samplers.hpp"

#include <cmath>

#include "beurling/spectral.hpp"

namespace beurling {

double gaussian(complex z, complex center, double width, double amplitude) {
  return amplitude * std::exp(-std::norm(z - center) / (2.0 * width * width));
}

double compact_bump(complex z, complex center, double radius) {
  const double s2 = std::norm(z - center) / (radius * radius);
  if (s2 >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - s2));
}

RealField truncated_log(const GridSpec& spec, double floor) {
  if (!(floor > 0.0)) throw std::invalid_argument("log floor must be positive");
  return sample_real(spec, [floor](complex z) { return std::log(std::max(std::abs(z), floor)); });
}

ComplexField random_bandlimited(const GridSpec& spec, std::uint64_t seed, int max_wavenumber) {
  const int n = spec.n();
  if (max_wavenumber < 1 || max_wavenumber >= n / 2)
    throw std::invalid_argument("band limit must lie in [1, n/2)");
  Rng rng(seed);
  std::vector<complex> spectrum(spec.size());
  for (int ky = -max_wavenumber; ky <= max_wavenumber; ++ky) {
    for (int kx = -max_wavenumber; kx <= max_wavenumber; ++kx) {
      const double re = rng.uniform(-1.0, 1.0);
      const double im = rng.uniform(-1.0, 1.0);
      if (kx == 0 && ky == 0) continue;
      spectrum[spec.flat((kx + n) % n, (ky + n) % n)] = complex(re, im);
    }
  }
  ComplexField f(spec, fft_inverse(spectrum, n));
  const double norm = l2_norm(f);
  for (auto& v : f.values()) v /= norm;
  return f;
}

RealField random_smooth_real(const GridSpec& spec, std::uint64_t seed, int count, double width_lo,
                             double width_hi) {
  Rng rng(seed);
  const double q = 0.25 * spec.half_width();
  struct Bump {
    complex c;
    double width;
    double amp;
  };
  std::vector<Bump> bumps;
  for (int i = 0; i < count; ++i) {
    const double x = rng.uniform(-q, q);
    const double y = rng.uniform(-q, q);
    const double width = rng.uniform(width_lo, width_hi);
    const double amp = rng.uniform(0.5, 1.5) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
    bumps.push_back({complex(x, y), width, amp});
  }
  return sample_real(spec, [&](complex z) {
    double v = 0.0;
    for (const auto& b : bumps) v += gaussian(z, b.c, b.width, b.amp);
    return v;
  });
}

ComplexField random_smooth_complex(const GridSpec& spec, std::uint64_t seed, int count, double width_lo,
                                   double width_hi) {
  Rng rng(seed);
  const auto re = random_smooth_real(spec, rng.next(), count, width_lo, width_hi);
  const auto im = random_smooth_real(spec, rng.next(), count, width_lo, width_hi);
  ComplexField out(spec);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = complex(re[i], im[i]);
  return out;
}

}  // namespace beurling
