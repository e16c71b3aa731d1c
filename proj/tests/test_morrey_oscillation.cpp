#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "beurling/morrey.hpp"
#include "beurling/oscillation.hpp"
#include "beurling/samplers.hpp"

using namespace beurling;

TEST(Morrey, ParamsAreValidated) {
  EXPECT_THROW(MorreyParams(1.0, 0.5), std::invalid_argument);
  EXPECT_THROW(MorreyParams(2.0, 0.0), std::invalid_argument);
  EXPECT_THROW(MorreyParams(2.0, 1.5), std::invalid_argument);
  try {
    MorreyParams(2.0, 1.5);
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("(0, 1)"), std::string::npos);
  }
}

TEST(Morrey, ConstantFieldOracle) {
  // f = 1, w = 1: ||f||_{L^p(Q)} / |Q|^{kappa/p} = |Q|^{(1 - kappa)/p}, largest on the largest square.
  const GridSpec spec(64, 2.0);
  const Weight w = constant_weight(spec, 1.0, 2.0);
  const MorreyParams params(2.0, 0.5);
  const SquareFamily fam = dyadic_family(spec, 1, 3);
  const double area = std::pow(2.0 * 1.0, 2);
  EXPECT_NEAR(morrey_norm(ComplexField(spec, 1.0), w, params, fam), std::pow(area, 0.25), 1e-12);
  const auto terms = morrey_terms(ComplexField(spec, 1.0), w, params, fam);
  EXPECT_EQ(terms.size(), fam.size());
}

TEST(Morrey, Homogeneous) {
  const GridSpec spec(64, 2.0);
  const Weight w = power_weight(spec, 0.5, complex(0.0, 0.0), 2.0);
  const MorreyParams params(2.0, 0.3);
  const SquareFamily fam = dyadic_family(spec, 1, 3);
  const ComplexField f = random_smooth_complex(spec, 2, 3, 0.2, 0.4);
  EXPECT_NEAR(morrey_norm(complex(0.0, 3.0) * f, w, params, fam), 3.0 * morrey_norm(f, w, params, fam), 1e-10);
}

TEST(Morrey, TriangleInequality) {
  const GridSpec spec(64, 2.0);
  const Weight w = power_weight(spec, -0.5, complex(0.3, 0.1), 3.0);
  const MorreyParams params(3.0, 0.4);
  const SquareFamily fam = dyadic_family(spec, 1, 3, 2);
  for (std::uint64_t s = 1; s <= 4; ++s) {
    const ComplexField f = random_smooth_complex(spec, s, 3, 0.2, 0.4);
    const ComplexField g = random_smooth_complex(spec, s + 100, 3, 0.2, 0.4);
    EXPECT_LE(morrey_norm(f + g, w, params, fam),
              morrey_norm(f, w, params, fam) + morrey_norm(g, w, params, fam) + 1e-12);
  }
}

TEST(Morrey, RealAndComplexAgree) {
  const GridSpec spec(32, 1.0);
  const Weight w = constant_weight(spec, 2.0, 2.0);
  const MorreyParams params(2.0, 0.5);
  const SquareFamily fam = dyadic_family(spec, 1, 2);
  const RealField f = random_smooth_real(spec, 3, 2, 0.1, 0.2);
  EXPECT_NEAR(morrey_norm(f, w, params, fam), morrey_norm(to_complex(f), w, params, fam), 1e-13);
}

TEST(Morrey, CompactnessDiagnostics) {
  const GridSpec spec(64, 2.0);
  const Weight w = constant_weight(spec, 1.0, 2.0);
  const MorreyParams params(2.0, 0.5);
  const SquareFamily fam = dyadic_family(spec, 1, 3);
  const std::vector<ComplexField> fs{ComplexField(spec, 1.0)};
  const std::vector<complex> shifts{complex(spec.spacing(), 0.0)};
  const auto d = fk_diagnostics(fs, w, params, fam, 1.0, shifts);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_NEAR(d[0].modulus, 0.0, 1e-14);
  EXPECT_GT(d[0].tail, 0.0);
  const std::vector<complex> bad{complex(0.3 * spec.spacing(), 0.0)};
  EXPECT_THROW(fk_diagnostics(fs, w, params, fam, 1.0, bad), std::invalid_argument);
}

TEST(Oscillation, MedianOfKnownValues) {
  const GridSpec spec(8, 1.0);
  RealField f(spec);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<double>(i % 5);
  const Square q(complex(0.0, 0.0), 1.0);
  std::vector<double> v(f.values().begin(), f.values().end());
  std::sort(v.begin(), v.end());
  EXPECT_EQ(median_value(f, q), v[(v.size() - 1) / 2]);
}

TEST(Oscillation, MedianMinimisesDeviation) {
  const GridSpec spec(32, 1.0);
  const RealField f = random_smooth_real(spec, 4, 3, 0.1, 0.3);
  const Square q(complex(0.1, -0.2), 0.4);
  const double a = median_value(f, q);
  const double at = mean_deviation(f, q, a);
  for (double c : {a - 0.1, a + 0.1, a - 0.01, a + 0.01, 0.0}) EXPECT_LE(at, mean_deviation(f, q, c) + 1e-14);
  EXPECT_LE(mean_oscillation(f, q), 2.0 * at + 1e-14);
}

TEST(Oscillation, ComplexMedianNeedsRealField) {
  const GridSpec spec(8, 1.0);
  const Square q(complex(0.0, 0.0), 1.0);
  EXPECT_NO_THROW(median_value(ComplexField(spec, 1.0), q));
  EXPECT_THROW(median_value(ComplexField(spec, complex(0.0, 1.0)), q), std::invalid_argument);
}

TEST(Oscillation, LinearFieldOracle) {
  // Mean |x - mean x| over the samples of a square, computed directly.
  const GridSpec spec(64, 2.0);
  const RealField f = sample_real(spec, [](complex z) { return z.real(); });
  const Square q(complex(0.0, 0.0), 0.5);
  const auto idx = sample_indices(spec, q);
  double m = 0.0;
  for (std::size_t i : idx) m += f[i];
  m /= static_cast<double>(idx.size());
  double dev = 0.0;
  for (std::size_t i : idx) dev += std::abs(f[i] - m);
  dev /= static_cast<double>(idx.size());
  EXPECT_NEAR(mean_oscillation(f, q), dev, 1e-14);
  EXPECT_NEAR(dev, 0.25, 1e-12);
}

TEST(Oscillation, ConstantHasZeroBmo) {
  const GridSpec spec(32, 1.0);
  EXPECT_EQ(bmo_norm(RealField(spec, 2.0), dyadic_family(spec, 1, 3)), 0.0);
}

TEST(Oscillation, LogIsScaleInvariant) {
  // Centred squares of log|z| have the same oscillation at every scale well above the floor.
  const GridSpec spec(512, 4.0);
  const RealField f = truncated_log(spec, spec.spacing() / 2);
  const double a = mean_oscillation(f, Square(complex(0.0, 0.0), 0.5));
  const double b = mean_oscillation(f, Square(complex(0.0, 0.0), 1.0));
  EXPECT_NEAR(a / b, 1.0, 1e-3);
}

TEST(Oscillation, CmoProbeOfBump) {
  const GridSpec spec(128, 4.0);
  const RealField f = sample_real(spec, [](complex z) { return compact_bump(z, complex(0.0, 0.0), 1.0); });
  const SquareFamily far{Square(complex(3.0, 3.0), 0.5)};
  const SquareFamily near{Square(complex(0.0, 0.0), 0.5)};
  const CmoProbe p = cmo_probe(f, near, near, far);
  EXPECT_EQ(p.translated, 0.0);
  EXPECT_GT(p.small, 0.0);
  EXPECT_THROW(cmo_probe(f, {}, near, far), std::invalid_argument);
  const auto t = oscillation_trend(f, {near, far});
  ASSERT_EQ(t.size(), 2u);
  EXPECT_GT(t[0], t[1]);
}
