#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "beurling/samplers.hpp"
#include "beurling/transforms.hpp"

using namespace beurling;

namespace {

constexpr double pi = std::numbers::pi;

ComplexField mode(const GridSpec& spec, int kx, int ky) {
  const double w = pi / spec.half_width();
  return sample(spec, [&](complex z) { return std::exp(complex(0.0, w * (kx * z.real() + ky * z.imag()))); });
}

double rel(const ComplexField& a, const ComplexField& b) { return l2_norm(a - b) / l2_norm(b); }

}  // namespace

TEST(Transforms, MultiplierOnSingleMode) {
  const GridSpec spec(32, 2.0);
  for (auto [kx, ky] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{2, -3}, std::pair{-5, 4}}) {
    const complex xi(kx, ky);
    const complex m = std::conj(xi) / xi;
    EXPECT_LT(rel(beurling::beurling(mode(spec, kx, ky)), m * mode(spec, kx, ky)), 1e-12);
  }
}

TEST(Transforms, ZeroModeIsAnnihilated) {
  const GridSpec spec(16, 1.0);
  EXPECT_LT(l2_norm(beurling::beurling(ComplexField(spec, 1.0))), 1e-13);
  EXPECT_EQ(beurling_multiplier(complex(0.0, 0.0)), complex(0.0, 0.0));
}

TEST(Transforms, KernelFormula) {
  const complex d(0.3, -0.7);
  const complex expected = -1.0 / (pi * d * d);
  EXPECT_NEAR(std::abs(beurling_kernel(d) - expected), 0.0, 1e-14);
  EXPECT_EQ(truncated_kernel(complex(0.01, 0.0), 1.0), complex(0.0, 0.0));
  EXPECT_NEAR(std::abs(truncated_kernel(complex(3.0, 0.0), 1.0) - beurling_kernel(complex(3.0, 0.0))), 0.0, 1e-15);
}

TEST(Transforms, IsometryOnRandomFields) {
  const GridSpec spec(64, 2.0);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const ComplexField f = random_bandlimited(spec, seed);
    EXPECT_NEAR(l2_norm(beurling::beurling(f)) / l2_norm(f), 1.0, 1e-12);
  }
}

TEST(Transforms, PowerMatchesIteration) {
  const GridSpec spec(64, 2.0);
  const ComplexField f = random_bandlimited(spec, 7);
  ComplexField it = f;
  for (int n = 1; n <= 4; ++n) {
    it = beurling::beurling(it);
    EXPECT_LT(rel(beurling_power(f, n), it), 1e-12);
  }
  EXPECT_THROW(beurling_power(f, 0), std::invalid_argument);
}

TEST(Transforms, WirtingerOnTrigonometricPolynomial) {
  const GridSpec spec(32, 2.0);
  const double w = pi / spec.half_width();
  const ComplexField f = mode(spec, 2, 1);
  // d/dz e^{i w (2x + y)} = (i w / 2)(2 - i) f and d/dzbar = (i w / 2)(2 + i) f.
  const complex dz = complex(0.0, w / 2) * complex(2.0, -1.0);
  const complex dzbar = complex(0.0, w / 2) * complex(2.0, 1.0);
  EXPECT_LT(rel(wirtinger(f, Wirtinger::dz), dz * f), 1e-12);
  EXPECT_LT(rel(wirtinger(f, Wirtinger::dzbar), dzbar * f), 1e-12);
}

TEST(Transforms, BeurlingMapsDbarToD) {
  const GridSpec spec(128, 4.0);
  const ComplexField f = random_smooth_complex(spec, 3);
  EXPECT_LT(rel(beurling::beurling(wirtinger(f, Wirtinger::dzbar)), wirtinger(f, Wirtinger::dz)), 1e-9);
}

TEST(Transforms, CauchyInvertsDbar) {
  const GridSpec spec(64, 2.0);
  const ComplexField g = random_bandlimited(spec, 11);
  const ComplexField c = cauchy(g);
  EXPECT_LT(rel(wirtinger(c, Wirtinger::dzbar), g), 1e-12);
  EXPECT_LT(rel(wirtinger(c, Wirtinger::dz), beurling::beurling(g)), 1e-12);
}

TEST(Transforms, GradientOfPeriodicSymbol) {
  // b = sin(pi x / L): |d b| + |dbar b| = |b_x| with maximum pi / L.
  const GridSpec spec(64, 4.0);
  const double w = pi / spec.half_width();
  const ComplexField b = sample(spec, [&](complex z) { return complex(std::sin(w * z.real()), 0.0); });
  EXPECT_NEAR(gradient_sup(b), w, 1e-12);
}

TEST(Transforms, CommutatorWithConstantSymbolVanishes) {
  const GridSpec spec(64, 4.0);
  const ComplexField b(spec, complex(2.5, 0.0));
  const ComplexField f = random_smooth_complex(spec, 5, 3, 0.2, 0.3);
  EXPECT_LT(l2_norm(commutator_truncated(b, f, 4 * spec.spacing())), 1e-10 * l2_norm(f));
}

TEST(Transforms, TruncatedAtMatchesField) {
  const GridSpec spec(32, 2.0);
  const ComplexField f = random_smooth_complex(spec, 9, 2, 0.2, 0.4);
  const double eta = 3 * spec.spacing();
  const ComplexField bt = beurling_truncated(f, eta);
  for (auto [j, k] : {std::pair{3, 4}, std::pair{16, 16}, std::pair{30, 1}})
    EXPECT_NEAR(std::abs(bt.at(j, k) - beurling_truncated_at(f, eta, j, k)), 0.0, 1e-10);
}

TEST(Transforms, TruncationScaleMustBeResolved) {
  const GridSpec spec(32, 2.0);
  EXPECT_THROW(require_resolved_scale(spec, 0.5 * spec.spacing()), std::invalid_argument);
  EXPECT_NO_THROW(require_resolved_scale(spec, 4 * spec.spacing()));
}

TEST(Transforms, MaximalFunctionsDominateModulus) {
  const GridSpec spec(32, 2.0);
  const ComplexField f = random_smooth_complex(spec, 4);
  const double h = spec.spacing();
  const std::vector<double> radii{h, 2 * h, 4 * h};
  const RealField m = centered_maximal(f, radii);
  const RealField mh = hl_maximal(f, dyadic_family(spec, 1, 4, 2));
  for (std::size_t i = 0; i < f.size(); i += 37) {
    EXPECT_GE(m[i], 0.0);
    EXPECT_GE(mh[i], 0.0);
  }
  const ComplexField one(spec, 1.0);
  const RealField m1 = centered_maximal(one, radii);
  for (std::size_t i = 0; i < m1.size(); i += 53) EXPECT_NEAR(m1[i], 1.0, 1e-12);
}
