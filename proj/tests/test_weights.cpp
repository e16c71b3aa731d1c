#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "beurling/weights.hpp"

using namespace beurling;

TEST(Weights, ConstantWeightHasUnitConstant) {
  const GridSpec spec(64, 2.0);
  const SquareFamily fam = dyadic_family(spec, 1, 3);
  for (double c : {0.1, 1.0, 40.0}) {
    const ApReport r = ap_constant(constant_weight(spec, c, 3.0), fam);
    EXPECT_NEAR(r.constant, 1.0, 1e-12);
    EXPECT_EQ(r.per_square.size(), fam.size());
  }
}

TEST(Weights, ApConstantIsScaleInvariant) {
  const GridSpec spec(64, 2.0);
  const SquareFamily fam = dyadic_family(spec, 1, 3);
  const Weight w = power_weight(spec, 0.7, complex(0.1, -0.2), 2.0);
  EXPECT_NEAR(ap_constant(w.rescaled(5.0), fam).constant, ap_constant(w, fam).constant, 1e-10);
}

TEST(Weights, ApConstantBoundedBelowByOne) {
  const GridSpec spec(64, 2.0);
  const SquareFamily fam = dyadic_family(spec, 1, 4, 2);
  for (double a : {-1.0, 0.5, 1.5}) {
    const ApReport r = ap_constant(power_weight(spec, a, complex(0.0, 0.0), 2.5), fam);
    for (double v : r.per_square) EXPECT_GE(v, 1.0 - 1e-12);
    EXPECT_DOUBLE_EQ(r.constant, r.per_square[r.argmax]);
  }
}

TEST(Weights, TwoValueOracle) {
  // w = 1 on the left half and 4 on the right half of a centred square, p = 2:
  // <w> <w^-1> = (5/2)(5/8) = 25/16.
  const GridSpec spec(32, 1.0);
  RealField v(spec, 1.0);
  for (int k = 0; k < 32; ++k)
    for (int j = 16; j < 32; ++j) v.at(j, k) = 4.0;
  const Weight w(v, 2.0);
  const SquareFamily fam{Square(complex(0.0, 0.0), 0.5)};
  EXPECT_NEAR(ap_constant(w, fam).constant, 25.0 / 16.0, 1e-12);
}

TEST(Weights, PowerWeightMeasureMatchesIntegral) {
  // int_{[-r, r]^2} (x^2 + y^2) = 8 r^4 / 3.
  const GridSpec spec(256, 2.0);
  const Weight w = power_weight(spec, 2.0, complex(0.0, 0.0), 2.0, false);
  const double r = 0.5;
  EXPECT_NEAR(weighted_measure(w, Square(complex(0.0, 0.0), r)), 8 * std::pow(r, 4) / 3, 2e-3);
}

TEST(Weights, PowerWeightRangeIsEnforced) {
  const GridSpec spec(32, 1.0);
  EXPECT_THROW(power_weight(spec, -2.5, complex(0.0, 0.0), 2.0), std::invalid_argument);
  EXPECT_THROW(power_weight(spec, 2.5, complex(0.0, 0.0), 2.0), std::invalid_argument);
  EXPECT_NO_THROW(power_weight(spec, 2.5, complex(0.0, 0.0), 2.0, false));
  EXPECT_THROW(constant_weight(spec, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(constant_weight(spec, -1.0, 2.0), std::invalid_argument);
}

TEST(Weights, SingularSampleIsFinite) {
  const GridSpec spec(32, 1.0);
  const Weight w = power_weight(spec, -1.5, complex(0.0, 0.0), 2.0);
  for (double v : w.values().values()) EXPECT_TRUE(std::isfinite(v) && v > 0.0);
}

TEST(Weights, DoublingExponentOfPowerWeight) {
  const GridSpec spec(256, 4.0);
  const std::vector<double> t{2.0, 4.0, 8.0};
  for (double a : {0.0, 1.0}) {
    const DoublingFit fit = doubling_check(power_weight(spec, a, complex(0.0, 0.0), 2.0), Square(complex(0.0, 0.0), 0.25), t);
    EXPECT_NEAR(fit.exponent, 2.0 + a, 0.05);
    EXPECT_TRUE(fit.pass);
    EXPECT_DOUBLE_EQ(fit.bound, 2 * 2.0 + 0.2);
  }
}

TEST(Weights, DoublingOutsideWindowThrows) {
  const GridSpec spec(64, 1.0);
  const std::vector<double> t{4.0};
  EXPECT_THROW(doubling_check(constant_weight(spec, 1.0, 2.0), Square(complex(0.5, 0.5), 0.25), t), std::domain_error);
}

TEST(Weights, SigmaOfConstantWeightIsOne) {
  const GridSpec spec(128, 2.0);
  const Square q(complex(0.0, 0.0), 1.0);
  SquareFamily sub;
  for (int m = 1; m <= 4; ++m) sub.emplace_back(complex(0.0, 0.0), std::pow(0.5, m));
  const SigmaFit fit = sigma_estimate(constant_weight(spec, 3.0, 2.0), q, sub);
  EXPECT_NEAR(fit.sigma, 1.0, 1e-10);
  EXPECT_NEAR(fit.c_w, 1.0, 1e-9);
}

TEST(Weights, SigmaNeedsEnclosedSubsets) {
  const GridSpec spec(64, 2.0);
  const Square q(complex(0.0, 0.0), 0.5);
  const SquareFamily bad{Square(complex(0.0, 0.0), 0.25), Square(complex(1.0, 0.0), 0.25)};
  EXPECT_THROW(sigma_estimate(constant_weight(spec, 1.0, 2.0), q, bad), std::invalid_argument);
}

TEST(Weights, LeastSquaresLine) {
  const std::vector<double> x{0.0, 1.0, 2.0, 3.0};
  const std::vector<double> y{1.0, 3.0, 5.0, 7.0};
  const auto [slope, intercept] = least_squares_line(x, y);
  EXPECT_NEAR(slope, 2.0, 1e-14);
  EXPECT_NEAR(intercept, 1.0, 1e-14);
}
