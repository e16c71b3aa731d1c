#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "beurling/commutator.hpp"
#include "beurling/samplers.hpp"
#include "beurling/transforms.hpp"

using namespace beurling;

namespace {

struct Fixture {
  GridSpec spec{128, 4.0};
  Weight w = power_weight(spec, 0.5, complex(0.0, 0.0), 2.0);
  MorreyParams params{2.0, 0.5};
};

}  // namespace

TEST(Commutator, ConstantSymbolGivesZero) {
  const GridSpec spec(64, 2.0);
  const ComplexField b(spec, 3.0);
  const ComplexField f = random_bandlimited(spec, 2);
  EXPECT_LT(l2_norm(commutator_apply(b, f, CommutatorMode::fft)), 1e-12);
}

TEST(Commutator, FftModeMatchesDefinition) {
  const GridSpec spec(64, 2.0);
  const ComplexField b = to_complex(random_smooth_real(spec, 3, 2, 0.2, 0.3));
  const ComplexField f = random_bandlimited(spec, 4);
  const ComplexField expected = b * beurling::beurling(f) - beurling::beurling(b * f);
  EXPECT_LT(l2_norm(commutator_apply(b, f, CommutatorMode::fft) - expected), 1e-12 * l2_norm(expected));
}

TEST(Commutator, SparseMatchesDenseQuadrature) {
  const GridSpec spec(64, 4.0);
  const RealField b = random_smooth_real(spec, 5);
  const double eta = 2 * spec.spacing();
  const Square q(complex(0.25, -0.25), 4 * spec.spacing());
  SparseField f{spec, sample_indices(spec, q), {}};
  for (std::size_t i = 0; i < f.index.size(); ++i) f.value.emplace_back(std::cos(0.3 * i), std::sin(0.7 * i));
  const SampleBox all{0, spec.n(), 0, spec.n()};
  const ComplexField sparse = commutator_sparse(b, f, eta, all);
  const ComplexField dense = commutator_apply(to_complex(b), f.dense(), CommutatorMode::quadrature, eta);
  EXPECT_LT(l2_norm(sparse - dense), 1e-10 * l2_norm(dense));
}

TEST(Commutator, SparseRespectsTargetBox) {
  const GridSpec spec(32, 2.0);
  const RealField b = random_smooth_real(spec, 6);
  SparseField f{spec, {spec.flat(16, 16)}, {complex(1.0, 0.0)}};
  const SampleBox box{0, 8, 0, 8};
  const ComplexField out = commutator_sparse(b, f, 0.0, box);
  EXPECT_EQ(out.at(20, 20), complex(0.0, 0.0));
  EXPECT_NE(out.at(3, 3), complex(0.0, 0.0));
}

TEST(Commutator, ProductSetInvariants) {
  const GridSpec spec(128, 4.0);
  for (std::uint64_t s = 1; s <= 3; ++s) {
    const RealField b = random_smooth_real(spec, s);
    const ProductSets ps = product_sets(b, Square(complex(-0.5, -0.5), 0.25));
    EXPECT_TRUE(check_product_sets(b, ps).all());
    EXPECT_GE(2 * ps.f[0].size(), sample_indices(spec, ps.q_tilde).size());
  }
}

TEST(Commutator, ProductSetsNeedCentralSquares) {
  const GridSpec spec(64, 4.0);
  const RealField b = random_smooth_real(spec, 1);
  EXPECT_THROW(product_sets(b, Square(complex(1.5, 1.5), 0.25)), std::domain_error);
}

TEST(Commutator, TestFamilyInvariants) {
  Fixture fx;
  const RealField b = random_smooth_real(fx.spec, 8);
  const SquareFamily sq{Square(complex(-0.5, 0.0), 0.2), Square(complex(0.5, 0.5), 0.15)};
  const TestFamily tf = build_test_family(b, sq, fx.w, fx.params, {0.0, 0, true});
  const TestFamilyCheck c = check_test_family(b, tf);
  EXPECT_TRUE(c.all());
  EXPECT_LT(c.max_mean, 1e-12);
  for (const TestMember& m : tf.members) {
    EXPECT_LE(std::abs(m.a), 0.5 + 1.0 / static_cast<double>(m.count));
    EXPECT_NEAR(m.scale, std::pow(weighted_measure(fx.w, m.q), (0.5 - 1.0) / 2.0), 1e-14);
  }
}

TEST(Commutator, TestFamilyRejectsSmallOscillation) {
  Fixture fx;
  const RealField b(fx.spec, 1.0);
  const SquareFamily sq{Square(complex(0.0, 0.0), 0.2)};
  EXPECT_THROW(build_test_family(b, sq, fx.w, fx.params, {0.1, 0, true}), std::invalid_argument);
  EXPECT_NO_THROW(build_test_family(b, sq, fx.w, fx.params, {0.0, 0, false}));
}

TEST(Commutator, ShiftedSquareGeometry) {
  const Square q(complex(0.0, 0.0), 1.0);
  for (int k = 1; k <= 5; ++k) {
    const Square s = shifted_square(q, k);
    EXPECT_NEAR(s.center.real(), std::pow(3.0, k), 1e-12);
    EXPECT_NEAR(s.half_side, std::pow(3.0, k - 1), 1e-12);
    EXPECT_TRUE(shifted_inclusions_hold(k));
    EXPECT_TRUE(s.scaled(4.0).encloses(q.scaled(std::pow(3.0, k - 1))));
    EXPECT_TRUE(q.scaled(std::pow(3.0, k + 1)).encloses(s.scaled(4.0)));
  }
  EXPECT_FALSE(shifted_inclusions_hold(0));
}

TEST(Commutator, BoundsVanishForConstantSymbol) {
  Fixture fx;
  const RealField b(fx.spec, 2.0);
  const SquareFamily sq{Square(complex(0.0, 0.0), fx.spec.spacing())};
  const TestFamily tf = build_test_family(b, sq, fx.w, fx.params, {0.0, 2, false});
  const std::vector<int> ks{1, 2};
  for (const BoundRow& r : lower_upper_bounds(tf, b, fx.w, fx.params, ks)) {
    EXPECT_EQ(r.lower_lhs, 0.0);
    EXPECT_EQ(r.c1, 0.0);
    EXPECT_TRUE(r.inclusions);
  }
}

TEST(Commutator, SeparationRejectsOverlap) {
  Fixture fx;
  const RealField b = truncated_log(fx.spec, fx.spec.spacing());
  const SquareFamily sq{Square(complex(0.5, 0.0), 0.1), Square(complex(0.75, 0.0), 0.1)};
  const TestFamily tf = build_test_family(b, sq, fx.w, fx.params, {0.0, 0, false});
  EXPECT_THROW(separation_experiment(tf, b, fx.w, fx.params, {dyadic_family(fx.spec, 1, 2)}, 1.0, 0.0),
               std::invalid_argument);
}

TEST(Commutator, ChainStepsArePositive) {
  Fixture fx;
  const RealField b = random_smooth_real(fx.spec, 12);
  const ChainReport rep =
      oscillation_vs_commutator(b, Square(complex(0.0, 0.0), 6 * fx.spec.spacing()), fx.w, fx.params,
                                dyadic_family(fx.spec, 1, 2), {});
  for (double s : rep.steps) EXPECT_GT(s, 0.0);
  EXPECT_LE(rep.steps[0], 2.0 * rep.steps[1] + 1e-14);
  EXPECT_LE(rep.steps[1], rep.steps[2] + 1e-14);
  EXPECT_NEAR(rep.steps[5], std::numbers::pi / 2 * rep.steps[6], 1e-9 * rep.steps[5] + 1e-300);
  EXPECT_LE(rep.kernel_ratio, 18.0);
}
