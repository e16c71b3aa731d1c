#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "beurling/grid.hpp"

using namespace beurling;

TEST(Grid, SpecGeometry) {
  const GridSpec spec(64, 2.0);
  EXPECT_DOUBLE_EQ(spec.spacing(), 4.0 / 64);
  EXPECT_EQ(spec.size(), 64u * 64u);
  EXPECT_DOUBLE_EQ(spec.coord(0), -2.0);
  EXPECT_EQ(spec.flat(3, 5), 5u * 64u + 3u);
  EXPECT_EQ(spec.point(0, 32), complex(-2.0, 0.0));
}

TEST(Grid, RejectsBadSizes) {
  EXPECT_THROW(GridSpec(4, 1.0), std::invalid_argument);
  EXPECT_THROW(GridSpec(48, 1.0), std::invalid_argument);
  EXPECT_THROW(GridSpec(64, 0.0), std::invalid_argument);
  EXPECT_THROW(GridSpec(64, -1.0), std::invalid_argument);
}

TEST(Grid, HalfOpenMembership) {
  const Square q(complex(0.0, 0.0), 1.0);
  EXPECT_TRUE(q.contains(complex(-1.0, -1.0)));
  EXPECT_FALSE(q.contains(complex(1.0, 0.0)));
  EXPECT_FALSE(q.contains(complex(0.0, 1.0)));
  EXPECT_TRUE(q.encloses(Square(complex(0.5, 0.5), 0.5)));
  EXPECT_FALSE(q.overlaps(Square(complex(2.0, 0.0), 1.0)));
}

TEST(Grid, SampleCountsAreExact) {
  const GridSpec spec(64, 2.0);
  const double h = spec.spacing();
  const Square q(complex(0.0, 0.0), 8 * h);
  EXPECT_EQ(sample_indices(spec, q).size(), 16u * 16u);
  EXPECT_EQ(sample_box(spec, q).count(), 256u);
}

TEST(Grid, IntegralOfConstantIsArea) {
  const GridSpec spec(64, 2.0);
  const RealField one(spec, 1.0);
  const Square q(complex(0.25, -0.5), 0.5);
  EXPECT_NEAR(integrate_over_square(one, q), q.area(), 1e-12);
  EXPECT_NEAR(mean_over_square(one, q), 1.0, 1e-12);
}

TEST(Grid, DyadicFamilyStaysInWindow) {
  const GridSpec spec(64, 2.0);
  const Square window(complex(0.0, 0.0), 2.0);
  for (int refine : {1, 2}) {
    const SquareFamily fam = dyadic_family(spec, 1, 3, refine);
    ASSERT_FALSE(fam.empty());
    for (const Square& q : fam) EXPECT_TRUE(window.encloses(q));
  }
  EXPECT_EQ(dyadic_family(spec, 1, 1, 1).size(), 9u);
}

TEST(Grid, RollIsPeriodic) {
  const GridSpec spec(8, 1.0);
  RealField f(spec);
  f.at(7, 0) = 3.0;
  const RealField g = roll(f, -1, 0);
  EXPECT_EQ(g.at(0, 0), 3.0);
  const RealField back = roll(g, 1, 0);
  EXPECT_EQ(back.at(7, 0), 3.0);
}

TEST(Grid, NormOfConstant) {
  const GridSpec spec(32, 1.0);
  const ComplexField f(spec, complex(0.0, 2.0));
  EXPECT_NEAR(l2_norm(f), 2.0 * 2.0, 1e-12);
  EXPECT_NEAR(std::abs(mean(f) - complex(0.0, 2.0)), 0.0, 1e-14);
}

TEST(Grid, MismatchedGridsThrow) {
  const ComplexField a(GridSpec(8, 1.0));
  const ComplexField b(GridSpec(16, 1.0));
  EXPECT_THROW(a + b, std::invalid_argument);
}
