#include "gfid/states.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gfid/errors.hpp"
#include "test_util.hpp"

using namespace gfid;
using gfid::testing::random_matrix;
using gfid::testing::random_pure_state;

TEST(Vacuum, covariance_is_half_identity) {
  const auto s1 = vacuum(1);
  EXPECT_EQ(s1.covariance(), Matrix(0.5 * Matrix::Identity(2, 2)));
  EXPECT_TRUE(s1.displacement().isZero(0.0));
  const auto s2 = vacuum(2);
  EXPECT_EQ(s2.covariance(), Matrix(0.5 * Matrix::Identity(4, 4)));
  EXPECT_EQ(s2.modes(), 2);
  EXPECT_DOUBLE_EQ(purity(s1), 1.0);
  EXPECT_DOUBLE_EQ(purity(s2), 1.0);
  EXPECT_THROW(vacuum(0), InvalidArgument);
}

TEST(Coherent, displacement_map) {
  const auto zero = coherent({{0.0, 0.0}});
  EXPECT_EQ(zero.covariance(), vacuum(1).covariance());
  EXPECT_EQ(zero.displacement(), vacuum(1).displacement());

  const auto one = coherent({{1.0, 0.0}});
  EXPECT_DOUBLE_EQ(one.displacement()(0), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(one.displacement()(1), 0.0);

  const auto two = coherent({{0.5, -1.5}, {2.0, 0.25}});
  EXPECT_EQ(two.modes(), 2);
  EXPECT_DOUBLE_EQ(two.displacement()(1), -1.5 * std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(two.displacement()(2), 2.0 * std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(purity(two), 1.0);

  EXPECT_THROW(coherent({}), InvalidArgument);
}

TEST(TwoModeSqueezed, reduces_to_vacuum_and_stays_pure) {
  const auto s0 = two_mode_squeezed(0.0);
  EXPECT_EQ(s0.covariance(), vacuum(2).covariance());

  const auto s = two_mode_squeezed(0.5);
  for (int i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(s.covariance()(i, i), std::cosh(1.0) / 2.0);
  EXPECT_DOUBLE_EQ(s.covariance()(0, 2), -std::sinh(1.0) / 2.0);
  EXPECT_DOUBLE_EQ(s.covariance()(1, 3), std::sinh(1.0) / 2.0);

  for (double r : {-1.0, 0.1, 0.5, 1.0, 1.5, 2.0}) {
    EXPECT_NEAR(purity(two_mode_squeezed(r)), 1.0, 1e-9) << r;
    EXPECT_TRUE(two_mode_squeezed(r).is_physical()) << r;
  }
  EXPECT_THROW(two_mode_squeezed(std::nan("")), InvalidArgument);
}

TEST(SqueezedVacuum, formula) {
  EXPECT_EQ(squeezed_vacuum(0.0).covariance(), vacuum(1).covariance());
  const auto s = squeezed_vacuum(0.3);
  EXPECT_DOUBLE_EQ(s.covariance()(0, 0), 0.5 * std::exp(-0.6));
  EXPECT_DOUBLE_EQ(s.covariance()(1, 1), 0.5 * std::exp(0.6));
  for (double r : {-1.0, -0.2, 0.7}) EXPECT_NEAR(purity(squeezed_vacuum(r)), 1.0, 1e-12);
}

TEST(Purity, thermal_and_errors) {
  const GaussianState thermal(Matrix::Identity(2, 2), Vector::Zero(2));
  EXPECT_DOUBLE_EQ(purity(thermal), 0.5);  // 1/sqrt(det 2I) = 1/2

  const GaussianState too_narrow(0.1 * Matrix::Identity(2, 2), Vector::Zero(2));
  EXPECT_FALSE(too_narrow.is_physical());
  EXPECT_THROW(purity(too_narrow), InvalidState);
}

TEST(Purity, one_iff_unit_determinant) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 2;
    const auto pure = random_pure_state(rng, n);
    EXPECT_NEAR((2.0 * pure.covariance()).determinant(), 1.0, 1e-9);
    EXPECT_NEAR(purity(pure), 1.0, 1e-9);

    // Adding thermal noise makes the state mixed.
    const GaussianState mixed(pure.covariance() + 0.2 * Matrix::Identity(2 * n, 2 * n), pure.displacement());
    EXPECT_GT((2.0 * mixed.covariance()).determinant(), 1.0 + 1e-9);
    EXPECT_LT(purity(mixed), 1.0 - 1e-9);
  }
}

TEST(GaussianState, validates_shapes) {
  EXPECT_THROW(GaussianState(Matrix::Identity(3, 3), Vector::Zero(3)), InvalidArgument);
  EXPECT_THROW(GaussianState(Matrix::Identity(2, 2), Vector::Zero(4)), InvalidArgument);
  Matrix asym = Matrix::Identity(2, 2);
  asym(0, 1) = 0.1;
  EXPECT_THROW(GaussianState(asym, Vector::Zero(2)), InvalidArgument);
}

TEST(CharFunction, examples) {
  EXPECT_EQ(char_function(two_mode_squeezed(0.7), Vector::Zero(4)), std::complex<double>(1.0, 0.0));

  // vacuum, eps=(2,0): 1/2 * 2 * 1/2 * 2 = 1
  EXPECT_NEAR(std::abs(char_function(vacuum(1), Eigen::Vector2d(2.0, 0.0)) - std::exp(-1.0)), 0.0, 1e-15);

  // coherent(1), eps=(0,t): modulus e^{-t^2/4}, phase D.eps = 0
  const double t = 1.3;
  const auto chi = char_function(coherent({{1.0, 0.0}}), Eigen::Vector2d(0.0, t));
  EXPECT_NEAR(std::abs(chi), std::exp(-t * t / 4.0), 1e-15);
  EXPECT_NEAR(std::arg(chi), 0.0, 1e-15);

  EXPECT_THROW(char_function(vacuum(1), Vector::Zero(4)), InvalidArgument);
}

TEST(CharFunction, bounded_and_hermitian) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 2;
    const auto s = random_pure_state(rng, n, 2.0);
    const Vector eps = random_matrix(rng, 2 * n, 1).col(0);
    const auto chi = char_function(s, eps);
    EXPECT_LE(std::abs(chi), 1.0);
    const auto chi_neg = char_function(s, -eps);
    EXPECT_NEAR(std::abs(chi_neg - std::conj(chi)), 0.0, 1e-15);
  }
}

TEST(Constructors, all_physical) {
  EXPECT_TRUE(vacuum(3).is_physical());
  EXPECT_TRUE(coherent({{1.0, 2.0}, {-3.0, 0.5}}).is_physical());
  EXPECT_TRUE(two_mode_squeezed(1.2).is_physical());
  EXPECT_TRUE(squeezed_vacuum(-0.9).is_physical());
}
