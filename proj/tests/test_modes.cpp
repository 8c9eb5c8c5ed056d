#include <gtest/gtest.h>

#include <boost/math/tools/roots.hpp>
#include <cmath>

#include "casimir/errors.hpp"
#include "casimir/modes.hpp"
#include "casimir/specfun.hpp"
#include "casimir/spheroidal.hpp"

using namespace casimir::modes;
namespace sp = casimir::spheroidal;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST(Root, SphereLimit) {
  const auto r = spheroidal_root(0, 0, 1, 1e-4, ModeBC::dirichlet);
  EXPECT_NEAR(r.z, kPi, 1e-7);
  EXPECT_NEAR(spheroidal_root(0, 0, 1, 0.05, ModeBC::dirichlet).z, 3.14421, 2e-4);
}

TEST(Root, OrderedAndResolved) {
  for (auto bc : {ModeBC::dirichlet, ModeBC::neumann}) {
    double prev = 0.0;
    for (int n = 1; n <= 4; ++n) {
      const auto r = spheroidal_root(2, 1, n, 0.05, bc);
      EXPECT_GT(r.z, prev);
      EXPECT_LE(r.solver_residual, 1e-10);
      prev = r.z;
    }
  }
}

TEST(Root, StaysNearSphericalRoot) {
  for (auto [l, m] : {std::pair{0, 0}, {1, 1}, {3, 2}, {4, 0}})
    for (double e : {0.02, 0.05}) {
      const double z0 = casimir::specfun::bessel_root(l, 1, casimir::specfun::RootKind::value);
      const double z = spheroidal_root(l, m, 1, e, ModeBC::dirichlet).z;
      EXPECT_LE(std::fabs(z - z0), 2.0 * sp::alpha_lm(l, m) * z0 * e * e) << l << "," << m;
    }
}

TEST(Root, OrderSignSymmetry) {
  for (auto bc : {ModeBC::dirichlet, ModeBC::neumann})
    for (auto [l, m] : {std::pair{1, 1}, {3, 2}}) {
      const double a = spheroidal_root(l, m, 1, 0.06, bc).z, b = spheroidal_root(l, -m, 1, 0.06, bc).z;
      EXPECT_NEAR(a, b, 1e-10 * a);
    }
}

TEST(Root, RejectsBadInput) {
  EXPECT_THROW(spheroidal_root(0, 0, 1, 0.0, ModeBC::dirichlet), std::domain_error);
  EXPECT_THROW(spheroidal_root(0, 0, 1, 0.4, ModeBC::dirichlet), std::domain_error);
  EXPECT_THROW(spheroidal_root(1, 2, 1, 0.1, ModeBC::dirichlet), std::domain_error);
  EXPECT_THROW(spheroidal_root(1, 0, 0, 0.1, ModeBC::dirichlet), std::domain_error);
  EXPECT_THROW(parse_mode_bc("robin"), std::invalid_argument);
  EXPECT_EQ(parse_mode_bc(to_string(ModeBC::neumann)), ModeBC::neumann);
}

TEST(ShiftFit, DirichletMatchesAlpha) {
  EXPECT_NEAR(root_shift_fit(0, 0, ModeBC::dirichlet).c_fit, 1.0 / 3.0, 1e-3);
  const auto f = root_shift_fit(1, 1, ModeBC::dirichlet);
  EXPECT_NEAR(f.c_fit, 0.4, 1e-3);
  EXPECT_DOUBLE_EQ(f.c_pred, 0.4);
  EXPECT_DOUBLE_EQ(root_shift_fit(2, 0, ModeBC::dirichlet).c_pred, 5.0 / 21.0);
  EXPECT_LT(f.abs_err(), 1e-3);
}

TEST(ShiftFit, NeumannMatchesPrediction) {
  for (auto [l, m] : {std::pair{0, 0}, {1, 1}, {2, 0}, {3, 2}}) {
    const auto f = root_shift_fit(l, m, ModeBC::neumann);
    EXPECT_NEAR(f.c_fit, f.c_pred, 1e-3) << l << "," << m;
  }
}

TEST(ShiftFit, NeumannPredictionFromApproxForm) {
  // Neumann roots of the small-e radial form, with the (1 - e^2)^{m/2}
  // factor the full function carries: d/dxi at fixed gamma is z d/dz - e d/de.
  // Solve it at small e and read off the e^2 coefficient.
  for (auto [l, m] : {std::pair{1, 0}, {2, 1}, {4, 3}}) {
    const double u0 = casimir::specfun::bessel_root(l, 1, casimir::specfun::RootKind::derivative);
    const double e = 2e-3, h = 1e-6;
    const auto S = [&](double z, double ee) {
      return std::pow(1.0 - ee * ee, 0.5 * m) * sp::radial_S1_approx(l, m, z, ee);
    };
    const auto F = [&](double z) {
      const double sz = (S(z + h, e) - S(z - h, e)) / (2 * h);
      const double se = (S(z, e + h) - S(z, e - h)) / (2 * h);
      return z * sz - e * se;
    };
    boost::uintmax_t it = 100;
    const auto [lo, hi] = boost::math::tools::toms748_solve(
        F, u0 * 0.99, u0 * 1.01, boost::math::tools::eps_tolerance<double>(50), it);
    const double c = (0.5 * (lo + hi) / u0 - 1.0) / (e * e);
    EXPECT_NEAR(c, predicted_shift(l, m, 1, ModeBC::neumann), 2e-3) << l << "," << m;
  }
}

TEST(ShiftFit, QuarticTermStable) {
  const auto a = root_shift_fit(1, 0, ModeBC::dirichlet);
  const auto b = root_shift_fit(1, 0, ModeBC::dirichlet, {0.03, 0.05, 0.07, 0.09});
  EXPECT_TRUE(std::isfinite(a.d_fit));
  EXPECT_NEAR(a.c_fit, b.c_fit, 1e-4);
  EXPECT_NEAR(a.d_fit, b.d_fit, 0.05 * std::max(1.0, std::fabs(a.d_fit)));
}

TEST(ShiftFit, RejectsBadSamples) {
  EXPECT_THROW(root_shift_fit(0, 0, ModeBC::dirichlet, {0.02, 0.04}), std::invalid_argument);
  EXPECT_THROW(root_shift_fit(0, 0, ModeBC::dirichlet, {0.02, 0.04, 0.2}), std::invalid_argument);
  EXPECT_THROW(root_shift_fit(0, 0, ModeBC::dirichlet, {0.05, 0.05, 0.05}), casimir::NumericalError);
}

TEST(EnergyDifference, Behaviour) {
  EXPECT_EQ(energy_difference_check(ModeBC::dirichlet, 5, 5, 0.0).first, 0.0);
  const auto [r, bound] = energy_difference_check(ModeBC::dirichlet, 5, 5, 0.05);
  EXPECT_LE(std::fabs(r), 1e-5);
  EXPECT_LE(std::fabs(r), bound);
  const double r_half = energy_difference_check(ModeBC::dirichlet, 5, 5, 0.025).first;
  EXPECT_NEAR(r / r_half, 16.0, 16.0 * 0.3);
}
