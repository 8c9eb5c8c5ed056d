#include <gtest/gtest.h>

#include <stdexcept>

#include "casimir/bag.hpp"

using namespace casimir::bag;

TEST(Bag, ModifiedEnergy) {
  EXPECT_DOUBLE_EQ(modified_energy(), -0.7);
  EXPECT_DOUBLE_EQ(modified_energy({2.0, 0.0, 0.7}), -1.4);
  for (double lam : {0.5, 1.0, 3.0}) EXPECT_NEAR(modified_energy({lam, 0.7, 0.7}), 0.7, 1e-15);
}

TEST(Bag, ModifiedEnergyIsLinear) {
  const BagParams a{1.5, 0.2, 0.6}, b{1.5, 0.5, -0.3};
  const BagParams sum{1.5, 0.7, 0.3};
  EXPECT_NEAR(modified_energy(sum), modified_energy(a) + modified_energy(b), 1e-15);
}

TEST(Bag, Examples) {
  EXPECT_DOUBLE_EQ(meson_prolate_energy(1.0, 0.0), -0.7);
  EXPECT_NEAR(meson_prolate_energy(1.0, 0.3), -0.6895, 1e-12);
  EXPECT_DOUBLE_EQ(baryon_oblate_energy(1.0, 0.0), -0.7);
  EXPECT_NEAR(baryon_oblate_energy(1.0, 0.3), -0.679, 1e-12);
  EXPECT_NEAR(meson_prolate_energy(1.0, 0.1), meson_prolate_energy_major(1.0, 0.1), 1e-4);
  EXPECT_DOUBLE_EQ(meson_prolate_energy(2.0, 0.1), 0.5 * meson_prolate_energy(1.0, 0.1));
}

TEST(Bag, IncreasingInEllipticity) {
  double pm = meson_prolate_energy(1.0, 0.0), pb = baryon_oblate_energy(1.0, 0.0);
  for (int i = 1; i <= 300; ++i) {
    const double e = 0.001 * i;
    const double m = meson_prolate_energy(1.0, e), b = baryon_oblate_energy(1.0, e);
    EXPECT_GT(m, pm);
    EXPECT_GT(b, pb);
    pm = m, pb = b;
  }
}

TEST(Bag, DomainErrors) {
  EXPECT_THROW(meson_prolate_energy(0.0, 0.1), std::domain_error);
  EXPECT_THROW(meson_prolate_energy(1.0, 0.31), std::domain_error);
  EXPECT_THROW(baryon_oblate_energy(1.0, -0.01), std::domain_error);
  EXPECT_THROW(modified_energy({0.0, 0.0, 0.7}), std::domain_error);
  EXPECT_THROW(meson_prolate_energy(1.0, 0.1, {1.0, -0.1, 0.7}), std::domain_error);
}
