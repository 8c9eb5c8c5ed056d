#include "casimir/bag.hpp"

#include <cmath>
#include <stdexcept>

namespace casimir::bag {

namespace {

void check(const BagParams& p, double size, double e) {
  if (!(p.lambda_exp > 0.0)) throw std::domain_error("lambda must be > 0");
  if (!(p.Lambda_QCD_energy >= 0.0)) throw std::domain_error("E(Lambda^2) must be >= 0");
  if (!(size > 0.0)) throw std::domain_error("bag size must be > 0");
  if (!(e >= 0.0 && e <= 0.3)) throw std::domain_error("ellipticity must be in [0, 0.3]");
}

}  // namespace

double modified_energy(const BagParams& p) {
  if (!(p.lambda_exp > 0.0)) throw std::domain_error("lambda must be > 0");
  return -p.lambda_exp * p.E_massless + (p.lambda_exp + 1.0) * p.Lambda_QCD_energy;
}

double meson_prolate_energy(double b, double e, const BagParams& p) {
  check(p, b, e);
  return modified_energy(p) / b * (1.0 - e * e / 6.0);
}

double meson_prolate_energy_major(double b, double e, const BagParams& p) {
  check(p, b, e);
  const double a = b / std::sqrt(1.0 - e * e);
  return modified_energy(p) / a * (1.0 + e * e / 3.0);
}

double baryon_oblate_energy(double a, double e_prime, const BagParams& p) {
  check(p, a, e_prime);
  return modified_energy(p) / a * (1.0 - e_prime * e_prime / 3.0);
}

}  // namespace casimir::bag
