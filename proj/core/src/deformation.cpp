#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "casimir/zeta.hpp"

namespace casimir::zeta {

namespace {

// Sphere energies are deterministic in (bc, l_max, fit_terms), so a process
// cache is safe and saves the repeated mode sums behind spheroid_energy.
EnergyExpansion cached_sphere(BC bc, const SumOptions& opt) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, EnergyExpansion> cache;
  const auto key = std::make_tuple(static_cast<int>(bc), opt.l_max, opt.fit_terms);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto e = sphere_energy_total(bc, opt);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, e);
  return e;
}

}  // namespace

EnergyExpansion spheroid_energy(const EnergyExpansion& sphere, double a, double e,
                                Geometry g) {
  if (!(a > 0.0)) throw std::domain_error("a must be > 0");
  if (!(e >= 0.0 && e < 1.0)) throw std::domain_error("ellipticity must be in [0, 1)");
  EnergyExpansion out = sphere;
  out.geometry = g;
  out.c2 = g == Geometry::prolate ? 1.0 / 3.0 : -1.0 / 3.0;
  out.c2_set = true;
  out.a = a;
  out.e = e;
  out.energy = out.E0 * (1.0 + out.c2 * e * e) / a;
  if (e > 0.3) out.flags.push_back("outside-validity-window");
  if (out.bc == BC::em) out.flags.push_back("CONJECTURE");
  return out;
}

EnergyExpansion spheroid_energy(double a, double e, Geometry g, BC bc,
                                const SumOptions& opt) {
  return spheroid_energy(cached_sphere(bc, opt), a, e, g);
}

std::pair<Rational, Rational> msum_identity(int l) {
  if (l < 0) throw std::domain_error("l must be >= 0");
  const long long L = static_cast<long long>(l) * (l + 1);
  Rational lhs(0);
  for (long long m = -l; m <= l; ++m) lhs += Rational(L + m * m - 1, 4 * L - 3);
  return {lhs, Rational(2LL * l + 1, 3)};
}

double volume_preserving_radius(double a, double e) {
  if (!(e >= 0.0 && e < 1.0)) throw std::domain_error("ellipticity must be in [0, 1)");
  return a * std::cbrt(1.0 - e * e);
}

EnergyExpansion em_conjecture_energy(double a, double e, const SumOptions& opt) {
  auto out = spheroid_energy(a, e, Geometry::prolate, BC::em, opt);
  return out;
}

}  // namespace casimir::zeta
