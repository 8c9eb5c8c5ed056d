#include "figdata.hpp"

#include "casimir/spheroidal.hpp"

namespace casimir::figdata {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
  return v;
}

const std::vector<int>& default_l_list() {
  static const std::vector<int> ls{0, 10, 20, 30};
  return ls;
}

std::vector<double> default_gamma2_grid() { return linspace(0.0, 1.0, 51); }
std::vector<double> default_e_grid() { return linspace(0.0, 0.3, 61); }
std::vector<double> default_energy_grid() { return linspace(0.0, 0.3, 31); }

std::vector<AngularRow> angular_rows(const std::vector<int>& ls, int m, double eta,
                                     const std::vector<double>& gamma2s) {
  std::vector<AngularRow> rows;
  for (int l : ls)
    for (double g2 : gamma2s) {
      const auto d = spheroidal::lambda_eigenvalue(l, m, g2);
      rows.push_back({g2, l, spheroidal::ps_angular_approx(l, m, eta, g2) /
                                 spheroidal::ps_angular(d, eta)});
    }
  return rows;
}

std::vector<RadialRow> radial_rows(const std::vector<int>& ls, int m, double z,
                                   const std::vector<double>& es) {
  std::vector<RadialRow> rows;
  for (int l : ls)
    for (double e : es) {
      // e = 0 is the sphere, where both sides are j_l(z).
      if (e == 0.0) {
        rows.push_back({e, l, 1.0});
        continue;
      }
      const double full = spheroidal::radial_S(1, l, m, 1.0 / e, z * z * e * e).real();
      rows.push_back({e, l, spheroidal::radial_S1_approx(l, m, z, e) / full});
    }
  return rows;
}

std::vector<EnergyRow> energy_rows(const std::vector<double>& es, zeta::BC bc,
                                   const zeta::SumOptions& opt) {
  const auto sphere = zeta::sphere_energy_total(bc, opt);
  std::vector<EnergyRow> rows;
  for (double e : es)
    rows.push_back({e, zeta::spheroid_energy(sphere, 1.0, e, zeta::Geometry::prolate).energy,
                    zeta::spheroid_energy(sphere, 1.0, e, zeta::Geometry::oblate).energy});
  return rows;
}

}  // namespace casimir::figdata
