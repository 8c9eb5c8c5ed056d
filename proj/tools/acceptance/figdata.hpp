#pragma once

#include <vector>

#include "casimir/zeta.hpp"

// Grids and rows behind the figure CSVs. Shared by the CLI and selftest so
// both look at exactly the same numbers.
namespace casimir::figdata {

std::vector<double> linspace(double a, double b, int n);

struct AngularRow {
  double gamma2;
  int l;
  double ratio;  // small-gamma form / full angular function
};
struct RadialRow {
  double e;
  int l;
  double ratio;  // small-e form / full radial function, both at z = gamma xi
};
struct EnergyRow {
  double e;
  double prolate;
  double oblate;
};

const std::vector<int>& default_l_list();
std::vector<double> default_gamma2_grid();  // 51 points on [0, 1]
std::vector<double> default_e_grid();       // 61 points on [0, 0.3]
std::vector<double> default_energy_grid();  // step 0.01 on [0, 0.3]

std::vector<AngularRow> angular_rows(const std::vector<int>& ls, int m, double eta,
                                     const std::vector<double>& gamma2s);
std::vector<RadialRow> radial_rows(const std::vector<int>& ls, int m, double z,
                                   const std::vector<double>& es);
std::vector<EnergyRow> energy_rows(const std::vector<double>& es, zeta::BC bc,
                                   const zeta::SumOptions& opt = {});

}  // namespace casimir::figdata
