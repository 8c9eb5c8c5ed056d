#pragma once

// Lower-level pieces of the sphere zeta functions, one boundary-condition
// family and one side of the boundary at a time.

#include <vector>

#include "casimir/zeta.hpp"

namespace casimir::zeta {

enum class Family {
  dirichlet,  // i_l or k_l
  neumann,    // i_l' or k_l'
  tm          // (y i_l)' or (y k_l)', l >= 1
};
enum class Side { interior, exterior };
// unit: degeneracy 2l+1. zonal: (2l+1) alpha_{l0}.
enum class Weight { unit, zonal };

struct FamilySpec {
  Family family;
  Side side;
  Weight weight = Weight::unit;
  int l_min = 0;
  int l_only = -1;  // >= 0: a single l instead of the whole tail
};

struct FamilyResult {
  LaurentAtMinusOne laurent;
  std::vector<double> per_l;  // weighted Z_l(-1), l = l_min .. L-1
  double l_tail = 0.0;        // fitted remainder of the l-sum
};

// Laurent data of sum_l w_l zeta_l(s). The Debye terms through 1/nu^3 are
// summed in closed form; the remainder is integrated at s = -1.
FamilyResult family_zeta(const FamilySpec& spec, const SumOptions& opt = {},
                         int order = 2);

// Laurent data of the closed-form part alone.
LaurentAtMinusOne closed_laurent(const FamilySpec& spec, int order,
                                 double radius = 0.3, int nodes = 24);

// Remainder integrand t * R(t) at s = -1 for one l (exposed for tests).
double remainder_integrand(Family f, Side side, int l, double t);
// Z_l(-1) without degeneracy or weight.
double remainder_zeta(Family f, Side side, int l);

}  // namespace casimir::zeta
