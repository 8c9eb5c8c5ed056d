#pragma once

#include <boost/rational.hpp>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace casimir::zeta {

// zeta(s) ~ c_m2/(s+1)^2 + c_m1/(s+1) + c_0 near s = -1.
struct LaurentAtMinusOne {
  double c_m2 = 0.0;
  double c_m1 = 0.0;
  double c_0 = 0.0;
  std::string scale_note;
  double tail_bound = 0.0;  // l-sum truncation estimate folded into c_0
};

LaurentAtMinusOne operator+(const LaurentAtMinusOne& a, const LaurentAtMinusOne& b);
LaurentAtMinusOne operator*(double k, const LaurentAtMinusOne& a);
// Exact Laurent data of -s * f(s) given that of f.
LaurentAtMinusOne times_minus_s(const LaurentAtMinusOne& a);

// Fits g(eps) = eps^order f(-1 + eps) on Chebyshev nodes in [-radius, radius]
// and reads off the principal part and finite part. f must be analytic in
// the punctured disc |s + 1| < 1.
LaurentAtMinusOne laurent_at_minus_one(const std::function<double(double)>& f,
                                       int order, double radius = 0.3,
                                       int nodes = 24);

enum class PPVariant { finite_part, finite_part_with_pole_term };

// How the pole terms are turned into a number. With mu^{s+1} multiplying
// zeta, the finite part picks up c_m1 log(mu a) + c_m2 log(mu a)^2 / 2.
struct PPPrescription {
  PPVariant variant = PPVariant::finite_part;
  std::string mu_convention = "mu*a = 1, log terms vanish";

  static PPPrescription finite_part();
  static PPPrescription finite_part_with_pole_term();
  static PPPrescription parse(const std::string& name);  // throws invalid_argument
  std::string name() const;
  double apply(const LaurentAtMinusOne& z) const;
};

enum class BC { dirichlet, neumann, em };
enum class Geometry { prolate, oblate };
enum class Region { interior, total };

std::string to_string(BC bc);
std::string to_string(Geometry g);
std::string to_string(Region r);
BC parse_bc(const std::string& s);
Geometry parse_geometry(const std::string& s);

struct EnergyExpansion {
  double E0 = 0.0;  // units 1/a
  double c2 = 0.0;
  bool c2_set = false;
  Geometry geometry = Geometry::prolate;
  BC bc = BC::dirichlet;
  Region region = Region::total;
  std::vector<std::string> flags;
  // Evaluation point when the expansion was applied to a body.
  double a = 1.0;
  double e = 0.0;
  double energy = 0.0;  // E0 (1 + c2 e^2) / a
  // Diagnostics of the regularization.
  double pole_residue = 0.0;
  double tail_bound = 0.0;
};

struct SumOptions {
  int l_max = 160;          // l-cutoff L of the explicit sum
  int fit_terms = 12;      // last terms used to fit the l-sum tail
  double tail_tol = 1e-4;  // reject if the tail estimate exceeds this
  int threads = 0;         // 0: hardware concurrency
};

// Interior Dirichlet sphere, zeta(s) = sum (omega a)^{-s}.
LaurentAtMinusOne sphere_zeta_dirichlet_interior(const SumOptions& opt = {});

// Interior plus exterior energy E0 = FP zeta(-1) / 2, units 1/a.
// EM is TE (Dirichlet) plus TM, both from l = 1.
EnergyExpansion sphere_energy_total(BC bc, const SumOptions& opt = {});

// -s sum_l (2l+1) alpha_{l0} zeta_l(s), the zonal next-to-leading term.
LaurentAtMinusOne zonal_zeta_nlo(const SumOptions& opt = {});

struct FactorPair {
  double c2_zonal = 0.0;
  double c2_exact = 0.0;
  PPPrescription prescription;
  LaurentAtMinusOne sphere;  // leading interior sphere data
  LaurentAtMinusOne zonal;   // zonal NLO data
};
FactorPair zonal_vs_exact_factors(const PPPrescription& p, const SumOptions& opt = {});

// E(a, e) = E0 (1 + c2 e^2)/a with c2 = +1/3 (prolate) or -1/3 (oblate,
// e is then the oblate ellipticity). Outside 0 <= e <= 0.3 a flag is set.
EnergyExpansion spheroid_energy(double a, double e, Geometry g, BC bc,
                                const SumOptions& opt = {});
EnergyExpansion spheroid_energy(const EnergyExpansion& sphere, double a,
                                double e, Geometry g);

using Rational = boost::rational<long long>;
// lhs = sum_m alpha_lm, rhs = (2l+1)/3, exactly.
std::pair<Rational, Rational> msum_identity(int l);

double volume_preserving_radius(double a, double e);

EnergyExpansion em_conjecture_energy(double a, double e, const SumOptions& opt = {});

}  // namespace casimir::zeta
