#pragma once

#include <complex>
#include <vector>

namespace casimir {

struct ModeIndex {
  int l = 0;
  int m = 0;
};

namespace spheroidal {

// Prolate spheroidal eigenpair. lambda uses the Flammer convention, so
// lambda -> l(l+1) at gamma2 = 0 and lambda_00 ~ gamma2/3 to first order.
// coeffs[k - k_min] holds a_{l,k}^m; the Legendre series is
// ps = sum_k (-1)^k a_k P^m_{l+2k}. Normalized so that
// sum_k a_k^2 N_{l+2k}^m = N_l^m, N_n^m = 2(n+m)!/((2n+1)(n-m)!), a_0 > 0.
struct EigenDecomp {
  ModeIndex index;
  double gamma2 = 0.0;
  double lambda = 0.0;
  int k_min = 0;  // -K^-; smallest k with l + 2k >= |m|
  int k_max = 0;  // K^+
  std::vector<double> coeffs;
  double residual = 0.0;    // worst relative row residual of the recurrence
  double a0_weight = 1.0;   // share of the norm carried by k = 0

  double a(int k) const {
    return k < k_min || k > k_max ? 0.0 : coeffs[k - k_min];
  }
  int K_minus() const { return -k_min; }
  int K_plus() const { return k_max; }
};

// Eigenvalue branch that is continuous from l(l+1) at gamma2 = 0. Throws
// BranchAmbiguity when a neighbouring branch carries a comparable a_0
// share. Negative m gives the a^{-m} coefficients (same lambda).
EigenDecomp lambda_eigenvalue(int l, int m, double gamma2,
                              double trunc_tol = 1e-15);

double ps_angular(const EigenDecomp& decomp, double eta);
// First-order small-gamma2 form of the angular function.
double ps_angular_approx(int l, int m, double eta, double gamma2);

// Radial functions of the first (kind 1) and third (kind 3) kind on the
// Bessel-series representation, normalized to j_l / h_l at large gamma*xi.
// Depend on m only through |m|. At xi = 1 with m != 0 the result is 0.
std::complex<double> radial_S(int kind, int l, int m, double xi, double gamma2);
std::complex<double> radial_S_dxi(int kind, int l, int m, double xi,
                                  double gamma2);
// Same, reusing a decomposition computed for (l, -|m|).
std::complex<double> radial_S(int kind, const EigenDecomp& neg_m, double xi);
std::complex<double> radial_S_dxi(int kind, const EigenDecomp& neg_m,
                                  double xi);

// Small-ellipticity form of S^{(1)} at fixed z = gamma*xi, e = 1/xi.
double radial_S1_approx(int l, int m, double z, double e);

// Coefficients of the e^2 term: S1 ~ j_l - e^2 (alpha z j_l' - b j_l).
double alpha_lm(int l, int m);
double beta_lm(int l, int m);

}  // namespace spheroidal
}  // namespace casimir
