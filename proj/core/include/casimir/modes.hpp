#pragma once

#include <string>
#include <utility>
#include <vector>

// Brute-force eigenfrequencies of the interior prolate spheroid, used to
// check the small-ellipticity frequency shifts directly.
namespace casimir::modes {

enum class ModeBC { dirichlet, neumann };

std::string to_string(ModeBC bc);
ModeBC parse_mode_bc(const std::string& s);

struct FrequencyRoot {
  int l = 0, m = 0, n = 1;
  double e = 0.0;
  ModeBC bc = ModeBC::dirichlet;
  double z = 0.0;  // omega a
  double solver_residual = 0.0;  // |f(z)| / (|df/dz| z), a relative root error
  int iterations = 0;
};

// n-th root in z of S^{(1)}(1/e, z^2 e^2) (Dirichlet) or of its
// xi-derivative (Neumann). Throws BracketError if the root leaves the
// perturbative bracket around z0 (1 + c e^2).
FrequencyRoot spheroidal_root(int l, int m, int n, double e, ModeBC bc);

// Predicted e^2 coefficient of z/z0. Dirichlet: alpha_lm. Neumann: from
// differentiating the small-e radial form at the j_l' root u0,
// alpha_lm - 2 beta_lm / (u0^2 - l(l+1)).
double predicted_shift(int l, int m, int n, ModeBC bc);

struct ShiftFit {
  int l = 0, m = 0, n = 1;
  ModeBC bc = ModeBC::dirichlet;
  double z0 = 0.0;
  double c_fit = 0.0;
  double d_fit = 0.0;  // e^4 coefficient
  double c_pred = 0.0;
  std::vector<double> e_samples;
  double abs_err() const;
};

// Least-squares fit of z(e)/z0 - 1 = c e^2 + d e^4.
ShiftFit root_shift_fit(int l, int m, ModeBC bc,
                        const std::vector<double>& e_samples = {0.02, 0.04, 0.06, 0.08},
                        int n = 1);

// sum over l <= l_max, |m| <= l, n <= n_max of
// z(e)^{-s} - z0^{-s} (1 - s c e^2) at s = 3, and an e^4 bound for it.
std::pair<double, double> energy_difference_check(ModeBC bc, int l_max, int n_max,
                                                  double e, double s = 3.0);

}  // namespace casimir::modes
