#include "casimir/modes.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "casimir/errors.hpp"
#include "casimir/specfun.hpp"
#include "casimir/spheroidal.hpp"
#include "parallel.hpp"

namespace casimir::modes {

std::string to_string(ModeBC bc) { return bc == ModeBC::dirichlet ? "dirichlet" : "neumann"; }

ModeBC parse_mode_bc(const std::string& s) {
  if (s == "dirichlet") return ModeBC::dirichlet;
  if (s == "neumann") return ModeBC::neumann;
  throw std::invalid_argument("mode boundary condition must be dirichlet or neumann");
}

namespace {

specfun::RootKind kind_of(ModeBC bc) {
  return bc == ModeBC::dirichlet ? specfun::RootKind::value : specfun::RootKind::derivative;
}

double boundary_function(int l, int m, double e, ModeBC bc, double z) {
  const auto dc = spheroidal::lambda_eigenvalue(l, -std::abs(m), z * z * e * e);
  const double xi = 1.0 / e;
  return bc == ModeBC::dirichlet ? spheroidal::radial_S(1, dc, xi).real()
                                 : spheroidal::radial_S_dxi(1, dc, xi).real();
}

}  // namespace

double predicted_shift(int l, int m, int n, ModeBC bc) {
  const double alpha = spheroidal::alpha_lm(l, m);
  if (bc == ModeBC::dirichlet) return alpha;
  const double u0 = specfun::bessel_root(l, n, specfun::RootKind::derivative);
  return alpha - 2.0 * spheroidal::beta_lm(l, m) / (u0 * u0 - l * (l + 1.0));
}

FrequencyRoot spheroidal_root(int l, int m, int n, double e, ModeBC bc) {
  if (!(e > 0.0 && e <= 0.3)) throw std::domain_error("spheroidal_root needs 0 < e <= 0.3");
  if (l < 0 || std::abs(m) > l || n < 1) throw std::domain_error("invalid (l, m, n)");
  FrequencyRoot out{l, m, n, e, bc};
  const double z0 = specfun::bessel_root(l, n, kind_of(bc));
  const double c = predicted_shift(l, m, n, bc);
  const double zp = z0 * (1.0 + c * e * e);
  const double w = z0 * e * e * std::max(0.5, 2.0 * std::fabs(c));
  auto f = [&](double z) { return boundary_function(l, m, e, bc, z); };

  double lo = zp - w, hi = zp + w;
  double flo = f(lo), fhi = f(hi);
  if ((flo > 0) == (fhi > 0))
    throw BracketError("spheroidal root left the perturbative bracket", lo, hi);
  // Residual is reported as the implied relative error in z, |f| / (|f'| z),
  // with the slope taken across the initial bracket.
  const double slope = std::fabs(fhi - flo) / (hi - lo);

  // Secant from the prediction, falling back to bisection whenever a step
  // leaves the current bracket.
  double x0 = zp, f0 = f(x0);
  double x1 = zp + 1e-3 * w, f1 = f(x1);
  double z = x1, fz = f1;
  int it = 0;
  for (; it < 100; ++it) {
    for (auto [x, fx] : {std::pair{x0, f0}, std::pair{x1, f1}}) {
      if (fx == 0.0) continue;
      if ((fx > 0) == (flo > 0)) {
        if (x > lo) lo = x, flo = fx;
      } else if (x < hi) {
        hi = x;
      }
    }
    if (f1 == 0.0) {
      z = x1;
      fz = 0.0;
      break;
    }
    double xn = f1 != f0 ? x1 - f1 * (x1 - x0) / (f1 - f0) : 0.5 * (lo + hi);
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    const double fn = f(xn);
    const bool done = std::fabs(xn - x1) <= 1e-12;
    x0 = x1, f0 = f1;
    x1 = xn, f1 = fn;
    z = xn, fz = fn;
    if (done) break;
  }
  out.z = z;
  out.iterations = it + 1;
  out.solver_residual = std::fabs(fz) / (slope * z);
  if (out.solver_residual > 1e-10)
    throw NumericalError("spheroidal root residual above 1e-10");
  return out;
}

double ShiftFit::abs_err() const { return std::fabs(c_fit - c_pred); }

ShiftFit root_shift_fit(int l, int m, ModeBC bc, const std::vector<double>& e_samples, int n) {
  if (e_samples.size() < 3) throw std::invalid_argument("need at least 3 ellipticities");
  for (double e : e_samples)
    if (!(e > 0.0 && e <= 0.1)) throw std::invalid_argument("fit ellipticities must be in (0, 0.1]");
  ShiftFit fit;
  fit.l = l, fit.m = m, fit.n = n, fit.bc = bc;
  fit.e_samples = e_samples;
  fit.z0 = specfun::bessel_root(l, n, kind_of(bc));
  fit.c_pred = predicted_shift(l, m, n, bc);

  const int N = static_cast<int>(e_samples.size());
  std::vector<double> z(N);
  detail::parallel_for(N, 0, [&](int i) { z[i] = spheroidal_root(l, m, n, e_samples[i], bc).z; });
  Eigen::MatrixXd A(N, 2);
  Eigen::VectorXd b(N);
  for (int i = 0; i < N; ++i) {
    const double e2 = e_samples[i] * e_samples[i];
    A(i, 0) = e2;
    A(i, 1) = e2 * e2;
    b[i] = z[i] / fit.z0 - 1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto sv = svd.singularValues();
  if (sv[1] <= 1e-12 * sv[0]) throw NumericalError("ill-conditioned shift fit");
  const Eigen::VectorXd coef = svd.solve(b);
  fit.c_fit = coef[0];
  fit.d_fit = coef[1];
  return fit;
}

std::pair<double, double> energy_difference_check(ModeBC bc, int l_max, int n_max, double e,
                                                  double s) {
  if (l_max < 0 || n_max < 1) throw std::invalid_argument("invalid cutoffs");
  if (e == 0.0) return {0.0, 0.0};
  struct Task {
    int l, m, n;
  };
  std::vector<Task> tasks;
  for (int l = 0; l <= l_max; ++l)
    for (int m = -l; m <= l; ++m)
      for (int n = 1; n <= n_max; ++n) tasks.push_back({l, m, n});
  const int N = static_cast<int>(tasks.size());
  std::vector<double> diff(N), bound(N);
  detail::parallel_for(N, 0, [&](int i) {
    const auto& t = tasks[i];
    const double z0 = specfun::bessel_root(t.l, t.n, kind_of(bc));
    const double c = predicted_shift(t.l, t.m, t.n, bc);
    const double z = spheroidal_root(t.l, t.m, t.n, e, bc).z;
    const double base = std::pow(z0, -s);
    diff[i] = std::pow(z, -s) - base * (1.0 - s * c * e * e);
    // Second-order Taylor term plus room for an O(1) quartic shift.
    bound[i] = std::pow(e, 4) * base * (0.5 * s * (s + 1.0) * c * c + s);
  });
  return {detail::pairwise_sum(diff), detail::pairwise_sum(bound)};
}

}  // namespace casimir::modes
