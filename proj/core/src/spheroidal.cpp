#include "casimir/spheroidal.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "casimir/errors.hpp"
#include "casimir/specfun.hpp"

namespace casimir::spheroidal {

namespace {

// Three-term recurrence for the Flammer d-coefficients, indexed by k with
// r = l - |m| + 2k and n = l + 2k:
//   sub_k d_{k-1} + (diag_k - lambda) d_k + sup_k d_{k+1} = 0.
struct Recurrence {
  int l, ma;
  double g2;

  double diag(int k) const {
    const double n = l + 2.0 * k;
    return n * (n + 1.0) + (2.0 * n * (n + 1.0) - 2.0 * ma * ma - 1.0) * g2 /
                               ((2.0 * n - 1.0) * (2.0 * n + 3.0));
  }
  double sup(int k) const {
    const double r = l - ma + 2.0 * k;
    return (2.0 * ma + r + 2.0) * (2.0 * ma + r + 1.0) * g2 /
           ((2.0 * ma + 2.0 * r + 3.0) * (2.0 * ma + 2.0 * r + 5.0));
  }
  double sub(int k) const {
    const double r = l - ma + 2.0 * k;
    return r * (r - 1.0) * g2 /
           ((2.0 * ma + 2.0 * r - 3.0) * (2.0 * ma + 2.0 * r - 1.0));
  }

  // Eigenvector at lambda with d_0 = 1, from the minimal-solution ratios
  // on each side of k = 0. Also returns the row-0 mismatch.
  std::vector<double> vector_at(double lam, int kmin, int kmax,
                                double* row0 = nullptr) const {
    std::vector<double> d(kmax - kmin + 1, 0.0);
    auto at = [&](int k) -> double& { return d[k - kmin]; };
    std::vector<double> up(kmax + 2, 0.0);  // up[k] = d_k / d_{k-1}
    for (int k = kmax; k >= 1; --k)
      up[k] = -sub(k) / (diag(k) - lam + sup(k) * up[k + 1]);
    std::vector<double> dn(-kmin + 1, 0.0);  // dn[-k] = d_k / d_{k+1}
    double prev = 0.0;
    for (int k = kmin; k <= -1; ++k) {
      const double v = -sup(k) / (diag(k) - lam + sub(k) * prev);
      dn[-k] = v;
      prev = v;
    }
    at(0) = 1.0;
    for (int k = 1; k <= kmax; ++k) at(k) = at(k - 1) * up[k];
    for (int k = -1; k >= kmin; --k) at(k) = at(k + 1) * dn[-k];
    if (row0) {
      *row0 = diag(0) - lam + (kmax >= 1 ? sup(0) * up[1] : 0.0) +
              (kmin <= -1 ? sub(0) * dn[1] : 0.0);
    }
    return d;
  }
};

// N_n^m / N_l^m for m = +ma, as a ratio of factorials.
double norm_ratio(int n, int l, int ma) {
  const double lf = std::lgamma(n + ma + 1.0) - std::lgamma(n - ma + 1.0) -
                    std::lgamma(l + ma + 1.0) + std::lgamma(l - ma + 1.0);
  return (2.0 * l + 1.0) / (2.0 * n + 1.0) * std::exp(lf);
}

double a0_share(const std::vector<double>& d, int kmin, int l, int ma) {
  double total = 0.0;
  for (size_t i = 0; i < d.size(); ++i) {
    const int n = l + 2 * (static_cast<int>(i) + kmin);
    total += d[i] * d[i] * norm_ratio(n, l, ma);
  }
  return d[-kmin] * d[-kmin] / total;
}

}  // namespace

EigenDecomp lambda_eigenvalue(int l, int m, double gamma2, double trunc_tol) {
  if (l < 0 || std::abs(m) > l)
    throw std::domain_error("invalid mode index (l, m)");
  if (!(gamma2 >= 0.0) || !std::isfinite(gamma2))
    throw std::domain_error("gamma2 must be finite and >= 0");
  if (!(trunc_tol > 0.0)) throw std::domain_error("trunc_tol must be > 0");

  const int ma = std::abs(m);
  EigenDecomp out;
  out.index = {l, m};
  out.gamma2 = gamma2;
  out.k_min = -((l - ma) / 2);

  if (gamma2 == 0.0) {
    out.lambda = static_cast<double>(l) * (l + 1);
    out.k_max = 0;
    out.coeffs.assign(-out.k_min + 1, 0.0);
    out.coeffs[-out.k_min] = 1.0;
    return out;
  }

  const Recurrence rec{l, ma, gamma2};
  const int kmin = out.k_min;
  int kmax = std::max(10, static_cast<int>(std::ceil(4.0 * std::sqrt(gamma2) + 10.0)));
  std::vector<double> d;
  double lam = 0.0;
  Eigen::VectorXd evals;
  for (int attempt = 0;; ++attempt) {
    const int size = kmax - kmin + 1;
    Eigen::VectorXd diag(size), off(size - 1);
    for (int k = kmin; k <= kmax; ++k) {
      diag[k - kmin] = rec.diag(k);
      if (k < kmax) off[k - kmin] = std::sqrt(rec.sup(k) * rec.sub(k + 1));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
    evals = solver.eigenvalues();
    // Branches of an irreducible symmetric tridiagonal never cross, so the
    // continuous branch keeps its position in the sorted spectrum.
    lam = evals[-kmin];
    // Secant polish on the row-0 condition.
    double g0;
    rec.vector_at(lam, kmin, kmax, &g0);
    double l1 = lam + 1e-9 * std::max(1.0, std::fabs(lam)), g1;
    rec.vector_at(l1, kmin, kmax, &g1);
    double l0 = lam;
    for (int it = 0; it < 30 && g1 != g0; ++it) {
      const double l2 = l1 - g1 * (l1 - l0) / (g1 - g0);
      l0 = l1;
      g0 = g1;
      l1 = l2;
      rec.vector_at(l1, kmin, kmax, &g1);
      if (std::fabs(l1 - l0) <= 1e-16 * std::max(1.0, std::fabs(l1))) break;
    }
    if (std::isfinite(l1) &&
        std::fabs(l1 - lam) <= 1e-8 * std::max(1.0, std::fabs(lam)))
      lam = l1;
    d = rec.vector_at(lam, kmin, kmax);
    double big = 0.0;
    for (double v : d) big = std::max(big, std::fabs(v));
    if (std::fabs(d.back()) <= trunc_tol * big) break;
    if (attempt == 6)
      throw ConvergenceError("spheroidal coefficient series not truncated",
                             std::fabs(d.back()) / big);
    kmax *= 2;
  }
  out.k_max = kmax;
  out.lambda = lam;

  double worst = 0.0;
  for (int k = kmin; k < kmax; ++k) {
    const double dm = k > kmin ? d[k - 1 - kmin] : 0.0;
    const double dk = d[k - kmin], dp = d[k + 1 - kmin];
    const double res = rec.sub(k) * dm + (rec.diag(k) - lam) * dk + rec.sup(k) * dp;
    const double scale = std::fabs(rec.sub(k) * dm) + std::fabs(rec.diag(k) * dk) +
                         std::fabs(lam * dk) + std::fabs(rec.sup(k) * dp);
    if (scale > 0.0) worst = std::max(worst, std::fabs(res) / scale);
  }
  out.residual = worst;

  out.a0_weight = a0_share(d, kmin, l, ma);
  const int sel = -kmin;
  for (int nb : {sel - 1, sel + 1}) {
    if (nb < 0 || nb >= evals.size()) continue;
    const double w = a0_share(rec.vector_at(evals[nb], kmin, kmax), kmin, l, ma);
    if (w >= 0.9 * out.a0_weight)
      throw BranchAmbiguity("eigen branch ambiguous at (l=" + std::to_string(l) +
                            ", m=" + std::to_string(m) + ", gamma2=" +
                            std::to_string(gamma2) + ")");
  }

  // Sign convention a_k = (-1)^k d_k, then the a^{-m} rescaling and
  // the normalization for the signed m.
  out.coeffs.resize(d.size());
  double norm = 0.0;
  for (int k = kmin; k <= kmax; ++k) {
    const int n = l + 2 * k;
    double a = (k % 2 ? -1.0 : 1.0) * d[k - kmin];
    double ratio = norm_ratio(n, l, ma);
    if (m < 0) {
      const double f = std::exp(std::lgamma(n + ma + 1.0) - std::lgamma(n - ma + 1.0) -
                                std::lgamma(l + ma + 1.0) + std::lgamma(l - ma + 1.0));
      a *= f;
      ratio = (2.0 * l + 1.0) / (2.0 * n + 1.0) / f;
    }
    out.coeffs[k - kmin] = a;
    norm += a * a * ratio;
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (double& a : out.coeffs) a *= scale;
  return out;
}

double ps_angular(const EigenDecomp& dc, double eta) {
  const int l = dc.index.l;
  const auto P = specfun::assoc_legendre_array(l + 2 * dc.k_max, dc.index.m, eta);
  double sum = 0.0;
  for (int k = dc.k_min; k <= dc.k_max; ++k)
    sum += (k % 2 ? -1.0 : 1.0) * dc.a(k) * P[l + 2 * k];
  return sum;
}

double ps_angular_approx(int l, int m, double eta, double gamma2) {
  const auto P = specfun::assoc_legendre_array(l + 2, m, eta);
  const double lo = l >= 2 ? P[l - 2] : 0.0;
  const double c_lo = (l + m - 1.0) * (l + m) /
                      (2.0 * (2 * l - 1.0) * (2 * l - 1.0) * (2 * l + 1.0));
  const double c_hi = (l - m + 1.0) * (l - m + 2.0) /
                      (2.0 * (2 * l + 1.0) * (2 * l + 3.0) * (2 * l + 3.0));
  return P[l] + gamma2 * (c_lo * lo - c_hi * P[l + 2]);
}

namespace {

// sum_k a_k y_{l+2k}(x) and its x-derivative. The terms only fall off like
// xi^{-2k}, far past the eigenvector truncation, so the series runs on a
// product a_k y_n carried through ratios: a_{k+1}/a_k from the recurrence
// (continued fraction from above), y_{n+1}/y_n by upward recurrence.
std::pair<double, double> y_series(const EigenDecomp& dc, double x, bool derivative) {
  const int l = dc.index.l, ma = std::abs(dc.index.m);
  const Recurrence rec{l, ma, dc.gamma2};
  const int n0 = l + 2 * dc.k_min;
  const auto y0 = specfun::sph_bessel_y_array(n0 + 1, x);
  double q_prev = n0 > 0 ? y0[n0] / y0[n0 - 1] : 0.0;  // y_n / y_{n-1}
  double q = y0[n0 + 1] / y0[n0];                        // y_{n+1} / y_n
  double term = dc.a(dc.k_min) * y0[n0];

  for (int extra = 64;; extra *= 2) {
    if (extra > 1 << 16) throw ConvergenceError("kind-3 radial series did not converge", term);
    const int ktop = dc.k_max + extra;
    // up[k - k_max - 1] = d_k / d_{k-1} for k > k_max.
    std::vector<double> up(extra, 0.0);
    double next = 0.0;
    for (int k = ktop; k > dc.k_max; --k) {
      next = -rec.sub(k) / (rec.diag(k) - dc.lambda + rec.sup(k) * next);
      up[k - dc.k_max - 1] = next;
    }
    double s = 0.0, ds = 0.0, t = term, qp = q_prev, qq = q;
    bool done = false;
    for (int k = dc.k_min; k <= ktop; ++k) {
      const int n = l + 2 * k;
      s += t;
      if (derivative) ds += t * ((n > 0 ? n / qp : 0.0) - (n + 1.0) * qq) / (2.0 * n + 1.0);
      if (k > dc.k_max + 2 && std::fabs(t) <= 1e-17 * std::fabs(s)) {
        done = true;
        break;
      }
      if (k == ktop) break;
      // Advance y by two orders and a by one step.
      const double q1 = (2.0 * n + 3.0) / x - 1.0 / qq;  // y_{n+2} / y_{n+1}
      const double ratio_y = qq * q1;
      qp = q1;
      qq = (2.0 * n + 5.0) / x - 1.0 / q1;
      double ratio_a;
      if (k + 1 <= dc.k_max) {
        ratio_a = dc.a(k + 1) / dc.a(k);
      } else {
        const double f = dc.index.m < 0
                             ? (n + 2.0 + ma) * (n + 1.0 + ma) / ((n + 2.0 - ma) * (n + 1.0 - ma))
                             : 1.0;
        ratio_a = -up[k - dc.k_max] * f;
      }
      t *= ratio_a * ratio_y;
      if (!std::isfinite(t)) break;
    }
    if (done) return {s, ds};
  }
}

struct RadialParts {
  std::complex<double> sum, dsum;  // series and its d/dx
  double pre, dpre;                // prefactor and d/dxi
};

RadialParts radial_parts(int kind, const EigenDecomp& dc, double xi,
                         bool derivative) {
  if (kind != 1 && kind != 3) throw std::invalid_argument("kind must be 1 or 3");
  if (!(xi >= 1.0)) throw std::domain_error("radial_S needs xi >= 1");
  const int l = dc.index.l;
  const int ma = std::abs(dc.index.m);
  const double x = std::sqrt(dc.gamma2) * xi;
  if (kind == 3 && x == 0.0)
    throw std::domain_error("kind-3 radial function singular at gamma*xi = 0");

  RadialParts p{};
  const double u = 1.0 - 1.0 / (xi * xi);
  p.pre = ma == 0 ? 1.0 : std::pow(u, 0.5 * ma);
  if (derivative && ma != 0) {
    if (ma == 1 && xi == 1.0)
      throw std::domain_error("d/dxi of the m = 1 prefactor diverges at xi = 1");
    p.dpre = ma / (xi * xi * xi) * std::pow(u, 0.5 * ma - 1.0);
  }

  const int nmax = l + 2 * dc.k_max + 1;
  const auto j = specfun::sph_bessel_j_array(nmax, x);
  double A = 0.0;
  for (int k = dc.k_min; k <= dc.k_max; ++k) {
    const int n = l + 2 * k;
    const double a = dc.a(k);
    A += (k % 2 ? -1.0 : 1.0) * a;
    p.sum += a * j[n];
    if (derivative) {
      const double lower = n > 0 ? n * j[n - 1] : 0.0;
      p.dsum += a * (lower - (n + 1.0) * j[n + 1]) / (2.0 * n + 1.0);
    }
  }
  if (kind == 3) {
    const auto y = y_series(dc, x, derivative);
    p.sum += std::complex<double>(0.0, y.first);
    p.dsum += std::complex<double>(0.0, y.second);
  }
  p.sum /= A;
  p.dsum /= A;
  return p;
}

}  // namespace

std::complex<double> radial_S(int kind, const EigenDecomp& neg_m, double xi) {
  if (neg_m.index.m != 0 && xi == 1.0) {
    if (kind != 1 && kind != 3) throw std::invalid_argument("kind must be 1 or 3");
    return 0.0;
  }
  const auto p = radial_parts(kind, neg_m, xi, false);
  return p.pre * p.sum;
}

std::complex<double> radial_S_dxi(int kind, const EigenDecomp& neg_m, double xi) {
  const auto p = radial_parts(kind, neg_m, xi, true);
  const double g = std::sqrt(neg_m.gamma2);
  return p.dpre * p.sum + p.pre * g * p.dsum;
}

std::complex<double> radial_S(int kind, int l, int m, double xi, double gamma2) {
  return radial_S(kind, lambda_eigenvalue(l, -std::abs(m), gamma2), xi);
}

std::complex<double> radial_S_dxi(int kind, int l, int m, double xi,
                                  double gamma2) {
  return radial_S_dxi(kind, lambda_eigenvalue(l, -std::abs(m), gamma2), xi);
}

double alpha_lm(int l, int m) {
  const double L = l * (l + 1.0);
  return (L + m * m - 1.0) / (4.0 * L - 3.0);
}

double beta_lm(int l, int m) {
  const double L = l * (l + 1.0);
  return (L - 3.0 * m * m) / (8.0 * L - 6.0);
}

double radial_S1_approx(int l, int m, double z, double e) {
  const double j = specfun::sph_bessel_j(l, z);
  const double jp = specfun::sph_bessel_j_prime(l, z);
  return j - e * e * (alpha_lm(l, m) * z * jp - (beta_lm(l, m) + 0.5 * m) * j);
}

}  // namespace casimir::spheroidal
