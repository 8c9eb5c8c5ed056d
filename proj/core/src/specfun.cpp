#include "casimir/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "casimir/errors.hpp"

namespace casimir::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_order(int l) {
  if (l < 0) throw std::domain_error("negative Bessel order");
}

// Downward recurrence from well above max(lmax, x), normalized with the
// sum rule sum_n (2n+1) j_n(x)^2 = 1. The sum rule has no zeros, unlike
// normalizing on j_0.
std::vector<double> j_miller(int lmax, double x) {
  const int top = lmax + 20 +
                  static_cast<int>(std::sqrt(50.0 * (lmax + 1) + 4.0 * x)) +
                  static_cast<int>(x);
  std::vector<double> out(lmax + 1, 0.0);
  double f_next = 0.0, f = 1e-30;
  double big = f, sum = 0.0;
  for (int n = top; n >= 0; --n) {
    if (n <= lmax) out[n] = f;
    sum += (2.0 * n + 1.0) * f * f;
    const double f_prev = (2.0 * n + 1.0) / x * f - f_next;
    f_next = f;
    f = f_prev;
    big = std::fabs(f);
    if (big > 1e100) {
      f *= 1e-100;
      f_next *= 1e-100;
      sum *= 1e-200;
      for (int k = std::max(n - 1, 0); k <= lmax; ++k) out[k] *= 1e-100;
    }
  }
  double norm = 1.0 / std::sqrt(sum);
  // Fix the sign on whichever of j_0, j_1 is farther from a zero.
  const double j0 = std::sin(x) / x;
  const double j1 = std::sin(x) / (x * x) - std::cos(x) / x;
  if (std::fabs(j0) >= std::fabs(j1) || lmax == 0) {
    if (out[0] * j0 < 0) norm = -norm;
  } else if (out[1] * j1 < 0) {
    norm = -norm;
  }
  for (double& v : out) v *= norm;
  return out;
}

}  // namespace

std::vector<double> sph_bessel_j_array(int lmax, double x) {
  check_order(lmax);
  if (!std::isfinite(x)) throw std::domain_error("non-finite argument");
  std::vector<double> out(lmax + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  if (x < 0.0) {
    out = sph_bessel_j_array(lmax, -x);
    for (int n = 1; n <= lmax; n += 2) out[n] = -out[n];
    return out;
  }
  if (x >= lmax) {
    out[0] = std::sin(x) / x;
    if (lmax == 0) return out;
    out[1] = std::sin(x) / (x * x) - std::cos(x) / x;
    for (int n = 1; n < lmax; ++n)
      out[n + 1] = (2.0 * n + 1.0) / x * out[n] - out[n - 1];
    return out;
  }
  return j_miller(lmax, x);
}

double sph_bessel_j(int l, double x) { return sph_bessel_j_array(l, x)[l]; }

double sph_bessel_j_prime(int l, double x) {
  auto j = sph_bessel_j_array(l + 1, x);
  const double lower = l > 0 ? l * j[l - 1] : 0.0;
  return (lower - (l + 1.0) * j[l + 1]) / (2.0 * l + 1.0);
}

std::vector<double> sph_bessel_y_array(int lmax, double x) {
  check_order(lmax);
  if (x == 0.0 || !std::isfinite(x))
    throw std::domain_error("y_l is singular at x = 0");
  if (x < 0.0) {
    auto out = sph_bessel_y_array(lmax, -x);
    for (int n = 0; n <= lmax; n += 2) out[n] = -out[n];
    return out;
  }
  std::vector<double> out(lmax + 1);
  out[0] = -std::cos(x) / x;
  if (lmax == 0) return out;
  out[1] = -std::cos(x) / (x * x) - std::sin(x) / x;
  // Upward recurrence is stable for the dominant solution.
  for (int n = 1; n < lmax; ++n)
    out[n + 1] = (2.0 * n + 1.0) / x * out[n] - out[n - 1];
  return out;
}

double sph_bessel_y(int l, double x) { return sph_bessel_y_array(l, x)[l]; }

double sph_bessel_y_prime(int l, double x) {
  auto y = sph_bessel_y_array(l + 1, x);
  const double lower = l > 0 ? l * y[l - 1] : 0.0;
  return (lower - (l + 1.0) * y[l + 1]) / (2.0 * l + 1.0);
}

std::complex<double> sph_hankel1(int l, double x) {
  const double y = sph_bessel_y(l, x);
  return {sph_bessel_j(l, x), y};
}

std::complex<double> sph_hankel1_prime(int l, double x) {
  const double yp = sph_bessel_y_prime(l, x);
  return {sph_bessel_j_prime(l, x), yp};
}

double sph_bessel_i_ratio(int l, double x) {
  check_order(l);
  if (x == 0.0) return 0.0;
  if (x < 0.0) return -sph_bessel_i_ratio(l, -x);
  // Modified Lentz on x/(2l+3 + x^2/(2l+5 + x^2/(2l+7 + ...))).
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  double f = tiny, C = f, D = 0.0;
  const double x2 = x * x;
  const int max_iter = 1000 + 4 * static_cast<int>(x) + 2 * l;
  for (int j = 1; j <= max_iter; ++j) {
    const double a = j == 1 ? x : x2;
    const double b = 2.0 * l + 2.0 * j + 1.0;
    D = b + a * D;
    if (D == 0.0) D = tiny;
    C = b + a / C;
    if (C == 0.0) C = tiny;
    D = 1.0 / D;
    const double delta = C * D;
    f *= delta;
    if (std::fabs(delta - 1.0) < eps) return f;
  }
  throw NumericalError("continued fraction for i_{l+1}/i_l did not converge");
}

double sph_bessel_i_logderiv(int l, double x) {
  if (x <= 0.0) throw std::domain_error("log-derivative needs x > 0");
  return l / x + sph_bessel_i_ratio(l, x);
}

double sph_bessel_i(int l, double x) {
  check_order(l);
  if (x == 0.0) return l == 0 ? 1.0 : 0.0;
  if (x < 0.0) return (l % 2 ? -1.0 : 1.0) * sph_bessel_i(l, -x);
  // Ratios r_k = i_{k+1}/i_k: one continued fraction at the top, then the
  // stable downward recurrence r_{k-1} = 1/((2k+1)/x + r_k).
  std::vector<double> r(l);
  if (l > 0) {
    r[l - 1] = sph_bessel_i_ratio(l - 1, x);
    for (int k = l - 1; k >= 1; --k) r[k - 1] = 1.0 / ((2.0 * k + 1.0) / x + r[k]);
  }
  if (x < 700.0) {
    double v = std::sinh(x) / x;
    for (double rk : r) v *= rk;
    return v;
  }
  double lg = x - std::log(2.0 * x) + std::log1p(-std::exp(-2.0 * x));
  for (double rk : r) lg += std::log(rk);
  if (lg > std::log(std::numeric_limits<double>::max()))
    throw std::overflow_error("i_l(x) exceeds double range at x = " +
                              std::to_string(x));
  return std::exp(lg);
}

double sph_bessel_k_logderiv(int l, double x) {
  check_order(l);
  if (x <= 0.0) throw std::domain_error("log-derivative needs x > 0");
  // rho_k = k_{k+1}/k_k grows with k, so upward is stable.
  double rho = 1.0 + 1.0 / x;
  for (int k = 1; k <= l; ++k) rho = (2.0 * k + 1.0) / x + 1.0 / rho;
  return l / x - rho;
}

std::vector<double> assoc_legendre_array(int nmax, int m, double eta) {
  if (std::fabs(eta) > 1.0)
    throw std::domain_error("assoc_legendre needs |eta| <= 1");
  std::vector<double> out(nmax + 1, 0.0);
  const int ma = std::abs(m);
  if (ma > nmax) return out;
  double pmm = 1.0;
  const double somx2 = std::sqrt((1.0 - eta) * (1.0 + eta));
  double fact = 1.0;
  for (int i = 1; i <= ma; ++i) {
    pmm *= -fact * somx2;
    fact += 2.0;
  }
  out[ma] = pmm;
  if (ma < nmax) out[ma + 1] = eta * (2.0 * ma + 1.0) * pmm;
  for (int n = ma + 2; n <= nmax; ++n)
    out[n] = ((2.0 * n - 1.0) * eta * out[n - 1] - (n + ma - 1.0) * out[n - 2]) /
             (n - ma);
  if (m < 0) {
    const double sign = ma % 2 ? -1.0 : 1.0;
    for (int n = ma; n <= nmax; ++n) {
      double ratio = 1.0;  // (n-ma)!/(n+ma)!
      for (int j = n - ma + 1; j <= n + ma; ++j) ratio /= j;
      out[n] *= sign * ratio;
    }
  }
  return out;
}

double assoc_legendre(int l, int m, double eta) {
  check_order(l);
  return assoc_legendre_array(l, m, eta)[l];
}

namespace {

double bisect_polish(int l, double lo, double hi, RootKind kind) {
  auto f = [&](double x) {
    return kind == RootKind::value ? sph_bessel_j(l, x)
                                   : sph_bessel_j_prime(l, x);
  };
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0))
    throw BracketError("no sign change bracketing Bessel root", lo, hi);
  const double a0 = lo, b0 = hi;
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  // One Newton step; j'' from the Bessel equation.
  const double j = sph_bessel_j(l, x);
  const double jp = sph_bessel_j_prime(l, x);
  double step;
  if (kind == RootKind::value) {
    step = j / jp;
  } else {
    const double jpp = -2.0 / x * jp + (l * (l + 1.0) / (x * x) - 1.0) * j;
    step = jp / jpp;
  }
  const double xn = x - step;
  if (std::isfinite(xn) && xn > a0 && xn < b0) x = xn;
  return x;
}

// First `count` zeros of j_l, built up from j_0 by interlacing:
// j_{l-1,n} < j_{l,n} < j_{l-1,n+1}.
std::vector<double> value_roots(int l, int count) {
  std::vector<double> prev(count + l);
  for (int n = 0; n < count + l; ++n) prev[n] = (n + 1) * kPi;
  for (int k = 1; k <= l; ++k) {
    const int c = count + l - k;
    std::vector<double> cur(c);
    for (int n = 0; n < c; ++n)
      cur[n] = bisect_polish(k, prev[n], prev[n + 1], RootKind::value);
    prev.swap(cur);
  }
  return prev;
}

}  // namespace

double bessel_root(int l, int n, RootKind kind) {
  check_order(l);
  if (n < 1) throw std::domain_error("root index n must be >= 1");
  if (kind == RootKind::value) return value_roots(l, n).back();
  // j_0' = -j_1, so its zeros are those of j_1.
  if (l == 0) return value_roots(1, n).back();
  // One zero of j_l' before the first zero of j_l and one between each
  // consecutive pair. j_l' > 0 on (0, l].
  const auto z = value_roots(l, n);
  const double lo = n == 1 ? static_cast<double>(l) : z[n - 2];
  return bisect_polish(l, lo, z[n - 1], RootKind::derivative);
}

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0) || !(a > 0.0))
    throw std::domain_error("hurwitz_zeta needs s > 1 and a > 0");
  // Euler-Maclaurin with the direct sum carried until k + a >= 25.
  const int N = a >= 25.0 ? 0 : static_cast<int>(std::ceil(25.0 - a));
  double sum = 0.0;
  for (int k = 0; k < N; ++k) sum += std::pow(k + a, -s);
  const double w = N + a;
  sum += std::pow(w, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(w, -s);
  static const double B2j[] = {1.0 / 6,    -1.0 / 30,     1.0 / 42,
                               -1.0 / 30,  5.0 / 66,      -691.0 / 2730,
                               7.0 / 6,    -3617.0 / 510};
  double poch = s;  // s (s+1) ... (s+2j-2)
  double fact = 2.0;  // (2j)!
  double wp = std::pow(w, -s - 1.0);
  for (int j = 1; j <= 8; ++j) {
    sum += B2j[j - 1] / fact * poch * wp;
    poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    wp /= w * w;
  }
  return sum;
}

}  // namespace casimir::specfun
