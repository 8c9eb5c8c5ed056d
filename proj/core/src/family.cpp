#include <Eigen/QR>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/specfun.hpp"
#include "casimir/zeta_family.hpp"
#include "parallel.hpp"

namespace casimir::zeta {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr const char* kScaleNote = "zeta(s) = sum (omega a)^(-s), mu*a = 1";

struct Term {
  int k;
  double x;
};
using Order = std::vector<Term>;

// Cumulants of the uniform expansion: log of the Debye series gives
// sum_n P_n(tau)/nu^n with tau = 1/sqrt(1+t^2). Index 0 is order 1.
const std::vector<Order> kDirichlet = {
    {{1, 1.0 / 8}, {3, -5.0 / 24}},
    {{2, 1.0 / 16}, {4, -3.0 / 8}, {6, 5.0 / 16}},
    {{3, 25.0 / 384}, {5, -531.0 / 640}, {7, 221.0 / 128}, {9, -1105.0 / 1152}},
    {{4, 13.0 / 128}, {6, -71.0 / 32}, {8, 531.0 / 64}, {10, -339.0 / 32}, {12, 565.0 / 128}},
};
// F = I' + I/(2y), i.e. (y i_l)'.
const std::vector<Order> kRobinPlus = {
    {{1, 1.0 / 8}, {3, 7.0 / 24}},
    {{2, -1.0 / 16}, {4, 3.0 / 8}, {6, -7.0 / 16}},
    {{3, -23.0 / 384}, {5, 549.0 / 640}, {7, -259.0 / 128}, {9, 1463.0 / 1152}},
    {{4, -13.0 / 128}, {6, 73.0 / 32}, {8, -585.0 / 64}, {10, 399.0 / 32}, {12, -707.0 / 128}},
};
// F = I' - I/(2y), i.e. i_l'.
const std::vector<Order> kRobinMinus = {
    {{1, -7.0 / 8}, {3, 7.0 / 24}},
    {{2, -9.0 / 16}, {4, 7.0 / 8}, {6, -7.0 / 16}},
    {{3, -199.0 / 384}, {5, 1349.0 / 640}, {7, -371.0 / 128}, {9, 1463.0 / 1152}},
    {{4, -77.0 / 128}, {6, 169.0 / 32}, {8, -913.0 / 64}, {10, 483.0 / 32}, {12, -707.0 / 128}},
};

// Large-nu form of d/dt log F(nu t):
//   sg nu (sqrt(1+t^2) - 1)/t + cb t/(1+t^2) + sum_n sg^n P_n'(t)/nu^n
// where sg = -1 outside (nu -> -nu).
struct Asym {
  double sg;
  double cb;
  const std::vector<Order>* P;
};

Asym asym_for(Family f, Side side) {
  const double sg = side == Side::interior ? 1.0 : -1.0;
  switch (f) {
    case Family::dirichlet: return {sg, -0.5, &kDirichlet};
    case Family::neumann: return {sg, 0.5, &kRobinMinus};
    case Family::tm: return {sg, 0.5, &kRobinPlus};
  }
  throw std::logic_error("family");
}

// Power of t removed at the origin so the log-derivative has no 1/t term
// there. The Neumann l = 0 zero mode is handled by keeping the generic
// value: the leftover constant in t*R(t) integrates to nothing singular.
double p_generic(Family f, Side side, int l) {
  if (side == Side::interior) return f == Family::neumann ? l - 1.0 : l;
  return f == Family::neumann ? -l - 2.0 : -l - 1.0;
}

// The remainder integrand is a difference of two terms of size nu*t, so
// both sides are formed in extended precision.
using ld = long double;

// i_{l+1}/i_l by modified Lentz.
ld i_ratio_ext(int l, ld x) {
  constexpr ld tiny = 1e-300L;
  const ld eps = std::numeric_limits<ld>::epsilon();
  ld f = tiny, C = f, D = 0.0L;
  const ld x2 = x * x;
  const int max_iter = 2000 + 4 * static_cast<int>(x) + 2 * l;
  for (int j = 1; j <= max_iter; ++j) {
    const ld a = j == 1 ? x : x2;
    const ld b = 2.0L * l + 2.0L * j + 1.0L;
    D = b + a * D;
    if (D == 0.0L) D = tiny;
    C = b + a / C;
    if (C == 0.0L) C = tiny;
    D = 1.0L / D;
    const ld delta = C * D;
    f *= delta;
    if (std::fabs(delta - 1.0L) < eps) return f;
  }
  throw NumericalError("continued fraction for i_{l+1}/i_l did not converge");
}

// y k_l'(y)/k_l(y) by the upward ratio recurrence.
ld k_dlog_ext(int l, ld y) {
  ld rho = 1.0L + 1.0L / y;
  for (int k = 1; k <= l; ++k) rho = (2.0L * k + 1.0L) / y + 1.0L / rho;
  return l - y * rho;
}

// y d/dy log F(y).
ld y_dlog(Family f, Side side, int l, ld y) {
  const ld L = l * (l + 1.0L);
  if (side == Side::interior && f == Family::neumann && l == 0)
    return 1.0L + y * i_ratio_ext(1, y);  // i_0' = i_1
  // w = y F0'/F0 for the undifferentiated function.
  const ld w = side == Side::interior ? l + y * i_ratio_ext(l, y) : k_dlog_ext(l, y);
  switch (f) {
    case Family::dirichlet: return w;
    case Family::neumann: return -2.0L + (y * y + L) / w;
    case Family::tm: return (y * y + L) / (1.0L + w);
  }
  return 0.0L;
}

ld t_asym(const Asym& a, ld nu, ld t, int through) {
  const ld t2 = t * t;
  const ld r = std::sqrt(1.0L + t2);
  const ld tau = 1.0L / r;
  ld v = a.sg * nu * t2 / (r + 1.0L) + a.cb * t2 / (1.0L + t2);
  ld sgn = 1.0L, nun = 1.0L;
  for (int n = 1; n <= through; ++n) {
    sgn *= a.sg;
    nun /= nu;
    ld s = 0.0L;
    for (const auto& term : (*a.P)[n - 1])
      s += term.x * -term.k * std::pow(tau, static_cast<ld>(term.k + 2));
    v += sgn * nun * t2 * s;
  }
  return v;
}

// int_T^inf t * d/dt P_4(tau) dt.
double tail_integral(const Order& P4, double T) {
  using boost::math::quadrature::gauss_kronrod;
  double sum = 0.0;
  for (const auto& term : P4) {
    const int k = term.k;
    auto f = [k](double u) { return std::pow(u, k - 2) * std::pow(1.0 + u * u, -0.5 * k - 1.0); };
    sum += term.x * -k * gauss_kronrod<double, 15>::integrate(f, 0.0, 1.0 / T, 5, 1e-14);
  }
  return sum;
}

double tmax_for(double nu) { return std::max(40.0, 800.0 / nu); }

double alpha_of_nu(double nu) { return 0.25 - 1.0 / (16.0 * (nu * nu - 1.0)); }

double weight_of(Weight w, double nu) {
  return 2.0 * nu * (w == Weight::zonal ? alpha_of_nu(nu) : 1.0);
}

// sum_{l >= lmin} 2 nu^{1-x}, via zeta_H(a, 1/2) = (2^a - 1) zeta(a).
double W_unit(double x, int lmin) {
  const double a = x - 1.0;
  double v = 2.0 * (std::pow(2.0, a) - 1.0) * std::riemann_zeta(a);
  for (int l = 0; l < lmin; ++l) v -= 2.0 * std::pow(l + 0.5, 1.0 - x);
  return v;
}

// sum_l 2 nu alpha(nu) nu^{-x}; 1/(nu^2-1) expanded in nu^{-2} for l >= 1,
// remainder summed directly (it decays like nu^{-10}).
double W_zonal(double x, int lmin) {
  constexpr int K = 5;
  double V = 0.0;
  if (lmin == 0) V += 2.0 * std::pow(0.5, 1.0 - x) / (0.25 - 1.0);
  const int l1 = std::max(lmin, 1);
  for (int k = 1; k <= K; ++k) V += W_unit(x + 2.0 * k, l1);
  double rem = 0.0;
  for (int l = 4000; l >= l1; --l) {
    const double nu = l + 0.5;
    rem += 2.0 * std::pow(nu, 1.0 - x - 2.0 * K) / (nu * nu - 1.0);
  }
  return 0.25 * W_unit(x, lmin) - V / 16.0 + -rem / 16.0;
}

double closed_part(const FamilySpec& spec, double s) {
  const Asym a = asym_for(spec.family, spec.side);
  auto W = [&](double x) {
    if (spec.l_only >= 0) {
      const double nu = spec.l_only + 0.5;
      return weight_of(spec.weight, nu) * std::pow(nu, -x);
    }
    return spec.weight == Weight::zonal ? W_zonal(x, spec.l_min) : W_unit(x, spec.l_min);
  };
  const double gs2 = std::tgamma(0.5 * s);
  double v = a.sg * std::tgamma(0.5 * (s - 1.0)) / (2.0 * std::sqrt(kPi) * s * gs2) * W(s - 1.0);
  v += 0.5 * a.cb * W(s);
  double sgn = 1.0;
  for (int n = 1; n <= 3; ++n) {
    sgn *= a.sg;
    double c = 0.0;
    for (const auto& t : (*a.P)[n - 1])
      c -= t.x * std::tgamma(0.5 * (t.k + s)) / (gs2 * std::tgamma(0.5 * t.k));
    v += sgn * c * W(s + n);
  }
  return v;
}

}  // namespace

double remainder_integrand(Family f, Side side, int l, double t) {
  if (f == Family::tm && l == 0) throw std::invalid_argument("TM modes start at l = 1");
  const double nu = l + 0.5;
  const Asym a = asym_for(f, side);
  const ld tt = t;
  return static_cast<double>(y_dlog(f, side, l, nu * tt) - p_generic(f, side, l) -
                             t_asym(a, nu, tt, 3));
}

double remainder_zeta(Family f, Side side, int l) {
  using boost::math::quadrature::gauss_kronrod;
  const double nu = l + 0.5;
  const double T = tmax_for(nu);
  const Asym a = asym_for(f, side);
  auto g = [&](double t) { return remainder_integrand(f, side, l, t); };

  // The rotated contour drops the arcs; check the integrand really has
  // settled to the next Debye order at the far end.
  const double far = g(T);
  const double predicted = t_asym(a, nu, T, 4) - t_asym(a, nu, T, 3);
  if (!std::isfinite(far) || std::fabs(far) > 3.0 * std::fabs(predicted) + 1e-10)
    throw NumericalError("remainder integrand has not decayed at t = " +
                         std::to_string(T) + " for l = " + std::to_string(l));
  if (!std::isfinite(g(1e-6))) throw NumericalError("remainder integrand not finite near 0");

  // The integrand is smooth on the scale of t, so fixed doubling panels with
  // one Kronrod rule each are enough; adaptive refinement only chases the
  // rounding floor of the far region.
  double I = 0.0, err = 0.0;
  double lo = 0.0, hi = 0.0625;
  while (true) {
    hi = std::min(hi, T);
    double e = 0.0;
    I += gauss_kronrod<double, 31>::integrate(g, lo, hi, 0, 0.0, &e);
    err += e;
    if (hi >= T) break;
    lo = hi;
    hi *= 2.0;
  }
  if (!(err <= 1e-6 * std::fabs(I) + 1e-13))
    throw NumericalError("remainder quadrature did not settle for l = " + std::to_string(l));
  I += std::pow(nu, -4.0) * tail_integral((*a.P)[3], T);
  return -nu / kPi * I;
}

LaurentAtMinusOne closed_laurent(const FamilySpec& spec, int order, double radius,
                                 int nodes) {
  auto z = laurent_at_minus_one([&](double s) { return closed_part(spec, s); }, order,
                                radius, nodes);
  z.scale_note = kScaleNote;
  return z;
}

FamilyResult family_zeta(const FamilySpec& spec, const SumOptions& opt, int order) {
  if (spec.family == Family::tm && (spec.l_only == 0 || (spec.l_only < 0 && spec.l_min < 1)))
    throw std::invalid_argument("TM modes start at l = 1");
  FamilyResult res;
  res.laurent = closed_laurent(spec, order);

  if (spec.l_only >= 0) {
    const double nu = spec.l_only + 0.5;
    res.per_l = {weight_of(spec.weight, nu) * remainder_zeta(spec.family, spec.side, spec.l_only)};
    res.laurent.c_0 += res.per_l[0];
    return res;
  }

  const int L = opt.l_max;
  const int count = L - spec.l_min;
  if (opt.fit_terms < 6 || count < opt.fit_terms)
    throw std::invalid_argument("l_max too small for the tail fit");
  res.per_l.assign(count, 0.0);
  detail::parallel_for(count, opt.threads, [&](int i) {
    const int l = spec.l_min + i;
    res.per_l[i] = weight_of(spec.weight, l + 0.5) * remainder_zeta(spec.family, spec.side, l);
  });

  // Tail of the l-sum: fit the last terms to b_0 nu^-2 + b_1 nu^-3 and sum
  // the fit with Hurwitz zeta from L on.
  constexpr int J = 2;
  const int nf = opt.fit_terms;
  const double nu_ref = L - 0.5;
  Eigen::MatrixXd A(nf, J);
  Eigen::VectorXd b(nf);
  for (int i = 0; i < nf; ++i) {
    const int idx = count - nf + i;
    const double nu = spec.l_min + idx + 0.5;
    for (int j = 0; j < J; ++j) A(i, j) = std::pow(nu / nu_ref, -2.0 - j);
    b[i] = res.per_l[idx];
  }
  const Eigen::VectorXd coef = A.colPivHouseholderQr().solve(b);
  double tail = 0.0;
  for (int j = 0; j < J; ++j)
    tail += coef[j] * std::pow(nu_ref, 2.0 + j) * specfun::hurwitz_zeta(2.0 + j, L + 0.5);
  res.l_tail = tail;
  res.laurent.tail_bound = std::fabs(tail);
  if (res.laurent.tail_bound > opt.tail_tol)
    throw ConvergenceError("l-sum tail above tolerance", res.laurent.tail_bound);
  res.laurent.c_0 += detail::pairwise_sum(res.per_l) + tail;
  return res;
}

}  // namespace casimir::zeta
