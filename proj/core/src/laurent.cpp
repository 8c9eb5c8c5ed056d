#include <cmath>
#include <stdexcept>

#include "casimir/zeta.hpp"

namespace casimir::zeta {

LaurentAtMinusOne operator+(const LaurentAtMinusOne& a, const LaurentAtMinusOne& b) {
  LaurentAtMinusOne r;
  r.c_m2 = a.c_m2 + b.c_m2;
  r.c_m1 = a.c_m1 + b.c_m1;
  r.c_0 = a.c_0 + b.c_0;
  r.scale_note = a.scale_note.empty() ? b.scale_note : a.scale_note;
  r.tail_bound = a.tail_bound + b.tail_bound;
  return r;
}

LaurentAtMinusOne operator*(double k, const LaurentAtMinusOne& a) {
  LaurentAtMinusOne r = a;
  r.c_m2 *= k;
  r.c_m1 *= k;
  r.c_0 *= k;
  r.tail_bound *= std::fabs(k);
  return r;
}

LaurentAtMinusOne times_minus_s(const LaurentAtMinusOne& a) {
  // -s = 1 - (s+1)
  LaurentAtMinusOne r = a;
  r.c_m1 = a.c_m1 - a.c_m2;
  r.c_0 = a.c_0 - a.c_m1;
  return r;
}

LaurentAtMinusOne laurent_at_minus_one(const std::function<double(double)>& f,
                                       int order, double radius, int nodes) {
  if (order < 0 || order > 2) throw std::invalid_argument("order must be 0..2");
  if (!(radius > 0.0 && radius < 1.0)) throw std::invalid_argument("radius in (0,1)");
  constexpr double pi = 3.14159265358979323846;
  const int N = nodes;
  std::vector<double> g(N);
  for (int j = 0; j < N; ++j) {
    const double u = std::cos(pi * (j + 0.5) / N);
    const double eps = radius * u;
    g[j] = std::pow(eps, order) * f(-1.0 + eps);
  }
  // Chebyshev coefficients, then only the low monomial coefficients:
  // [u^0]T_k = (-1)^{k/2}, [u^1]T_k = (-1)^{(k-1)/2} k, [u^2]T_k = (-1)^{k/2+1} k^2/2.
  double p[3] = {0.0, 0.0, 0.0};
  for (int k = 0; k < N; ++k) {
    double a = 0.0;
    for (int j = 0; j < N; ++j) a += g[j] * std::cos(pi * k * (j + 0.5) / N);
    a *= (k == 0 ? 1.0 : 2.0) / N;
    if (k % 2 == 0) {
      const double sgn = (k / 2) % 2 ? -1.0 : 1.0;
      p[0] += sgn * a;
      p[2] += -sgn * a * 0.5 * k * k;
    } else {
      const double sgn = ((k - 1) / 2) % 2 ? -1.0 : 1.0;
      p[1] += sgn * a * k;
    }
  }
  double c[3] = {p[0], p[1] / radius, p[2] / (radius * radius)};
  LaurentAtMinusOne r;
  // c[i] multiplies eps^i in g, i.e. eps^{i - order} in f.
  double* slots[3] = {&r.c_m2, &r.c_m1, &r.c_0};
  for (int i = 0; i <= order; ++i) *slots[2 - order + i] = c[i];
  return r;
}

PPPrescription PPPrescription::finite_part() { return {}; }

PPPrescription PPPrescription::finite_part_with_pole_term() {
  return {PPVariant::finite_part_with_pole_term,
          "log(mu*a) = 1, pole coefficients enter the finite part"};
}

PPPrescription PPPrescription::parse(const std::string& name) {
  if (name == "finite-part") return finite_part();
  if (name == "finite-part-with-pole-term") return finite_part_with_pole_term();
  throw std::invalid_argument("unknown prescription '" + name + "'");
}

std::string PPPrescription::name() const {
  return variant == PPVariant::finite_part ? "finite-part"
                                           : "finite-part-with-pole-term";
}

double PPPrescription::apply(const LaurentAtMinusOne& z) const {
  if (variant == PPVariant::finite_part) return z.c_0;
  return z.c_0 + z.c_m1 + 0.5 * z.c_m2;
}

std::string to_string(BC bc) {
  switch (bc) {
    case BC::dirichlet: return "dirichlet";
    case BC::neumann: return "neumann";
    case BC::em: return "em";
  }
  return "?";
}

std::string to_string(Geometry g) {
  return g == Geometry::prolate ? "prolate" : "oblate";
}

std::string to_string(Region r) {
  return r == Region::interior ? "interior" : "total";
}

BC parse_bc(const std::string& s) {
  if (s == "dirichlet") return BC::dirichlet;
  if (s == "neumann") return BC::neumann;
  if (s == "em") return BC::em;
  throw std::invalid_argument("unknown boundary condition '" + s + "'");
}

Geometry parse_geometry(const std::string& s) {
  if (s == "prolate") return Geometry::prolate;
  if (s == "oblate") return Geometry::oblate;
  throw std::invalid_argument("unknown geometry '" + s + "'");
}

}  // namespace casimir::zeta
