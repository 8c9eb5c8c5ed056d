#pragma once

#include <complex>
#include <vector>

// Spherical Bessel family and associated Legendre functions in double
// precision. Everything here is pure and reentrant.
namespace casimir::specfun {

double sph_bessel_j(int l, double x);
double sph_bessel_j_prime(int l, double x);
// j_0 .. j_lmax at one argument.
std::vector<double> sph_bessel_j_array(int lmax, double x);

// y_l is singular at 0; these throw std::domain_error there.
double sph_bessel_y(int l, double x);
double sph_bessel_y_prime(int l, double x);
std::vector<double> sph_bessel_y_array(int lmax, double x);

std::complex<double> sph_hankel1(int l, double x);
std::complex<double> sph_hankel1_prime(int l, double x);

// Modified spherical Bessel of the first kind. The raw value throws
// std::overflow_error once it leaves double range; the ratio and the
// log-derivative never overflow.
double sph_bessel_i(int l, double x);
double sph_bessel_i_ratio(int l, double x);  // i_{l+1}(x) / i_l(x)
double sph_bessel_i_logderiv(int l, double x);

// k_l'(x)/k_l(x) for the modified spherical Bessel function of the third
// kind (decaying solution). Normalization of k_l drops out.
double sph_bessel_k_logderiv(int l, double x);

// P_l^m(eta) with the Condon-Shortley phase (-1)^m included, so
// P_1^1(eta) = -sqrt(1 - eta^2). Negative m uses
// P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m.
double assoc_legendre(int l, int m, double eta);
// P_n^m(eta) for n = 0 .. nmax (zero for n < |m|).
std::vector<double> assoc_legendre_array(int nmax, int m, double eta);

enum class RootKind { value, derivative };

// n-th positive zero of j_l or j_l'. Brackets come from interlacing, so the
// index is never miscounted. Throws BracketError if a bracket fails.
double bessel_root(int l, int n, RootKind kind);

// Hurwitz zeta sum_{k>=0} (k+a)^{-s} for s > 1, a > 0.
double hurwitz_zeta(double s, double a);

}  // namespace casimir::specfun
