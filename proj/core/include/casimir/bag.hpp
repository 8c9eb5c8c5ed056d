#pragma once

// Zero-point energy of a confined colour field with the modified reduced
// Green's function, and its deformation for meson and baryon bags.
namespace casimir::bag {

struct BagParams {
  double lambda_exp = 1.0;         // exponent lambda > 0
  double Lambda_QCD_energy = 0.0;  // E(Lambda^2), units 1/R
  double E_massless = 0.7;         // E(0), units 1/R; an estimate, not data
};

// -lambda E(0) + (lambda + 1) E(Lambda^2)
double modified_energy(const BagParams& p = {});

// Prolate meson bag with semi-minor axis b:  E (1 - e^2/6) / b, E the
// modified energy. Valid for 0 <= e <= 0.3.
double meson_prolate_energy(double b, double e, const BagParams& p = {});
// Same through the semi-major axis: E (1 + e^2/3) / a, a = b / sqrt(1 - e^2).
double meson_prolate_energy_major(double b, double e, const BagParams& p = {});

// Oblate baryon bag: E (1 - e'^2/3) / a.
double baryon_oblate_energy(double a, double e_prime, const BagParams& p = {});

}  // namespace casimir::bag
