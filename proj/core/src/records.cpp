#include "casimir/records.hpp"

#include <cstdio>
#include <json.hpp>

namespace casimir::records {

using json = nlohmann::ordered_json;

const char* library_version() { return CASIMIR_VERSION; }

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string to_json(const zeta::LaurentAtMinusOne& z) {
  json j;
  j["c_m2"] = z.c_m2;
  j["c_m1"] = z.c_m1;
  j["c_0"] = z.c_0;
  j["scale_note"] = z.scale_note;
  return j.dump();
}

std::string to_json(const zeta::EnergyExpansion& e) {
  json j;
  j["E0"] = e.E0;
  j["c2"] = e.c2_set ? json(e.c2) : json(nullptr);
  j["geometry"] = zeta::to_string(e.geometry);
  j["bc"] = zeta::to_string(e.bc);
  j["region"] = zeta::to_string(e.region);
  j["flags"] = e.flags;
  j["a"] = e.a;
  j["e"] = e.e;
  j["energy"] = e.energy;
  return j.dump();
}

std::string to_json(const zeta::FactorPair& f) {
  json j;
  j["c2_exact"] = f.c2_exact;
  j["c2_zonal"] = f.c2_zonal;
  j["prescription"] = f.prescription.name();
  j["mu_convention"] = f.prescription.mu_convention;
  j["sphere_c_m1"] = f.sphere.c_m1;
  j["sphere_c_0"] = f.sphere.c_0;
  j["zonal_c_m2"] = f.zonal.c_m2;
  j["zonal_c_m1"] = f.zonal.c_m1;
  j["zonal_c_0"] = f.zonal.c_0;
  j["scale_note"] = f.sphere.scale_note;
  return j.dump();
}

std::string to_json(const spheroidal::EigenDecomp& d) {
  json j;
  j["l"] = d.index.l;
  j["m"] = d.index.m;
  j["gamma2"] = d.gamma2;
  j["lambda"] = d.lambda;
  j["K_minus"] = d.K_minus();
  j["K_plus"] = d.K_plus();
  j["residual"] = d.residual;
  j["a0_weight"] = d.a0_weight;
  j["coeffs"] = d.coeffs;
  return j.dump();
}

std::string shiftfit_csv_header() { return "l,m,bc,z0,c_pred,c_fit,abs_err"; }

std::string to_csv_row(const modes::ShiftFit& f) {
  return std::to_string(f.l) + "," + std::to_string(f.m) + "," + modes::to_string(f.bc) +
         "," + format_number(f.z0) + "," + format_number(f.c_pred) + "," +
         format_number(f.c_fit) + "," + format_number(f.abs_err());
}

}  // namespace casimir::records
