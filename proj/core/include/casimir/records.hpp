#pragma once

#include <string>

#include "casimir/modes.hpp"
#include "casimir/spheroidal.hpp"
#include "casimir/zeta.hpp"

// Serialized forms. JSON records are flat objects; CSV numbers use 12
// significant digits with '.' as decimal separator.
namespace casimir::records {

const char* library_version();

std::string format_number(double v);

std::string to_json(const zeta::LaurentAtMinusOne& z);
std::string to_json(const zeta::EnergyExpansion& e);
std::string to_json(const zeta::FactorPair& f);
std::string to_json(const spheroidal::EigenDecomp& d);

std::string shiftfit_csv_header();
std::string to_csv_row(const modes::ShiftFit& f);

}  // namespace casimir::records
