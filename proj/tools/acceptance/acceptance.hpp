#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "casimir/zeta.hpp"

namespace casimir::acceptance {

struct Criterion {
  std::string name;
  bool pass = false;
  std::string detail;  // measured values and tolerances, fixed formatting
};

// Every acceptance criterion, in a fixed order. Exceptions inside a
// criterion turn into a failing entry carrying the message.
std::vector<Criterion> run_criteria(const zeta::SumOptions& opt = {});

std::string format_report(const std::vector<Criterion>& cs);

// Prints one PASS/FAIL line per criterion plus a determinism line that runs
// the suite a second time and compares the reports byte for byte. Returns
// the number of failures. No timings or dates are printed.
int run_acceptance(std::ostream& os, const zeta::SumOptions& opt = {});

}  // namespace casimir::acceptance
