#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffsplit/modmat.hpp"

namespace cliffsplit {

// Identity cross-validation suite: every closed-form matrix/vector formula
// used by the decision engine is re-derived here and compared against
// literal brute-force evaluation (repeated multiplication in G(N)), over
// all 64 lift-bit tuples, all admissible exponent pairs, and randomized
// vectors. All comparisons are exact integer equality mod the relevant
// modulus.

struct CheckResult {
  std::string name;
  bool passed = false;
  std::uint64_t cases = 0;  // number of individual comparisons performed
  std::string detail;       // first failure description, empty when passed
};

// Runs the full suite for an even dimension. max_exp bounds the exponents
// fed to the power-formula checks (at least N is always exercised); seed
// drives the vector sampling, so results are reproducible. Throws
// std::invalid_argument for odd or out-of-range dims.
std::vector<CheckResult> run_identity_checks(i64 dim, i64 max_exp,
                                             std::uint64_t seed);

// True iff every result passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace cliffsplit
