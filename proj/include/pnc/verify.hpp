#pragma once

// Seeded property suites over the library, run from the command line to
// check an installation at a chosen dimension.

#include <cstdint>
#include <string>
#include <vector>

#include "pnc/analysis.hpp"
#include "pnc/planar_nc.hpp"

namespace pnc::verify {

struct Check {
  std::string name;
  bool passed = false;
  /// Largest observed deviation.
  double measured = 0.0;
  double threshold = 0.0;
};

/// exp, ln, cos, sin, cosh, sinh, square, cube, or pow with exponent m.
/// Throws InvalidArgument for any other name.
Evaluator function_by_name(const std::string& name, double m = 2.0);

/// Every property suite at dimension n.
std::vector<Check> run_all(int n, std::uint64_t seed);

/// cr_check of the named function at a seeded random point.
CrReport run_cr(const std::string& fn, int n, std::uint64_t seed);

/// Residual bound that run_cr results are held to.
inline constexpr double kCrThreshold = 1e-6;

}  // namespace pnc::verify
