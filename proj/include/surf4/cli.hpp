#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "surf4/geometry.hpp"

namespace surf4::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kNumericError = 2, kVerifyFailed = 3 };

/// Runs the surf4 command line. `env` stands in for the process environment
/// (only SURF4_TOL_* keys are read) so the function is testable in-process.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const std::map<std::string, std::string>& env);

/// Same, reading the real environment.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Shortest decimal string that reads back to exactly `x`.
std::string format_double(double x);

/// Applies SURF4_TOL_<NAME> entries of `env`, NAME being an upper-cased tolerance name.
/// Unknown names and non-numeric values throw InputError, as with --tol.
void apply_env_tolerances(Tolerances& tol, const std::map<std::string, std::string>& env);

}  // namespace surf4::cli
