#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "surf4/geometry.hpp"

namespace surf4::verify {

struct CheckResult {
    std::string name;
    double tolerance = 0.0;
    double max_error = 0.0;
    bool passed = false;
    std::string detail;  ///< first failing sample, empty when passed
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    [[nodiscard]] bool passed() const;
};

/// "oracle", "reparam", "motion", "helix" or "all". Throws InputError for other names.
SuiteReport run_suite(std::string_view name, std::uint64_t seed, const Tolerances& tol = {});

const std::vector<std::string_view>& suite_names();

/// |a - b| / max(|b|, floor). With floor = abs_tol / rel_tol, a value within
/// rel_tol passes either relatively or, near zero, absolutely.
double scaled_error(double a, double b, double floor);

}  // namespace surf4::verify
