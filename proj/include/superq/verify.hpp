#pragma once

#include <optional>
#include <string>
#include <vector>

/// Cross-checks of every closed form against the independent numerical routes.
namespace superq::verify {

struct Options {
    /// Tolerance for the oracle-equivalence checks (moments, variances, Husimi values).
    double tolerance = 1e-6;
    /// Fixed Fock truncation; unset selects it automatically by doubling.
    std::optional<int> trunc;
    /// Include the 4D superposition-kernel quadrature (about a second per point).
    bool kernel = true;
};

struct CheckResult {
    std::string name;
    /// Largest deviation seen; for "must differ" checks, the smallest separation.
    double deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string note;
};

/// Runs every check in a fixed order. Deterministic for fixed options.
std::vector<CheckResult> run_suite(const Options& options = {});

bool all_passed(const std::vector<CheckResult>& results) noexcept;

}  // namespace superq::verify
