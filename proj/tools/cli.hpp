#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "superq/params.hpp"
#include "superq/qfunctions.hpp"

namespace superq::cli {

enum class Command { report, sweep, qgrid, verify };
enum class Format { csv, json, table };

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

struct SweepAxis {
    std::string param;  ///< kappa | eps1 | eps2
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;

    /// Parameter value of row i, evenly spaced with both ends included.
    double value(int i) const noexcept;
};

struct RunSpec {
    Command command = Command::report;
    CavityConfig config;
    std::optional<SweepAxis> sweep;
    qfunc::Kind kind = qfunc::Kind::superposed;
    int grid_n = 128;
    std::optional<double> grid_extent;  ///< unset means auto
    std::optional<int> trunc;           ///< unset means auto
    double tol = 1e-6;
    bool kernel = true;
    std::string out;  ///< empty writes to the output stream
    std::optional<Format> format;

    /// Throws DomainError / StabilityError on invalid combinations.
    void validate() const;
};

/// "eps2:0:0.49:50" -> SweepAxis. Throws DomainError on malformed input.
SweepAxis parse_sweep(const std::string& text);

/// Parses command-line arguments (argv[0] excluded). Throws DomainError on bad usage.
/// Returns nullopt after printing help text to `out`.
std::optional<RunSpec> parse_args(const std::vector<std::string>& args, std::ostream& out);

/// Executes a spec. Errors become a one-line JSON object on `err` and a nonzero exit code.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// parse_args + run with the same error reporting.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superq::cli
