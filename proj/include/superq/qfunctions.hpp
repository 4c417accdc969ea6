#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "superq/params.hpp"

/// Steady-state Husimi Q functions of coherent, squeezed and superposed light.
namespace superq::qfunc {

enum class Kind { coherent, squeezed, superposed };

const char* to_string(Kind kind) noexcept;
/// Throws DomainError for unknown names.
Kind parse_kind(const std::string& name);

/// Gaussian parameters of the chosen Q function.
GaussianQ gaussian(Kind kind, const ScaledParams& params);

double q_coherent(PhasePoint alpha, const ScaledParams& params);
double q_squeezed(PhasePoint alpha, const ScaledParams& params);
double q_superposed(PhasePoint alpha, const ScaledParams& params);

/// Antinormally ordered characteristic function <exp(-z* a) exp(z a^dag)>.
/// Only the coherent and squeezed kinds are defined.
std::complex<double> char_fn_antinormal(PhasePoint z, const ScaledParams& params, Kind kind);

/// Tensor-product trapezoid over [-extent, extent] per real axis.
struct QuadratureSpec {
    double extent = 8.0;
    int nodes = 64;
    /// Largest allowed |integrand| on the box boundary relative to the peak.
    double boundary_ratio = 1e-12;
};

/**
 * Superposition integral
 *
 *   Q(alpha) = (1/pi) Int d^2beta d^2gamma Q_c(beta*, alpha - gamma) Q_s(gamma*, alpha - beta)
 *              exp(-|alpha|^2 - |beta|^2 - |gamma|^2 + alpha* beta + alpha beta*
 *                  + alpha* gamma + alpha gamma* - beta* gamma - beta gamma*)
 *
 * evaluated by brute-force quadrature over the four real coordinates of beta
 * and gamma. Throws QuadratureError if the integrand is not negligible on the
 * boundary of the box.
 */
double superpose_q_numeric(PhasePoint alpha, const ScaledParams& params,
                           const QuadratureSpec& spec = {});

/// Q = (1/pi^2) Int d^2z phi(z) exp(z* alpha - z alpha*), integrated on a real grid.
double q_from_char_fn(PhasePoint alpha, const ScaledParams& params, Kind kind,
                      const QuadratureSpec& spec = {8.0, 128, 1e-12});

/// Q function sampled on a centered square grid.
struct QGrid {
    Kind kind = Kind::superposed;
    ScaledParams params = ScaledParams::make(0.0, 0.0);
    double extent = 0.0;
    int n = 0;
    double dx = 0.0;
    /// Row-major: values[i * n + j] is Q at re = -extent + i dx, im = -extent + j dx.
    std::vector<double> values;
    /// Riemann sum of values * dx^2.
    double normalization = 0.0;
    /// Set when the normalization deviates from 1 by more than kNormalizationWarn.
    std::optional<std::string> warning;

    double coordinate(int index) const noexcept { return -extent + dx * index; }
};

inline constexpr double kNormalizationWarn = 1e-4;

/// Extent covering |<alpha>| + 6 standard deviations along the widest axis.
double auto_extent(Kind kind, const ScaledParams& params);

/// Throws DomainError if n < 16 or extent <= 0.
QGrid q_grid(Kind kind, const ScaledParams& params, int n, std::optional<double> extent = std::nullopt);

}  // namespace superq::qfunc
