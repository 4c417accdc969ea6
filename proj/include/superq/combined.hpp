#pragma once

#include "superq/moments.hpp"
#include "superq/params.hpp"

/// Moments and quadrature variances when the coherent and subharmonic
/// Hamiltonians are summed into one and the cavity is solved as a whole.
namespace superq::combined {

/// Coherent-state baseline for the variance of one beam.
inline constexpr double kSingleBeamBaseline = 1.0;

double steady_mean_amp(const ScaledParams& params);

MomentSet steady_moments(const ScaledParams& params);

/// The coherent part a^2/(1+b)^2 of the steady mean photon number.
/// It depends on b, which is what makes the combined result suspicious.
double coherent_term(const ScaledParams& params);

/// Squeezed part b^2 / (2(1-b^2)) of the steady mean photon number.
double squeezed_term(const ScaledParams& params);

/// Right-hand side of the closed moment equations in dimensionless time kappa*t.
MomentState moment_derivative(const ScaledParams& params, const MomentState& m) noexcept;

/// Default step in units of 1/kappa.
inline constexpr double kDefaultStep = 0.01;

/**
 * Integrates the moment equations from the vacuum up to tau = kappa*t with a
 * fixed-step RK4 scheme. Throws StepError for tau < 0, step <= 0 or when the
 * solution stops being finite.
 */
MomentState evolve_moments(const ScaledParams& params, double tau, double step = kDefaultStep);

/// Same in physical time units: t and dt are in the time unit of config.kappa.
MomentState evolve_moments(const CavityConfig& config, double t, double dt);

struct QuadVariances {
    double plus;
    double minus;
};

/// Single-beam variances 1 + <:a_q, a_q:>, evaluated through the moment
/// expansion and cross-checked against 1 -+ b/(1 +- b).
QuadVariances quad_variance_single(const ScaledParams& params);

/// Closed form 1 -+ b/(1 +- b).
QuadVariances quad_variance_single_closed(const ScaledParams& params);

}  // namespace superq::combined
