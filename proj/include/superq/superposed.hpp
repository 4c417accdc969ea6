#pragma once

#include "superq/moments.hpp"
#include "superq/params.hpp"

/// Moments, pair-beam quadrature variances and squeezing obtained from the
/// superposed Q function, plus the input-output relations for the output light.
namespace superq::superposed {

/// Variance of a pair of superposed coherent beams inside the cavity.
inline constexpr double kPairBaseline = 2.0;

/// Baseline of a pair of superposed coherent output beams, 2 kappa.
inline constexpr double output_pair_baseline(double kappa) noexcept { return kPairBaseline * kappa; }

/// Closed forms <a> = a, <a^2> = a^2 + b/(2(b^2-1)), <a^dag a> = a^2 + b^2/(2(1-b^2)).
MomentSet superposed_moments(const ScaledParams& params);

/**
 * Same moments integrated against the superposed Q function on a grid:
 * antinormal c-numbers give <a> = Int Q alpha, <a^2> = Int Q alpha^2 and
 * <a^dag a> = Int Q |alpha|^2 - 1.
 */
MomentSet superposed_moments_quadrature(const ScaledParams& params, int n = 256);

struct QuadVariances {
    double plus;
    double minus;
};

/// 2 + <:a_q, a_q:> expanded over superposed_moments, cross-checked against the closed form.
QuadVariances quad_variance_pair(const ScaledParams& params);

/// Closed form 2 -+ b/(1 +- b).
QuadVariances quad_variance_pair_closed(const ScaledParams& params);

/// Pair-beam variance from arbitrary moments.
QuadVariances quad_variance_pair(const MomentSet& moments) noexcept;

/// S = (2 - var_plus) / 2, from the expanded variance.
double quadrature_squeezing(const ScaledParams& params);

/// Closed form b / (2(1+b)).
double quadrature_squeezing_closed(const ScaledParams& params);

struct SqueezingReport {
    CavityConfig config;
    double a = 0.0;
    double b = 0.0;
    double mean_photon = 0.0;
    double mean_photon_out = 0.0;
    double var_plus = 0.0;
    double var_minus = 0.0;
    double var_plus_out = 0.0;
    double var_minus_out = 0.0;
    double squeezing = 0.0;
    double squeezing_out = 0.0;
};

SqueezingReport output_report(const CavityConfig& config);

}  // namespace superq::superposed
