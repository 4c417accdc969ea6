#pragma once

#include <complex>

namespace superq {

/// Physical cavity inputs. Rates share whatever time unit the caller picks.
struct CavityConfig {
    double kappa = 1.0;  ///< cavity damping rate, > 0
    double eps1 = 0.0;   ///< coherent (harmonic) drive amplitude, >= 0
    double eps2 = 0.0;   ///< subharmonic pump amplitude, 0 <= eps2 < kappa/2

    /// Throws DomainError / StabilityError when the invariants fail.
    void validate() const;
};

/// Dimensionless drives a = 2 eps1 / kappa and b = 2 eps2 / kappa.
class ScaledParams {
public:
    /// Throws DomainError unless a >= 0 is finite, StabilityError unless 0 <= b < 1.
    static ScaledParams make(double a, double b);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }

    friend bool operator==(const ScaledParams&, const ScaledParams&) = default;

private:
    ScaledParams(double a, double b) : a_(a), b_(b) {}
    double a_;
    double b_;
};

ScaledParams scale(const CavityConfig& config);

/// A point alpha of phase space.
struct PhasePoint {
    double re = 0.0;
    double im = 0.0;

    std::complex<double> value() const noexcept { return {re, im}; }
    static PhasePoint from(std::complex<double> z) noexcept { return {z.real(), z.imag()}; }
};

struct SqueezeCoeffs {
    double u;
    double v;  ///< signed, <= 0
};

SqueezeCoeffs squeeze_coeffs(const ScaledParams& params);

/// Normalization A of the superposed Q function.
double superposed_norm(const ScaledParams& params);

/**
 * Gaussian Q function of the form
 *
 *   Q(alpha) = (prefactor / pi) exp[-quad |alpha|^2 + squeeze (alpha^2 + alpha*^2) / 2
 *                                   + linear (alpha + alpha*)]
 *
 * Every Q function of a coherent, squeezed or superposed steady state has
 * this shape with real coefficients.
 */
class GaussianQ {
public:
    /// Throws DomainError unless prefactor > 0, quad > 0 and quad^2 > squeeze^2.
    static GaussianQ make(double prefactor, double quad, double squeeze, double linear);

    double prefactor() const noexcept { return prefactor_; }
    double quad() const noexcept { return quad_; }
    double squeeze() const noexcept { return squeeze_; }
    double linear() const noexcept { return linear_; }

    double exponent(PhasePoint alpha) const noexcept;
    double operator()(PhasePoint alpha) const noexcept;

    /// Q(alpha*, alpha) with alpha* and alpha treated as independent variables.
    std::complex<double> continued(std::complex<double> alpha_conj,
                                   std::complex<double> alpha) const noexcept;

    /// Closed-form integral over the plane, d^2 alpha = d(Re) d(Im).
    double integral() const noexcept;

    /// Mean of Re alpha (the mean of Im alpha is zero).
    double mean_re() const noexcept;
    double variance_re() const noexcept;
    double variance_im() const noexcept;

private:
    GaussianQ(double p, double q, double s, double l)
        : prefactor_(p), quad_(q), squeeze_(s), linear_(l) {}
    double prefactor_;
    double quad_;
    double squeeze_;
    double linear_;
};

}  // namespace superq
