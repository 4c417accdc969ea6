#include "superq/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "format.hpp"
#include "superq/errors.hpp"

namespace superq {

void CavityConfig::validate() const {
    if (!std::isfinite(kappa) || kappa <= 0.0) {
        throw DomainError("kappa must be a finite positive rate, got " + detail::num(kappa));
    }
    if (!std::isfinite(eps1) || eps1 < 0.0) {
        throw DomainError("eps1 must be finite and non-negative, got " + detail::num(eps1));
    }
    if (!std::isfinite(eps2) || eps2 < 0.0) {
        throw DomainError("eps2 must be finite and non-negative, got " + detail::num(eps2));
    }
    if (eps2 >= 0.5 * kappa) {
        throw StabilityError("eps2 must stay below kappa/2 for a steady state (eps2=" +
                             detail::num(eps2) + ", kappa=" + detail::num(kappa) + ")");
    }
}

ScaledParams ScaledParams::make(double a, double b) {
    if (!std::isfinite(a) || a < 0.0) {
        throw DomainError("coherent drive a must be finite and non-negative");
    }
    if (!std::isfinite(b) || b < 0.0) {
        throw DomainError("squeeze drive b must be finite and non-negative");
    }
    if (b >= 1.0) {
        throw StabilityError("squeeze drive b=" + detail::num(b) + " is at or above threshold");
    }
    return ScaledParams(a, b);
}

ScaledParams scale(const CavityConfig& config) {
    config.validate();
    return ScaledParams::make(2.0 * config.eps1 / config.kappa, 2.0 * config.eps2 / config.kappa);
}

SqueezeCoeffs squeeze_coeffs(const ScaledParams& params) {
    const double b = params.b();
    const double denom = 1.0 - 0.25 * b * b;
    return {(1.0 - 0.5 * b * b) / denom, -(0.5 * b) / denom};
}

double superposed_norm(const ScaledParams& params) {
    const auto [u, v] = squeeze_coeffs(params);
    const double a = params.a();
    // u^2 - v^2 factored to keep precision as b -> 1
    return std::sqrt((u - v) * (u + v)) * std::exp(a * a * (v - u));
}

GaussianQ GaussianQ::make(double prefactor, double quad, double squeeze, double linear) {
    if (!(prefactor > 0.0) || !std::isfinite(prefactor)) {
        throw DomainError("Gaussian Q prefactor must be positive");
    }
    if (!(quad > 0.0) || !std::isfinite(quad) || !std::isfinite(squeeze) || !std::isfinite(linear)) {
        throw DomainError("Gaussian Q coefficients must be finite with quad > 0");
    }
    if (!((quad - std::abs(squeeze)) > 0.0)) {
        throw DomainError("Gaussian Q is not normalizable: quad^2 <= squeeze^2");
    }
    return GaussianQ(prefactor, quad, squeeze, linear);
}

double GaussianQ::exponent(PhasePoint alpha) const noexcept {
    const double x = alpha.re;
    const double y = alpha.im;
    // |alpha|^2 = x^2 + y^2, (alpha^2 + alpha*^2)/2 = x^2 - y^2, alpha + alpha* = 2x
    return -quad_ * (x * x + y * y) + squeeze_ * (x * x - y * y) + 2.0 * linear_ * x;
}

double GaussianQ::operator()(PhasePoint alpha) const noexcept {
    return prefactor_ * std::numbers::inv_pi * std::exp(exponent(alpha));
}

std::complex<double> GaussianQ::continued(std::complex<double> alpha_conj,
                                          std::complex<double> alpha) const noexcept {
    const std::complex<double> e = -quad_ * alpha_conj * alpha +
                                   0.5 * squeeze_ * (alpha * alpha + alpha_conj * alpha_conj) +
                                   linear_ * (alpha + alpha_conj);
    return prefactor_ * std::numbers::inv_pi * std::exp(e);
}

double GaussianQ::integral() const noexcept {
    const double qm = quad_ - squeeze_;
    const double qp = quad_ + squeeze_;
    return prefactor_ * std::exp(linear_ * linear_ / qm) / std::sqrt(qm * qp);
}

double GaussianQ::mean_re() const noexcept { return linear_ / (quad_ - squeeze_); }

double GaussianQ::variance_re() const noexcept { return 0.5 / (quad_ - squeeze_); }

double GaussianQ::variance_im() const noexcept { return 0.5 / (quad_ + squeeze_); }

}  // namespace superq
