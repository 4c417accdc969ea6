#pragma once

namespace superq {

/// First and second moments of a single cavity mode with real coefficients.
struct MomentSet {
    double mean_amp = 0.0;     ///< <a> (= <a^dagger>)
    double mean_sq = 0.0;      ///< <a^2> (= <a^dagger 2>)
    double mean_photon = 0.0;  ///< <a^dagger a>

    MomentSet& operator+=(const MomentSet& o) noexcept {
        mean_amp += o.mean_amp;
        mean_sq += o.mean_sq;
        mean_photon += o.mean_photon;
        return *this;
    }
    friend MomentSet operator+(MomentSet l, const MomentSet& r) noexcept { return l += r; }
};

/// Moments with the conjugate pair tracked separately.
struct MomentState {
    double amp = 0.0;      ///< <a>
    double amp_dag = 0.0;  ///< <a^dagger>
    double sq = 0.0;       ///< <a^2>
    double sq_dag = 0.0;   ///< <a^dagger 2>
    double photon = 0.0;   ///< <a^dagger a>

    MomentSet collapsed() const noexcept { return {amp, sq, photon}; }
};

/// Quadrature choice: plus is a^dagger + a, minus is i(a^dagger - a).
enum class Quadrature { plus, minus };

/**
 * Normally ordered variance <:a_q, a_q:> expanded in moments:
 * 2<a^dag a> +- <a^2> +- <a^dag 2> -+ <a>^2 -+ <a^dag>^2 - 2 <a^dag><a>.
 */
double normal_ordered_variance(const MomentState& m, Quadrature q) noexcept;
double normal_ordered_variance(const MomentSet& m, Quadrature q) noexcept;

}  // namespace superq
