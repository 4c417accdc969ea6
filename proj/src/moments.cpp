#include "superq/moments.hpp"

namespace superq {

double normal_ordered_variance(const MomentState& m, Quadrature q) noexcept {
    const double sign = q == Quadrature::plus ? 1.0 : -1.0;
    return 2.0 * m.photon + sign * (m.sq + m.sq_dag) - sign * (m.amp * m.amp + m.amp_dag * m.amp_dag) -
           2.0 * m.amp_dag * m.amp;
}

double normal_ordered_variance(const MomentSet& m, Quadrature q) noexcept {
    return normal_ordered_variance(
        MomentState{m.mean_amp, m.mean_amp, m.mean_sq, m.mean_sq, m.mean_photon}, q);
}

}  // namespace superq
