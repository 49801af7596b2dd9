#include "dualrail/params.hpp"

#include <cmath>

#include "dualrail/errors.hpp"
#include "dualrail/format.hpp"

namespace dualrail {

JchParams::JchParams(double omega_d, double omega_0, double g, double hop_a,
                     double kappa, double gamma, int n_max)
    : omega_d_(omega_d),
      omega_0_(omega_0),
      g_(g),
      hop_a_(hop_a),
      kappa_(kappa),
      gamma_(gamma),
      n_max_(n_max) {
    if (!(g > 0.0) || !std::isfinite(g)) {
        throw InvalidParameterError("coupling g must be positive, got " + format_g17(g));
    }
    // hop_a = 0 is allowed: several validation checks run with decoupled
    // cavities as the exact reference point.
    if (!(hop_a >= 0.0) || !std::isfinite(hop_a)) {
        throw InvalidParameterError("hopping A must be non-negative, got " + format_g17(hop_a));
    }
    if (n_max < 1) {
        throw InvalidParameterError("Fock cutoff n_max must be at least 1");
    }
    if (!(kappa >= 0.0) || !(gamma >= 0.0)) {
        throw InvalidParameterError("decay rates kappa, gamma must be non-negative");
    }
    if (!std::isfinite(omega_d) || !std::isfinite(omega_0)) {
        throw InvalidParameterError("frequencies must be finite");
    }
}

JchParams JchParams::resonant(double g, double hop_a, int n_max) {
    const double omega = 1e4 * g;
    return JchParams(omega, omega, g, hop_a, 0.0, 0.0, n_max);
}

JchParams JchParams::with_hop(double hop_a) const {
    return JchParams(omega_d_, omega_0_, g_, hop_a, kappa_, gamma_, n_max_);
}

JchParams JchParams::with_n_max(int n_max) const {
    return JchParams(omega_d_, omega_0_, g_, hop_a_, kappa_, gamma_, n_max);
}

JchParams JchParams::with_loss(double kappa, double gamma) const {
    return JchParams(omega_d_, omega_0_, g_, hop_a_, kappa, gamma, n_max_);
}

}  // namespace dualrail
