#include "dualrail/state.hpp"

#include "dualrail/errors.hpp"
#include "dualrail/format.hpp"

namespace dualrail {

namespace {
constexpr double kNormDriftTolerance = 1e-10;
}

SingleExcitationState::SingleExcitationState(Eigen::VectorXcd amplitudes)
    : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 1) {
        throw DimensionError("spatial amplitude vector must have at least one entry");
    }
    const double n2 = amplitudes_.squaredNorm();
    if (n2 > 1.0 + kNormDriftTolerance) {
        throw NormalizationError("spatial squared norm exceeds 1: " + format_g17(n2));
    }
}

SingleExcitationState SingleExcitationState::basis_state(int n_sites, int site) {
    if (site < 1 || site > n_sites) {
        throw DimensionError("site " + std::to_string(site) + " out of range 1.." +
                             std::to_string(n_sites));
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n_sites);
    v(site - 1) = 1.0;
    return SingleExcitationState(std::move(v));
}

std::complex<double> SingleExcitationState::amplitude(int site) const {
    if (site < 1 || site > size()) {
        throw DimensionError("site " + std::to_string(site) + " out of range 1.." +
                             std::to_string(size()));
    }
    return amplitudes_(site - 1);
}

SingleExcitationState SingleExcitationState::with_zeroed(int site) const {
    if (site < 1 || site > size()) {
        throw DimensionError("site " + std::to_string(site) + " out of range 1.." +
                             std::to_string(size()));
    }
    Eigen::VectorXcd v = amplitudes_;
    v(site - 1) = 0.0;
    return SingleExcitationState(std::move(v));
}

DualRailState encode_polariton_qubit(std::complex<double> alpha, std::complex<double> beta,
                                     const CouplingGraph& graph) {
    PolaritonQubit qubit(alpha, beta);  // rejects unnormalized input
    return DualRailState{qubit,
                         SingleExcitationState::basis_state(graph.node_count(), graph.sender())};
}

}  // namespace dualrail
