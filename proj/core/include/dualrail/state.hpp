#pragma once

#include <complex>

#include <Eigen/Dense>

#include "dualrail/graph.hpp"
#include "dualrail/polariton.hpp"

namespace dualrail {

/// Amplitude vector over sites in the one-excitation sector. The vector is
/// allowed to be sub-normalized: the squared-norm deficit is exactly the
/// probability already harvested by heralding measurements or lost to decay.
class SingleExcitationState {
public:
    explicit SingleExcitationState(Eigen::VectorXcd amplitudes);

    /// Unit amplitude on one site (1-based).
    static SingleExcitationState basis_state(int n_sites, int site);

    int size() const { return static_cast<int>(amplitudes_.size()); }
    std::complex<double> amplitude(int site) const;  // 1-based
    const Eigen::VectorXcd& vector() const { return amplitudes_; }
    double norm2() const { return amplitudes_.squaredNorm(); }

    /// Copy with the amplitude of one site (1-based) set to zero.
    SingleExcitationState with_zeroed(int site) const;

private:
    Eigen::VectorXcd amplitudes_;
};

/// Factorized dual-rail state alpha |0>_I |f>_II + beta |f>_I |0>_II: both
/// rails share one spatial profile because they evolve identically, and the
/// qubit coefficients never change under evolution or failed measurements.
struct DualRailState {
    PolaritonQubit qubit;
    SingleExcitationState spatial;
};

/// Places the qubit on the sender site of the graph: spatial profile is the
/// sender basis vector, qubit coefficients are stored exactly as given.
DualRailState encode_polariton_qubit(std::complex<double> alpha, std::complex<double> beta,
                                     const CouplingGraph& graph);

}  // namespace dualrail
