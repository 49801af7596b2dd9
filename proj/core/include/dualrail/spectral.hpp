#pragma once

#include <complex>

#include <Eigen/Dense>

#include "dualrail/graph.hpp"

namespace dualrail {

/// One-excitation hopping Hamiltonian of the graph: H[i][j] = J_ij on
/// edges, zero elsewhere. Real symmetric with zero diagonal.
Eigen::MatrixXd hamiltonian_matrix(const CouplingGraph& graph);

/// Full eigendecomposition of the hopping Hamiltonian, with a fixed sign
/// convention (first non-negligible component of each eigenvector made
/// positive) so serialized decompositions are reproducible. Eigenvalues
/// ascend. Immutable and safe to share across workers.
class SpectralDecomposition {
public:
    explicit SpectralDecomposition(const CouplingGraph& graph);

    int size() const { return static_cast<int>(eigenvalues_.size()); }
    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
    const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }

    /// exp(-iHt) applied to an amplitude vector.
    Eigen::VectorXcd propagate(const Eigen::VectorXcd& amplitudes, double t) const;

    /// <to| exp(-iHt) |from>, sites 1-based.
    std::complex<double> transition_amplitude(int from, int to, double t) const;

private:
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXd eigenvectors_;
};

SpectralDecomposition spectral_decompose(const CouplingGraph& graph);

}  // namespace dualrail
