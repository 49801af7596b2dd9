#include "dualrail/spectral.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "dualrail/errors.hpp"
#include "dualrail/format.hpp"

namespace dualrail {

Eigen::MatrixXd hamiltonian_matrix(const CouplingGraph& graph) {
    const int n = graph.node_count();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : graph.edges()) {
        h(e.i - 1, e.j - 1) = e.weight;
        h(e.j - 1, e.i - 1) = e.weight;
    }
    return h;
}

SpectralDecomposition::SpectralDecomposition(const CouplingGraph& graph) {
    const Eigen::MatrixXd h = hamiltonian_matrix(graph);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigendecomposition failed; |H|_F = " +
                             format_g17(h.norm()) + ", max |H_ij| = " +
                             format_g17(h.cwiseAbs().maxCoeff()));
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();

    // Fix the per-column sign: first component above threshold made positive.
    const int n = static_cast<int>(eigenvalues_.size());
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) {
            const double v = eigenvectors_(r, c);
            if (std::abs(v) > 1e-12) {
                if (v < 0.0) eigenvectors_.col(c) *= -1.0;
                break;
            }
        }
    }

    const double scale = std::max(1.0, h.norm());
    const double reconstruction =
        (eigenvectors_ * eigenvalues_.asDiagonal() * eigenvectors_.transpose() - h).norm();
    const double orthogonality =
        (eigenvectors_.transpose() * eigenvectors_ - Eigen::MatrixXd::Identity(n, n)).norm();
    if (reconstruction > 1e-12 * scale * n || orthogonality > 1e-12 * n) {
        throw NumericalError("eigendecomposition out of tolerance: |VDV^T - H| = " +
                             format_g17(reconstruction) + ", |V^TV - I| = " +
                             format_g17(orthogonality));
    }
}

Eigen::VectorXcd SpectralDecomposition::propagate(const Eigen::VectorXcd& amplitudes,
                                                  double t) const {
    if (amplitudes.size() != eigenvalues_.size()) {
        throw DimensionError("state has " + std::to_string(amplitudes.size()) +
                             " entries, graph has " + std::to_string(eigenvalues_.size()));
    }
    if (t == 0.0) {
        return amplitudes;
    }
    Eigen::VectorXcd modal = eigenvectors_.transpose() * amplitudes;
    for (int k = 0; k < modal.size(); ++k) {
        modal(k) *= std::polar(1.0, -eigenvalues_(k) * t);
    }
    return eigenvectors_ * modal;
}

std::complex<double> SpectralDecomposition::transition_amplitude(int from, int to,
                                                                 double t) const {
    const int n = size();
    if (from < 1 || from > n || to < 1 || to > n) {
        throw DimensionError("site out of range in transition amplitude");
    }
    std::complex<double> f = 0.0;
    for (int k = 0; k < n; ++k) {
        f += eigenvectors_(to - 1, k) * eigenvectors_(from - 1, k) *
             std::polar(1.0, -eigenvalues_(k) * t);
    }
    return f;
}

SpectralDecomposition spectral_decompose(const CouplingGraph& graph) {
    return SpectralDecomposition(graph);
}

}  // namespace dualrail
