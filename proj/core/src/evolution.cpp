#include "dualrail/evolution.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "dualrail/errors.hpp"
#include "dualrail/format.hpp"

namespace dualrail {

std::complex<double> transition_amplitude(const CouplingGraph& graph, int from, int to,
                                          double t) {
    return SpectralDecomposition(graph).transition_amplitude(from, to, t);
}

SingleExcitationState evolve(const SingleExcitationState& state, const CouplingGraph& graph,
                             double t) {
    return evolve(state, SpectralDecomposition(graph), t);
}

SingleExcitationState evolve(const SingleExcitationState& state,
                             const SpectralDecomposition& decomposition, double t) {
    return SingleExcitationState(decomposition.propagate(state.vector(), t));
}

DualRailState evolve(const DualRailState& state, const SpectralDecomposition& decomposition,
                     double t) {
    return DualRailState{state.qubit, evolve(state.spatial, decomposition, t)};
}

DecayProfile::DecayProfile(Eigen::VectorXd rates) : rates_(std::move(rates)) {
    if (rates_.size() < 1) {
        throw DimensionError("decay profile must cover at least one site");
    }
    for (int k = 0; k < rates_.size(); ++k) {
        if (!(rates_(k) >= 0.0) || !std::isfinite(rates_(k))) {
            throw InvalidParameterError("decay rates must be non-negative");
        }
    }
}

DecayProfile DecayProfile::uniform(int n_sites, double rate) {
    return DecayProfile(Eigen::VectorXd::Constant(n_sites, rate));
}

DecayProfile DecayProfile::single_site(int n_sites, int site, double rate) {
    if (site < 1 || site > n_sites) {
        throw DimensionError("decay site out of range");
    }
    Eigen::VectorXd d = Eigen::VectorXd::Zero(n_sites);
    d(site - 1) = rate;
    return DecayProfile(std::move(d));
}

bool DecayProfile::is_zero() const {
    return rates_.maxCoeff() == 0.0;
}

SingleExcitationState evolve_nonhermitian(const SingleExcitationState& state,
                                          const CouplingGraph& graph, const DecayProfile& decay,
                                          double t, double dt) {
    if (!(dt > 0.0)) {
        throw StepSizeError("non-Hermitian evolution needs dt > 0");
    }
    if (t < 0.0) {
        throw InvalidParameterError("non-Hermitian evolution needs t >= 0");
    }
    const int n = graph.node_count();
    if (state.size() != n || decay.size() != n) {
        throw DimensionError("state/decay dimension does not match the graph");
    }
    if (t == 0.0) {
        return state;
    }

    const std::complex<double> im(0.0, 1.0);
    Eigen::MatrixXcd h_eff = hamiltonian_matrix(graph).cast<std::complex<double>>();
    h_eff -= 0.5 * im * Eigen::MatrixXcd(decay.rates().cast<std::complex<double>>().asDiagonal());

    constexpr double kMonotoneTolerance = 1e-10;
    constexpr int kMaxHalvings = 24;

    double step = std::min(dt, t);
    for (int attempt = 0; attempt <= kMaxHalvings; ++attempt, step *= 0.5) {
        const long n_steps = std::lround(std::ceil(t / step - 1e-12));
        const double remainder = t - double(n_steps - 1) * step;
        const Eigen::MatrixXcd propagator = (-im * step * h_eff).exp();
        const Eigen::MatrixXcd last = (-im * remainder * h_eff).exp();

        Eigen::VectorXcd amps = state.vector();
        double prev_norm2 = amps.squaredNorm();
        bool monotone = true;
        for (long k = 0; k < n_steps && monotone; ++k) {
            amps = (k + 1 == n_steps) ? Eigen::VectorXcd(last * amps)
                                      : Eigen::VectorXcd(propagator * amps);
            const double norm2 = amps.squaredNorm();
            if (norm2 > prev_norm2 * (1.0 + kMonotoneTolerance)) {
                monotone = false;
            }
            prev_norm2 = norm2;
        }
        if (monotone) {
            return SingleExcitationState(std::move(amps));
        }
    }
    throw StepSizeError("norm kept increasing beyond 1e-10 per step after halving dt " +
                        std::to_string(kMaxHalvings) + " times from " + format_g17(dt));
}

std::complex<double> chain_amplitude_oracle(int n_sites, double hop, int site, double t) {
    if (n_sites < 1 || site < 1 || site > n_sites) {
        throw DimensionError("chain oracle site out of range");
    }
    const double pi = std::acos(-1.0);
    std::complex<double> f = 0.0;
    for (int k = 1; k <= n_sites; ++k) {
        const double mode = k * pi / (n_sites + 1);
        f += std::sin(mode) * std::sin(mode * site) *
             std::polar(1.0, -2.0 * hop * t * std::cos(mode));
    }
    return f * (2.0 / (n_sites + 1));
}

ArrivalEstimate arrival_time_estimate(const CouplingGraph& graph, double hop) {
    if (!(hop > 0.0)) {
        throw InvalidParameterError("arrival estimate needs a positive hopping rate");
    }
    const int n = graph.node_count();
    if (graph.is_chain() || n == 1) {
        return {(n - 1) / (2.0 * hop), true};
    }
    const double j_min = reference_hop(graph);
    return {n / (2.0 * j_min), false};
}

}  // namespace dualrail
