#pragma once

#include <complex>

#include <Eigen/Dense>

#include "dualrail/graph.hpp"
#include "dualrail/spectral.hpp"
#include "dualrail/state.hpp"

namespace dualrail {

/// <to| exp(-iHt) |from> on the graph's hopping Hamiltonian. Negative t
/// means reverse evolution.
std::complex<double> transition_amplitude(const CouplingGraph& graph, int from, int to, double t);

/// exp(-iHt) applied to the state; norm-preserving.
SingleExcitationState evolve(const SingleExcitationState& state, const CouplingGraph& graph,
                             double t);
SingleExcitationState evolve(const SingleExcitationState& state,
                             const SpectralDecomposition& decomposition, double t);

/// Spatial evolution of a dual-rail state; the qubit coefficients are
/// untouched because both rails see the same Hamiltonian.
DualRailState evolve(const DualRailState& state, const SpectralDecomposition& decomposition,
                     double t);

/// Per-site decay rates d_k >= 0 entering H_eff = H - (i/2) diag(d).
/// Models uniform polariton loss as well as a continuously monitored site.
class DecayProfile {
public:
    explicit DecayProfile(Eigen::VectorXd rates);

    static DecayProfile uniform(int n_sites, double rate);
    static DecayProfile single_site(int n_sites, int site, double rate);  // 1-based

    int size() const { return static_cast<int>(rates_.size()); }
    const Eigen::VectorXd& rates() const { return rates_; }
    bool is_zero() const;

private:
    Eigen::VectorXd rates_;
};

/// Propagation under H_eff = H - (i/2) diag(d) by sub-stepped dense matrix
/// exponentials. The substep is halved until every step is norm-monotone
/// within 1e-10; if monotonicity cannot be reached a StepSizeError is
/// thrown. The squared-norm loss is the cumulative decay (or detection)
/// probability.
SingleExcitationState evolve_nonhermitian(const SingleExcitationState& state,
                                          const CouplingGraph& graph, const DecayProfile& decay,
                                          double t, double dt);

/// Closed-form sine-mode transition amplitude f_{1j}(t) for an open chain:
///   (2/(N+1)) sum_k sin(k pi/(N+1)) sin(k pi j/(N+1)) exp(-i 2Jt cos(k pi/(N+1))).
/// Independent of the spectral-decomposition path; used as a cross-check.
std::complex<double> chain_amplitude_oracle(int n_sites, double hop, int site, double t);

struct ArrivalEstimate {
    double time = 0.0;
    bool chain_form = true;  ///< false when the non-chain fallback was used
};

/// Ballistic arrival-time estimate (N-1)/(2J) from the maximal group
/// velocity 2J of the chain dispersion. A lower-bound heuristic: the peak
/// of |f_{1N}|^2 sits slightly later. Non-chain graphs fall back to
/// N/(2 J_min) with the chain_form flag cleared.
ArrivalEstimate arrival_time_estimate(const CouplingGraph& graph, double hop);

}  // namespace dualrail
