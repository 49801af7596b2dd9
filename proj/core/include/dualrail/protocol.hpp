#pragma once

#include <string>
#include <vector>

#include "dualrail/evolution.hpp"
#include "dualrail/graph.hpp"
#include "dualrail/params.hpp"
#include "dualrail/schedule.hpp"
#include "dualrail/state.hpp"

namespace dualrail {

/// Result of interrogating the receiver site. The protocol is tracked as a
/// probability tree, not sampled: the outcome carries both branches.
struct MeasurementOutcome {
    int round = 0;
    double time = 0.0;
    double p_conditional = 0.0;  ///< success probability given this round is reached
    double p_absolute = 0.0;     ///< unconditional success probability of this round
    bool heralded = false;       ///< detection is certain (p_conditional = 1 within 1e-12)
    PolaritonQubit received;     ///< qubit on the success branch; equals the sent qubit
    DualRailState post_failure;  ///< failure branch: receiver amplitude zeroed, sub-normalized
};

/// Projective receiver measurement. Success heralds perfect reception: the
/// received qubit is exactly the stored (alpha, beta). Failure only zeroes
/// the receiver-site amplitude and keeps the state sub-normalized, so
/// absolute probabilities stay directly readable.
MeasurementOutcome measure_receiver(const DualRailState& state, const CouplingGraph& graph);

struct TransferRound {
    int index = 0;
    double time = 0.0;
    double p_conditional = 0.0;
    double p_absolute = 0.0;
    double cumulative = 0.0;  ///< cumulative success probability after this round
};

struct TransferRecord {
    std::vector<TransferRound> rounds;
    double conditional_fidelity = 1.0;  ///< fidelity of the heralded qubit with the sent one
    double elapsed = 0.0;               ///< time of the last executed round
    bool converged = false;             ///< cumulative success reached the target
    double decayed = 0.0;               ///< probability lost to decay (lossy runs only)
    double remaining = 1.0;             ///< squared norm still in flight after the last round
    double ceiling = 1.0;               ///< supremum of cumulative success for this (graph, s, r)
    std::string note;                   ///< diagnostic, empty on normal runs

    double final_cumulative() const {
        return rounds.empty() ? 0.0 : rounds.back().cumulative;
    }
};

/// Runs the heralded transfer protocol: encode on the sender, evolve
/// between scheduled measurement times, measure the receiver each round,
/// continue on the failure branch, stop once cumulative success reaches the
/// target or the schedule is exhausted. A disconnected sender/receiver pair
/// yields an immediate ceiling-zero record with a diagnostic note instead
/// of an exception. Continuous schedules belong to run_continuous.
TransferRecord run_protocol(const CouplingGraph& graph, const PolaritonQubit& qubit,
                            const MeasurementSchedule& schedule, double target_fidelity);

struct ContinuousRecord {
    TransferRecord record;
    std::vector<double> times;
    std::vector<double> cumulative;  ///< detection probability up to each time
    std::vector<double> density;     ///< detection-time density rate * |f_r(t)|^2
};

/// Continuous interrogation of the receiver: non-Hermitian evolution with
/// the detection rate concentrated on the receiver site. The cumulative
/// detection probability is 1 - |f(t)|^2; a detection event heralds perfect
/// reception exactly as in the projective case. dt must resolve both 1/rate
/// and 1/J (dt <= 0.1 min(1/rate, 1/J_max)).
ContinuousRecord run_continuous(const CouplingGraph& graph, const PolaritonQubit& qubit,
                                double rate, double duration, double dt,
                                double target_fidelity = 0.99);

/// Greedy measurement-time search: each round picks the time on a forward
/// grid (step grid_step, horizon window past the previous round) that
/// maximizes the conditional success probability given collapse after every
/// earlier failure. Deterministic; ties break toward the earlier time.
SnapshotList optimize_schedule(const CouplingGraph& graph, int max_rounds, double window,
                               double grid_step);

/// Supremum of cumulative success for measurements at site r with the
/// excitation starting at site s: the squared norm of the projection of
/// e_s onto the Krylov space span{H^k e_r}. Equals 1 exactly when no
/// spectral component of e_s is hidden from the receiver; mirror-symmetric
/// graphs with degenerate eigenvalues can trap part of the excitation in
/// dark states and push it below 1.
double dark_weight(const CouplingGraph& graph, int sender, int receiver);
double dark_weight(const SpectralDecomposition& decomposition, int sender, int receiver);

struct LossyRecord {
    TransferRecord record;
    double efficiency = 0.0;  ///< final cumulative heralding probability
};

/// Protocol with uniform polariton decay gamma_p = (kappa + gamma)/2 on
/// every site, modeled as deterministic non-Hermitian damping (no-jump
/// filtering): heralding post-selects the no-loss sector, so loss only
/// costs efficiency while the heralded fidelity stays 1.
LossyRecord lossy_run(const CouplingGraph& graph, const PolaritonQubit& qubit,
                      const MeasurementSchedule& schedule, const JchParams& params,
                      double target_fidelity = 0.99);

}  // namespace dualrail
