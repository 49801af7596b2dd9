#pragma once

#include <string>
#include <vector>

#include "dualrail/graph.hpp"
#include "dualrail/protocol.hpp"
#include "dualrail/schedule.hpp"

namespace dualrail {

/// How measurement times are generated for protocol runs driven by the
/// analysis layer. Regular uses the default arrival-time start and
/// interval tau_scale * N^{1/3} / J; greedy resolves window and grid step
/// automatically when left at zero.
struct SchedulePolicy {
    enum class Kind { regular, greedy };

    Kind kind = Kind::regular;
    double tau_scale = kDefaultIntervalScale;
    int max_rounds = 10000;
    double window = 0.0;     // greedy only; 0 = auto
    double grid_step = 0.0;  // greedy only; 0 = auto

    static SchedulePolicy regular(double tau_scale = kDefaultIntervalScale,
                                  int max_rounds = 10000);
    static SchedulePolicy greedy(int max_rounds = 10000, double window = 0.0,
                                 double grid_step = 0.0);
};

std::string policy_name(const SchedulePolicy& policy);
MeasurementSchedule make_schedule(const CouplingGraph& graph, const SchedulePolicy& policy);

struct TimeToFidelity {
    double time = 0.0;
    int rounds = 0;
    double cumulative = 0.0;
};

/// Runs the protocol until the cumulative success reaches the target and
/// returns the time of the deciding round. Throws UnreachableFidelityError
/// when the dark-state ceiling sits below the target, and
/// ProtocolExhaustedError when the schedule runs out first.
TimeToFidelity time_to_fidelity(const CouplingGraph& graph, const SchedulePolicy& policy,
                                double target);

struct ScalingPoint {
    int n = 0;
    double fidelity = 0.0;
    double time = 0.0;
    double hop = 1.0;
};

struct ScalingFit {
    double constant = 0.0;   ///< prefactor c of t = c A^-1 N^p |ln(1-F)|
    double exponent = 0.0;   ///< fitted power p
    double residual = 0.0;   ///< RMS residual in the log domain
    std::string convention;  ///< how simulation hopping maps onto A
    double jeff_over_a = 1.0;
    std::vector<ScalingPoint> points;
};

/// Least-squares fit of log t = log c + p log N + log|ln(1-F)| - log A in
/// the log domain with equal weights. jeff_over_a converts the simulation
/// hopping J into the bare inter-cavity rate A (J = jeff_over_a * A); pass
/// 1 for the convention that reads the effective Hamiltonian coefficient
/// literally.
ScalingFit fit_scaling(std::vector<ScalingPoint> points, double jeff_over_a,
                       std::string convention);

struct ConvergenceFit {
    double rate = 0.0;       ///< per-round decay of log(1 - P_k) over the tail
    double r_squared = 0.0;  ///< fit quality of the log-linear tail
    int tail_start = 0;      ///< first round index (1-based) used for the fit
    int points_used = 0;
    bool already_converged = false;  ///< record converged before a tail formed
    bool degenerate = false;         ///< no decay detectable (all-zero rounds)
};

/// Fits log(1 - P_k) against the round index over the tail beyond the
/// first arrival (rounds from the largest single-round probability on).
ConvergenceFit fit_convergence(const TransferRecord& record);

struct SweepRow {
    int n = 0;
    std::string policy;
    double time = 0.0;
    int rounds = 0;
    double cumulative = 0.0;
    std::string status;  ///< "ok" or the error message
};

/// One protocol run per (N, policy) on uniform chains with J = 1.
/// Deterministic: identical inputs produce identical tables; per-row
/// failures are recorded in the status column instead of aborting.
std::vector<SweepRow> sweep(const std::vector<int>& n_values, double target,
                            const std::vector<SchedulePolicy>& policies);

}  // namespace dualrail
