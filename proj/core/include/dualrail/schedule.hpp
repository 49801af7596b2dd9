#pragma once

#include <variant>
#include <vector>

namespace dualrail {

class CouplingGraph;

/// Explicit measurement times, strictly increasing (t = 0 allowed).
struct SnapshotList {
    std::vector<double> times;

    explicit SnapshotList(std::vector<double> times);
};

/// Evenly spaced measurements t0, t0 + tau, ...
struct Regular {
    double t0 = 0.0;
    double tau = 0.0;
    int max_rounds = 0;

    Regular(double t0, double tau, int max_rounds);
};

/// Greedy per-round search for the next measurement time over a forward
/// grid of the given step within the given window.
struct GreedyOptimized {
    double window = 0.0;
    double grid_step = 0.0;
    int max_rounds = 0;

    GreedyOptimized(double window, double grid_step, int max_rounds);
};

/// Continuous interrogation of the receiver at the given detection rate.
struct Continuous {
    double rate = 0.0;
    double duration = 0.0;
    double dt = 0.0;

    Continuous(double rate, double duration, double dt);
};

using MeasurementSchedule = std::variant<SnapshotList, Regular, GreedyOptimized, Continuous>;

/// Interval scale of the default regular schedule, in units of
/// N^{1/3} / J. Chosen from interval scans on chains: wide enough to let
/// the receiver refill between rounds, short enough not to idle.
inline constexpr double kDefaultIntervalScale = 0.35;

/// Regular schedule with first round at the ballistic arrival-time estimate
/// and interval tau_scale * N^{1/3} / J_ref.
Regular default_regular_schedule(const CouplingGraph& graph, int max_rounds,
                                 double tau_scale = kDefaultIntervalScale);

}  // namespace dualrail
