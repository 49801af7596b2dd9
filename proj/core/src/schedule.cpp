#include "dualrail/schedule.hpp"

#include <cmath>

#include "dualrail/errors.hpp"
#include "dualrail/evolution.hpp"
#include "dualrail/graph.hpp"

namespace dualrail {

SnapshotList::SnapshotList(std::vector<double> times_in) : times(std::move(times_in)) {
    if (times.empty()) {
        throw InvalidParameterError("snapshot schedule needs at least one time");
    }
    double prev = -1.0;
    for (double t : times) {
        if (!(t >= 0.0) || !std::isfinite(t)) {
            throw InvalidParameterError("snapshot times must be finite and non-negative");
        }
        if (t <= prev) {
            throw InvalidParameterError("snapshot times must be strictly increasing");
        }
        prev = t;
    }
}

Regular::Regular(double t0_in, double tau_in, int max_rounds_in)
    : t0(t0_in), tau(tau_in), max_rounds(max_rounds_in) {
    if (!(t0 >= 0.0) || !std::isfinite(t0)) {
        throw InvalidParameterError("regular schedule t0 must be non-negative");
    }
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        throw InvalidParameterError("regular schedule interval must be positive");
    }
    if (max_rounds < 1) {
        throw InvalidParameterError("regular schedule needs at least one round");
    }
}

GreedyOptimized::GreedyOptimized(double window_in, double grid_step_in, int max_rounds_in)
    : window(window_in), grid_step(grid_step_in), max_rounds(max_rounds_in) {
    if (!(window > 0.0) || !(grid_step > 0.0)) {
        throw InvalidParameterError("greedy schedule window and grid step must be positive");
    }
    if (grid_step > window) {
        throw InvalidParameterError("greedy grid step must not exceed the window");
    }
    if (max_rounds < 1) {
        throw InvalidParameterError("greedy schedule needs at least one round");
    }
}

Continuous::Continuous(double rate_in, double duration_in, double dt_in)
    : rate(rate_in), duration(duration_in), dt(dt_in) {
    if (!(rate > 0.0) || !(duration > 0.0) || !(dt > 0.0)) {
        throw InvalidParameterError("continuous schedule rate, duration and step must be positive");
    }
}

Regular default_regular_schedule(const CouplingGraph& graph, int max_rounds, double tau_scale) {
    const double j = reference_hop(graph);
    const double t0 = arrival_time_estimate(graph, j).time;
    const double tau = tau_scale * std::cbrt(double(graph.node_count())) / j;
    return Regular(t0, tau, max_rounds);
}

}  // namespace dualrail
