#include "dualrail/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dualrail/errors.hpp"
#include "dualrail/evolution.hpp"
#include "dualrail/format.hpp"

namespace dualrail {

SchedulePolicy SchedulePolicy::regular(double tau_scale, int max_rounds) {
    SchedulePolicy policy;
    policy.kind = Kind::regular;
    policy.tau_scale = tau_scale;
    policy.max_rounds = max_rounds;
    return policy;
}

SchedulePolicy SchedulePolicy::greedy(int max_rounds, double window, double grid_step) {
    SchedulePolicy policy;
    policy.kind = Kind::greedy;
    policy.max_rounds = max_rounds;
    policy.window = window;
    policy.grid_step = grid_step;
    return policy;
}

std::string policy_name(const SchedulePolicy& policy) {
    return policy.kind == SchedulePolicy::Kind::regular ? "regular" : "greedy";
}

MeasurementSchedule make_schedule(const CouplingGraph& graph, const SchedulePolicy& policy) {
    if (policy.kind == SchedulePolicy::Kind::regular) {
        return default_regular_schedule(graph, policy.max_rounds, policy.tau_scale);
    }
    const double j = reference_hop(graph);
    const int n = graph.node_count();
    const double window =
        policy.window > 0.0 ? policy.window : std::max(3.0, 0.75 * n) / j;
    const double grid_step =
        policy.grid_step > 0.0 ? policy.grid_step : window / 200.0;
    return GreedyOptimized(window, grid_step, policy.max_rounds);
}

TimeToFidelity time_to_fidelity(const CouplingGraph& graph, const SchedulePolicy& policy,
                                double target) {
    if (!(target > 0.0) || !(target < 1.0)) {
        throw InvalidParameterError("target fidelity must lie in (0, 1)");
    }
    const double ceiling = dark_weight(graph, graph.sender(), graph.receiver());
    if (ceiling < target) {
        throw UnreachableFidelityError("success ceiling " + format_g17(ceiling) +
                                       " sits below the target " + format_g17(target));
    }
    const PolaritonQubit probe(1.0, 0.0);  // transfer time does not depend on the qubit
    const TransferRecord record =
        run_protocol(graph, probe, make_schedule(graph, policy), target);
    if (!record.converged) {
        throw ProtocolExhaustedError("schedule exhausted at cumulative success " +
                                     format_g17(record.final_cumulative()) +
                                     "; increase max_rounds");
    }
    return {record.elapsed, static_cast<int>(record.rounds.size()),
            record.final_cumulative()};
}

ScalingFit fit_scaling(std::vector<ScalingPoint> points, double jeff_over_a,
                       std::string convention) {
    std::set<int> distinct;
    for (const auto& p : points) distinct.insert(p.n);
    if (distinct.size() < 5) {
        throw FitError("scaling fit needs at least 5 distinct chain lengths, got " +
                       std::to_string(distinct.size()));
    }
    if (!(jeff_over_a > 0.0)) {
        throw FitError("jeff_over_a must be positive");
    }

    // y = log c + p x with x = log N and y the A-unit log time with the
    // |ln(1-F)| factor removed.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const int n = static_cast<int>(points.size());
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        const auto& p = points[i];
        if (!(p.fidelity > 0.0) || !(p.fidelity < 1.0) || !(p.time > 0.0) || !(p.hop > 0.0) ||
            p.n < 1) {
            throw FitError("invalid scaling point (N=" + std::to_string(p.n) + ")");
        }
        const double t_in_a_units = p.time * p.hop / jeff_over_a;
        xs[i] = std::log(double(p.n));
        ys[i] = std::log(t_in_a_units) - std::log(std::abs(std::log1p(-p.fidelity)));
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double det = n * sxx - sx * sx;
    if (std::abs(det) < 1e-12 * n * n) {
        throw FitError("degenerate design matrix in scaling fit");
    }
    const double p_hat = (n * sxy - sx * sy) / det;
    const double logc_hat = (sy - p_hat * sx) / n;

    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = ys[i] - logc_hat - p_hat * xs[i];
        ss += r * r;
    }

    ScalingFit fit;
    fit.constant = std::exp(logc_hat);
    fit.exponent = p_hat;
    fit.residual = std::sqrt(ss / n);
    fit.convention = std::move(convention);
    fit.jeff_over_a = jeff_over_a;
    fit.points = std::move(points);
    return fit;
}

ConvergenceFit fit_convergence(const TransferRecord& record) {
    const auto& rounds = record.rounds;
    if (rounds.size() < 10) {
        if (record.converged) {
            // stopped early because the target was reached; nothing to fit
            ConvergenceFit fit;
            fit.already_converged = true;
            fit.points_used = static_cast<int>(rounds.size());
            return fit;
        }
        throw FitError("convergence fit needs at least 10 recorded rounds, got " +
                       std::to_string(rounds.size()));
    }

    ConvergenceFit fit;
    double p_max = 0.0;
    int arg_max = 0;
    for (int i = 0; i < static_cast<int>(rounds.size()); ++i) {
        if (rounds[i].p_absolute > p_max) {
            p_max = rounds[i].p_absolute;
            arg_max = i;
        }
    }
    if (p_max == 0.0) {
        fit.degenerate = true;  // schedule never sees the excitation
        return fit;
    }
    fit.tail_start = rounds[arg_max].index;

    std::vector<double> xs, ys;
    for (int i = arg_max; i < static_cast<int>(rounds.size()); ++i) {
        const double failure = 1.0 - rounds[i].cumulative;
        if (failure < 1e-15) break;  // converged to the floating-point floor
        xs.push_back(double(rounds[i].index));
        ys.push_back(std::log(failure));
    }
    fit.points_used = static_cast<int>(xs.size());
    if (fit.points_used < 5) {
        fit.already_converged = record.converged || fit.points_used == 0;
        if (!fit.already_converged) {
            throw FitError("too few tail points for a convergence fit");
        }
        return fit;
    }

    const int n = fit.points_used;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double det = n * sxx - sx * sx;
    const double slope = (n * sxy - sx * sy) / det;
    const double intercept = (sy - slope * sx) / n;

    double ss_res = 0.0, ss_tot = 0.0;
    const double y_mean = sy / n;
    for (int i = 0; i < n; ++i) {
        const double fit_y = intercept + slope * xs[i];
        ss_res += (ys[i] - fit_y) * (ys[i] - fit_y);
        ss_tot += (ys[i] - y_mean) * (ys[i] - y_mean);
    }
    fit.rate = -slope;
    if (ss_tot < 1e-30) {
        fit.degenerate = true;
        fit.r_squared = 0.0;
    } else {
        fit.r_squared = 1.0 - ss_res / ss_tot;
    }
    return fit;
}

std::vector<SweepRow> sweep(const std::vector<int>& n_values, double target,
                            const std::vector<SchedulePolicy>& policies) {
    std::vector<SweepRow> rows;
    rows.reserve(n_values.size() * policies.size());
    for (int n : n_values) {
        for (const auto& policy : policies) {
            SweepRow row;
            row.n = n;
            row.policy = policy_name(policy);
            try {
                const CouplingGraph graph = build_chain(n, 1.0);
                const TimeToFidelity result = time_to_fidelity(graph, policy, target);
                row.time = result.time;
                row.rounds = result.rounds;
                row.cumulative = result.cumulative;
                row.status = "ok";
            } catch (const Error& e) {
                row.status = std::string("failed: ") + e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace dualrail
