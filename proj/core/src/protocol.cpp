#include "dualrail/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>

#include <unsupported/Eigen/MatrixFunctions>

#include "dualrail/errors.hpp"
#include "dualrail/format.hpp"

namespace dualrail {

namespace {

constexpr double kZeroNorm = 1e-30;
constexpr double kCertainHerald = 1e-12;

std::vector<double> schedule_times(const CouplingGraph& graph, const MeasurementSchedule& schedule) {
    if (const auto* snaps = std::get_if<SnapshotList>(&schedule)) {
        return snaps->times;
    }
    if (const auto* reg = std::get_if<Regular>(&schedule)) {
        std::vector<double> times(reg->max_rounds);
        for (int k = 0; k < reg->max_rounds; ++k) {
            times[k] = reg->t0 + k * reg->tau;
        }
        return times;
    }
    if (const auto* greedy = std::get_if<GreedyOptimized>(&schedule)) {
        return optimize_schedule(graph, greedy->max_rounds, greedy->window, greedy->grid_step)
            .times;
    }
    throw InvalidParameterError("continuous schedules are handled by run_continuous");
}

/// Shared measurement loop; decay is empty for the lossless protocol.
TransferRecord run_rounds(const CouplingGraph& graph, const PolaritonQubit& qubit,
                          const std::vector<double>& times, double target,
                          const std::optional<DecayProfile>& decay) {
    if (!(target > 0.0) || !(target < 1.0)) {
        throw InvalidParameterError("target fidelity must lie in (0, 1), got " +
                                    format_g17(target));
    }

    TransferRecord record;
    if (!graph.sender_receiver_connected()) {
        record.ceiling = 0.0;
        record.note = "sender and receiver are in different components; success ceiling is 0";
        return record;
    }

    const SpectralDecomposition decomposition(graph);
    record.ceiling = dark_weight(decomposition, graph.sender(), graph.receiver());

    DualRailState state = encode_polariton_qubit(qubit.alpha(), qubit.beta(), graph);
    const bool lossy = decay.has_value() && !decay->is_zero();

    double cumulative = 0.0;
    double prev_norm2 = state.spatial.norm2();
    double t_prev = 0.0;
    int index = 0;
    for (double t : times) {
        const double step = t - t_prev;
        if (step > 0.0) {
            if (lossy) {
                state.spatial = evolve_nonhermitian(state.spatial, graph, *decay, step, step);
            } else {
                state.spatial = evolve(state.spatial, decomposition, step);
            }
        }
        const double norm2 = state.spatial.norm2();
        if (lossy) {
            record.decayed += prev_norm2 - norm2;
        }
        if (norm2 < kZeroNorm) {
            record.note = "state exhausted before the schedule ended";
            break;
        }

        const MeasurementOutcome outcome = measure_receiver(state, graph);
        cumulative += outcome.p_absolute;
        ++index;
        record.rounds.push_back({index, t, outcome.p_conditional, outcome.p_absolute, cumulative});
        record.elapsed = t;
        state = outcome.post_failure;
        prev_norm2 = state.spatial.norm2();
        t_prev = t;

        if (cumulative >= target) {
            record.converged = true;
            break;
        }
    }

    record.remaining = state.spatial.norm2();
    record.conditional_fidelity = qubit_fidelity(qubit, state.qubit);
    return record;
}

}  // namespace

MeasurementOutcome measure_receiver(const DualRailState& state, const CouplingGraph& graph) {
    if (state.spatial.size() != graph.node_count()) {
        throw DimensionError("state size does not match the graph");
    }
    const double norm2 = state.spatial.norm2();
    if (norm2 < kZeroNorm) {
        throw ProtocolExhaustedError("state has zero norm; nothing left to measure");
    }
    const int r = graph.receiver();
    const double p_abs = std::norm(state.spatial.amplitude(r));
    const double p_cond = p_abs / norm2;

    MeasurementOutcome outcome{
        0,
        0.0,
        p_cond,
        p_abs,
        p_cond >= 1.0 - kCertainHerald,
        state.qubit,
        DualRailState{state.qubit, state.spatial.with_zeroed(r)},
    };
    return outcome;
}

TransferRecord run_protocol(const CouplingGraph& graph, const PolaritonQubit& qubit,
                            const MeasurementSchedule& schedule, double target_fidelity) {
    return run_rounds(graph, qubit, schedule_times(graph, schedule), target_fidelity,
                      std::nullopt);
}

ContinuousRecord run_continuous(const CouplingGraph& graph, const PolaritonQubit& qubit,
                                double rate, double duration, double dt,
                                double target_fidelity) {
    const Continuous schedule(rate, duration, dt);  // validates positivity
    double j_max = 0.0;
    for (const auto& e : graph.edges()) j_max = std::max(j_max, e.weight);
    const double dt_limit = 0.1 * ((j_max > 0.0) ? std::min(1.0 / rate, 1.0 / j_max)
                                                 : 1.0 / rate);
    if (dt > dt_limit * (1.0 + 1e-12)) {
        throw StepSizeError("continuous step " + format_g17(dt) +
                            " too coarse; need dt <= " + format_g17(dt_limit));
    }

    ContinuousRecord result;
    TransferRecord& record = result.record;
    if (!graph.sender_receiver_connected()) {
        record.ceiling = 0.0;
        record.note = "sender and receiver are in different components; success ceiling is 0";
        return result;
    }

    const SpectralDecomposition decomposition(graph);
    record.ceiling = dark_weight(decomposition, graph.sender(), graph.receiver());

    const int n = graph.node_count();
    const int r = graph.receiver();
    const DecayProfile profile = DecayProfile::single_site(n, r, rate);

    const std::complex<double> im(0.0, 1.0);
    Eigen::MatrixXcd h_eff = hamiltonian_matrix(graph).cast<std::complex<double>>();
    h_eff -= 0.5 * im * Eigen::MatrixXcd(profile.rates().cast<std::complex<double>>().asDiagonal());
    const Eigen::MatrixXcd propagator = (-im * dt * h_eff).exp();

    DualRailState state = encode_polariton_qubit(qubit.alpha(), qubit.beta(), graph);
    Eigen::VectorXcd amps = state.spatial.vector();

    const long n_steps = std::lround(std::ceil(duration / dt - 1e-12));
    result.times.reserve(n_steps);
    result.cumulative.reserve(n_steps);
    result.density.reserve(n_steps);
    record.rounds.reserve(n_steps);

    double cumulative = 0.0;
    double prev_norm2 = amps.squaredNorm();
    for (long k = 0; k < n_steps; ++k) {
        const double t = std::min((k + 1) * dt, duration);
        amps = propagator * amps;
        const double norm2 = amps.squaredNorm();
        const double p_abs = prev_norm2 - norm2;
        const double p_cond = prev_norm2 > kZeroNorm ? p_abs / prev_norm2 : 0.0;
        cumulative += p_abs;

        result.times.push_back(t);
        result.cumulative.push_back(cumulative);
        result.density.push_back(rate * std::norm(amps(r - 1)));
        record.rounds.push_back(
            {static_cast<int>(k + 1), t, p_cond, p_abs, cumulative});
        prev_norm2 = norm2;
        if (!record.converged) {
            record.elapsed = t;  // detection-sufficient time once converged
            if (cumulative >= target_fidelity) {
                record.converged = true;
            }
        }
    }

    record.remaining = prev_norm2;
    record.conditional_fidelity = qubit_fidelity(qubit, state.qubit);
    return result;
}

SnapshotList optimize_schedule(const CouplingGraph& graph, int max_rounds, double window,
                               double grid_step) {
    const GreedyOptimized checked(window, grid_step, max_rounds);  // validates the inputs
    const SpectralDecomposition decomposition(graph);

    const int n = decomposition.size();
    const Eigen::VectorXd& lambda = decomposition.eigenvalues();
    const Eigen::VectorXd row_r = decomposition.eigenvectors().row(graph.receiver() - 1);
    Eigen::VectorXcd modal =
        decomposition.eigenvectors().row(graph.sender() - 1).transpose().cast<std::complex<double>>();

    const long n_candidates = std::lround(std::floor(window / grid_step + 1e-9));
    std::vector<double> times;
    times.reserve(max_rounds);
    double t_abs = 0.0;

    for (int round = 0; round < max_rounds; ++round) {
        const double norm2 = modal.squaredNorm();
        if (norm2 < kZeroNorm) break;

        double best_p = -1.0;
        double best_dt = grid_step;
        for (long m = 1; m <= n_candidates; ++m) {
            const double dt = m * grid_step;
            std::complex<double> f = 0.0;
            for (int k = 0; k < n; ++k) {
                f += row_r(k) * modal(k) * std::polar(1.0, -lambda(k) * dt);
            }
            const double p = std::norm(f) / norm2;
            if (p > best_p) {
                best_p = p;
                best_dt = dt;
            }
        }

        // Commit: rotate to the chosen time and collapse the receiver site.
        std::complex<double> f_r = 0.0;
        for (int k = 0; k < n; ++k) {
            modal(k) *= std::polar(1.0, -lambda(k) * best_dt);
            f_r += row_r(k) * modal(k);
        }
        modal -= f_r * row_r.cast<std::complex<double>>();

        t_abs += best_dt;
        times.push_back(t_abs);
    }
    return SnapshotList(std::move(times));
}

double dark_weight(const SpectralDecomposition& decomposition, int sender, int receiver) {
    const int n = decomposition.size();
    if (sender < 1 || sender > n || receiver < 1 || receiver > n) {
        throw DimensionError("sender/receiver out of range in dark_weight");
    }
    const Eigen::VectorXd& lambda = decomposition.eigenvalues();
    const Eigen::VectorXd c_r = decomposition.eigenvectors().row(receiver - 1);
    const Eigen::VectorXd c_s = decomposition.eigenvectors().row(sender - 1);

    // Eigenvalues within the cluster tolerance are treated as one degenerate
    // eigenspace; within it only the direction P e_r is visible to the
    // receiver.
    const double tol = 1e-8 * std::max(1.0, lambda.cwiseAbs().maxCoeff());
    double weight = 0.0;
    int a = 0;
    while (a < n) {
        int b = a;
        while (b + 1 < n && lambda(b + 1) - lambda(b) <= tol) ++b;
        double pr2 = 0.0;
        double dot = 0.0;
        for (int k = a; k <= b; ++k) {
            pr2 += c_r(k) * c_r(k);
            dot += c_s(k) * c_r(k);
        }
        if (pr2 > 1e-20) {
            weight += dot * dot / pr2;
        }
        a = b + 1;
    }
    return std::clamp(weight, 0.0, 1.0);
}

double dark_weight(const CouplingGraph& graph, int sender, int receiver) {
    return dark_weight(SpectralDecomposition(graph), sender, receiver);
}

LossyRecord lossy_run(const CouplingGraph& graph, const PolaritonQubit& qubit,
                      const MeasurementSchedule& schedule, const JchParams& params,
                      double target_fidelity) {
    const DecayProfile profile =
        DecayProfile::uniform(graph.node_count(), params.polariton_decay());
    TransferRecord record = run_rounds(graph, qubit, schedule_times(graph, schedule),
                                       target_fidelity, profile);
    const double efficiency = record.final_cumulative();
    return {std::move(record), efficiency};
}

}  // namespace dualrail
