#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "dualrail/errors.hpp"
#include "dualrail/evolution.hpp"
#include "dualrail/protocol.hpp"
#include "support/oracles.hpp"

using namespace dualrail;
using Complex = std::complex<double>;

namespace {
const double kPi = std::acos(-1.0);
const double kSqrt2 = std::sqrt(2.0);

// Symmetric Y: stem 1 - fork 2 - mirror arms 3, 4. Sender on the stem,
// receiver on one arm. The degenerate zero-eigenvalue pair hides half of
// the sender's weight from the receiver, so the exact ceiling is 1/2.
CouplingGraph symmetric_y() {
    return build_graph(4, {{1, 2, 1.0}, {2, 3, 1.0}, {2, 4, 1.0}}, 1, 3);
}
}  // namespace

TEST_SUITE("protocol") {

TEST_CASE("measure_receiver on certain and null states") {
    const CouplingGraph chain = build_chain(3, 1.0);

    // fully localized on the receiver: certain detection, fidelity 1
    Eigen::VectorXcd at_r = Eigen::VectorXcd::Zero(3);
    at_r(2) = Complex(0.0, -1.0);
    const DualRailState localized{PolaritonQubit(0.6, 0.8), SingleExcitationState{at_r}};
    const MeasurementOutcome certain = measure_receiver(localized, chain);
    CHECK(certain.p_conditional == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(certain.heralded);
    CHECK(qubit_fidelity(localized.qubit, certain.received) == doctest::Approx(1.0).epsilon(1e-12));

    // zero receiver amplitude: null measurement leaves the state unchanged
    Eigen::VectorXcd elsewhere = Eigen::VectorXcd::Zero(3);
    elsewhere(0) = Complex(0.8, 0.0);
    elsewhere(1) = Complex(0.0, 0.6);
    const DualRailState off{PolaritonQubit(1.0, 0.0), SingleExcitationState{elsewhere}};
    const MeasurementOutcome null_outcome = measure_receiver(off, chain);
    CHECK(null_outcome.p_absolute == 0.0);
    CHECK_FALSE(null_outcome.heralded);
    CHECK((null_outcome.post_failure.spatial.vector() - elsewhere).norm() == 0.0);

    // N=3 chain measured at the perfect-transfer time
    DualRailState evolved = encode_polariton_qubit(1.0, 0.0, chain);
    evolved.spatial = evolve(evolved.spatial, chain, kPi / kSqrt2);
    const MeasurementOutcome perfect = measure_receiver(evolved, chain);
    CHECK(perfect.p_conditional == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(perfect.p_absolute == doctest::Approx(1.0).epsilon(1e-12));

    // zero-norm state is exhausted
    const DualRailState empty{PolaritonQubit(1.0, 0.0),
                              SingleExcitationState{Eigen::VectorXcd::Zero(3)}};
    CHECK_THROWS_AS(measure_receiver(empty, chain), ProtocolExhaustedError);
}

TEST_CASE("failed measurement only touches the receiver site") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        std::uniform_int_distribution<int> size(2, 15);
        const CouplingGraph graph = test::random_connected_graph(rng, size(rng));
        DualRailState state = encode_polariton_qubit(1.0, 0.0, graph);
        state.spatial = evolve(state.spatial, graph, 1.7);
        const MeasurementOutcome outcome = measure_receiver(state, graph);
        for (int site = 1; site <= graph.node_count(); ++site) {
            if (site == graph.receiver()) {
                CHECK(outcome.post_failure.spatial.amplitude(site) == Complex(0.0, 0.0));
            } else {
                CHECK(outcome.post_failure.spatial.amplitude(site) ==
                      state.spatial.amplitude(site));
            }
        }
        CHECK(outcome.post_failure.qubit.alpha() == state.qubit.alpha());
        CHECK(outcome.post_failure.qubit.beta() == state.qubit.beta());
    }
}

TEST_CASE("run_protocol: frozen small-chain rounds") {
    const CouplingGraph two = build_chain(2, 1.0);
    const PolaritonQubit qubit(0.6, Complex(0.0, 0.8));

    const TransferRecord perfect =
        run_protocol(two, qubit, MeasurementSchedule(SnapshotList({kPi / 2.0})), 0.99);
    REQUIRE(perfect.rounds.size() == 1);
    CHECK(perfect.rounds[0].p_conditional == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(perfect.converged);
    CHECK(perfect.elapsed == kPi / 2.0);
    CHECK(perfect.conditional_fidelity == doctest::Approx(1.0).epsilon(1e-12));

    const TransferRecord nothing =
        run_protocol(two, qubit, MeasurementSchedule(SnapshotList({0.0})), 0.99);
    REQUIRE(nothing.rounds.size() == 1);
    CHECK(nothing.rounds[0].p_absolute == 0.0);
    CHECK_FALSE(nothing.converged);

    // disconnected sender/receiver: diagnostic record, not an exception
    const CouplingGraph split = build_graph(4, {{1, 2, 1.0}, {3, 4, 1.0}}, 1, 3);
    const TransferRecord blocked =
        run_protocol(split, qubit, MeasurementSchedule(SnapshotList({1.0})), 0.9);
    CHECK_FALSE(blocked.converged);
    CHECK(blocked.ceiling == 0.0);
    CHECK_FALSE(blocked.note.empty());
    CHECK(blocked.rounds.empty());

    CHECK_THROWS_AS(run_protocol(two, qubit, MeasurementSchedule(SnapshotList({1.0})), 1.5),
                    InvalidParameterError);
    CHECK_THROWS_AS(
        run_protocol(two, qubit, MeasurementSchedule(Continuous(1.0, 1.0, 0.01)), 0.9),
        InvalidParameterError);
}

TEST_CASE("heralded perfection and norm accounting against the two-rail oracle") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> size(2, 18);
        const int n = size(rng);
        const CouplingGraph graph = test::random_connected_graph(rng, n);
        const PolaritonQubit qubit = test::random_qubit(rng);
        std::uniform_int_distribution<int> rounds(1, 8);
        const auto times = test::random_snapshot_times(rng, rounds(rng), 3.0 * n);
        if (times.empty()) continue;

        const TransferRecord record =
            run_protocol(graph, qubit, MeasurementSchedule(SnapshotList(times)), 0.999999);

        // independent two-rail tensor simulation of the same run
        test::TwoRailSim oracle(graph, qubit);
        double cumulative = 0.0;
        double t_prev = 0.0;
        size_t executed = 0;
        for (double t : times) {
            oracle.evolve(t - t_prev);
            t_prev = t;
            const auto m = oracle.measure();
            cumulative += m.p_absolute;
            if (m.p_absolute > 1e-12) {
                CHECK(m.fidelity == doctest::Approx(1.0).epsilon(1e-10));
            }
            REQUIRE(executed < record.rounds.size());
            CHECK(record.rounds[executed].p_absolute ==
                  doctest::Approx(m.p_absolute).epsilon(1e-9));
            CHECK(record.rounds[executed].cumulative ==
                  doctest::Approx(cumulative).epsilon(1e-9));
            ++executed;
            if (record.rounds[executed - 1].cumulative >= 0.999999) break;
        }

        // norm accounting: harvested + remaining = 1 after every round
        CHECK(record.final_cumulative() + record.remaining ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(oracle.norm2() - record.remaining) < 1e-9);

        // cumulative success is monotone and respects the reachability ceiling
        double prev = 0.0;
        for (const auto& round : record.rounds) {
            CHECK(round.cumulative >= prev);
            prev = round.cumulative;
        }
        CHECK(record.final_cumulative() <= record.ceiling + 1e-9);

        // product identity P_k = 1 - prod(1 - p_m) for lossless runs
        double survivor = 1.0;
        for (const auto& round : record.rounds) {
            survivor *= 1.0 - round.p_conditional;
            CHECK(round.cumulative == doctest::Approx(1.0 - survivor).epsilon(1e-12));
        }

        CHECK(record.conditional_fidelity == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("regular schedules eventually converge on chains") {
    const CouplingGraph chain = build_chain(7, 1.0);
    const PolaritonQubit qubit(1.0, 0.0);
    const TransferRecord record = run_protocol(
        chain, qubit, MeasurementSchedule(default_regular_schedule(chain, 800)), 0.9995);
    CHECK(record.converged);
    CHECK(record.final_cumulative() >= 0.9995);
}

TEST_CASE("N=20 regular run reaches 0.99 on the expected time scale") {
    const CouplingGraph chain = build_chain(20, 1.0);
    const TransferRecord record =
        run_protocol(chain, PolaritonQubit(1.0, 0.0),
                     MeasurementSchedule(default_regular_schedule(chain, 10000)), 0.99);
    REQUIRE(record.converged);
    // within a factor of 2 of 0.33 N^(5/3) ln(100) in the calibrated
    // convention (bare inter-cavity rate A = 2J)
    const double law = 0.33 * std::pow(20.0, 5.0 / 3.0) * std::abs(std::log(0.01));
    const double elapsed_in_a_units = record.elapsed * 2.0;
    CHECK(elapsed_in_a_units >= 0.5 * law);
    CHECK(elapsed_in_a_units <= 2.0 * law);
}

TEST_CASE("dark weight: chains are fully reachable, the symmetric Y is not") {
    for (int n : {2, 3, 5, 9, 17, 30}) {
        const CouplingGraph chain = build_chain(n, 1.0);
        CHECK(std::abs(dark_weight(chain, 1, n) - 1.0) < 1e-10);
        CHECK(std::abs(dark_weight(chain, n, 1) - 1.0) < 1e-10);
    }
    // s = r is trivially reachable
    CHECK(dark_weight(build_chain(5, 1.0), 3, 3) == doctest::Approx(1.0).epsilon(1e-12));

    // symmetric Y: the antisymmetric arm combination is degenerate with a
    // stem mode, hiding exactly half of the stem sender's weight
    const CouplingGraph y = symmetric_y();
    const double ceiling = dark_weight(y, 1, 3);
    CHECK(ceiling == doctest::Approx(0.5).epsilon(1e-10));
    // from the fork everything is reachable
    CHECK(dark_weight(y, 2, 3) == doctest::Approx(1.0).epsilon(1e-10));

    // long repeated measurement converges to the ceiling
    const TransferRecord longrun = run_protocol(
        y, PolaritonQubit(1.0, 0.0), MeasurementSchedule(GreedyOptimized(6.0, 0.02, 400)),
        0.4999);
    CHECK(std::abs(longrun.final_cumulative() - ceiling) < 1e-3);
}

TEST_CASE("optimize_schedule finds the perfect-transfer times") {
    const double grid = 0.01;
    const SnapshotList two = optimize_schedule(build_chain(2, 1.0), 1, 3.0, grid);
    REQUIRE(two.times.size() == 1);
    CHECK(std::abs(two.times[0] - kPi / 2.0) <= grid + 1e-12);

    const SnapshotList three = optimize_schedule(build_chain(3, 1.0), 1, 4.0, grid);
    REQUIRE(three.times.size() == 1);
    CHECK(std::abs(three.times[0] - kPi / kSqrt2) <= grid + 1e-12);

    // greedy dominates the regular default at equal round count
    const CouplingGraph chain = build_chain(20, 1.0);
    const PolaritonQubit qubit(1.0, 0.0);
    const int rounds = 15;
    const Regular regular = default_regular_schedule(chain, rounds);
    const TransferRecord reg =
        run_protocol(chain, qubit, MeasurementSchedule(regular), 0.999999999);
    const SnapshotList greedy_times = optimize_schedule(chain, rounds, 15.0, 0.05);
    const TransferRecord greedy =
        run_protocol(chain, qubit, MeasurementSchedule(greedy_times), 0.999999999);
    CHECK(greedy.final_cumulative() >= reg.final_cumulative());
}

TEST_CASE("lossy runs: zero loss is the lossless protocol, uniform loss is exponential") {
    const CouplingGraph chain = build_chain(4, 1.0);
    std::mt19937_64 rng(77);
    const PolaritonQubit qubit = test::random_qubit(rng);
    const MeasurementSchedule schedule{SnapshotList({1.0, 2.5, 4.0, 6.0})};

    const JchParams lossless(0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 1);
    const LossyRecord same = lossy_run(chain, qubit, schedule, lossless, 0.999999);
    const TransferRecord reference = run_protocol(chain, qubit, schedule, 0.999999);
    REQUIRE(same.record.rounds.size() == reference.rounds.size());
    for (size_t k = 0; k < reference.rounds.size(); ++k) {
        CHECK(same.record.rounds[k].p_absolute ==
              doctest::Approx(reference.rounds[k].p_absolute).epsilon(1e-12));
    }
    CHECK(same.record.decayed == 0.0);

    // single site: survival is exactly exp(-gamma_p t)
    const CouplingGraph one = build_chain(1, 1.0);
    const JchParams lossy_params(0.0, 0.0, 1.0, 1.0, 0.3, 0.5, 1);
    const double gamma_p = lossy_params.polariton_decay();
    const LossyRecord single =
        lossy_run(one, PolaritonQubit(1.0, 0.0), MeasurementSchedule(SnapshotList({2.0})),
                  lossy_params, 0.5);
    REQUIRE(single.record.rounds.size() == 1);
    CHECK(single.record.rounds[0].p_absolute ==
          doctest::Approx(std::exp(-gamma_p * 2.0)).epsilon(1e-10));
    CHECK(single.efficiency == doctest::Approx(std::exp(-gamma_p * 2.0)).epsilon(1e-10));

    // norm accounting with decay: success + remaining + decayed = 1
    const JchParams noisy(0.0, 0.0, 1.0, 1.0, 0.05, 0.15, 1);
    const LossyRecord lossy = lossy_run(chain, qubit, schedule, noisy, 0.999999);
    CHECK(lossy.record.final_cumulative() + lossy.record.remaining + lossy.record.decayed ==
          doctest::Approx(1.0).epsilon(1e-12));
    // each lossy round is the lossless round attenuated by the envelope
    for (size_t k = 0; k < lossy.record.rounds.size(); ++k) {
        const double envelope = std::exp(-noisy.polariton_decay() * reference.rounds[k].time);
        CHECK(lossy.record.rounds[k].p_absolute ==
              doctest::Approx(reference.rounds[k].p_absolute * envelope).epsilon(1e-9));
    }
}

TEST_CASE("continuous detection: limits and the 2x2 oracle") {
    const CouplingGraph two = build_chain(2, 1.0);
    const PolaritonQubit qubit(1.0, 0.0);

    // vanishing rate: nothing detected
    const ContinuousRecord weak = run_continuous(two, qubit, 1e-6, 10.0, 0.05);
    CHECK(weak.record.final_cumulative() < 1e-4);

    // strong run detects everything; trajectory matches the closed form
    const ContinuousRecord strong = run_continuous(two, qubit, 1.0, 30.0, 0.05);
    CHECK(strong.record.final_cumulative() > 0.99);
    Eigen::Matrix2cd h_eff;
    h_eff << Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(1.0, 0.0), Complex(0.0, -0.5);
    for (size_t i = 99; i < strong.times.size(); i += 200) {
        const Eigen::Matrix2cd u = test::exp_minus_i_mt(h_eff, strong.times[i]);
        const double survival = std::norm(u(0, 0)) + std::norm(u(1, 0));
        CHECK(strong.cumulative[i] == doctest::Approx(1.0 - survival).epsilon(1e-8));
    }
    // detection accounting: cumulative + remaining = 1
    CHECK(strong.record.final_cumulative() + strong.record.remaining ==
          doctest::Approx(1.0).epsilon(1e-12));

    // Zeno suppression: moderate rates beat strong rates at fixed horizon
    const CouplingGraph ten = build_chain(10, 1.0);
    const ContinuousRecord moderate = run_continuous(ten, qubit, 1.0, 40.0, 0.05);
    const ContinuousRecord zeno = run_continuous(ten, qubit, 20.0, 40.0, 0.004);
    CHECK(moderate.record.final_cumulative() > zeno.record.final_cumulative());

    CHECK_THROWS_AS(run_continuous(two, qubit, 1.0, 10.0, 0.5), StepSizeError);
}

TEST_CASE("continuous detection tracks the best regular schedule") {
    // for a moderate horizon there is a rate whose cumulative detection
    // matches the best regular-schedule success within 0.05
    const CouplingGraph chain = build_chain(3, 1.0);
    const PolaritonQubit qubit(1.0, 0.0);
    const double horizon = 25.0;

    double best_regular = 0.0;
    for (double tau_scale : {0.2, 0.35, 0.5, 0.8, 1.2}) {
        const Regular schedule = default_regular_schedule(chain, 1000, tau_scale);
        std::vector<double> times;
        for (int k = 0; k < schedule.max_rounds; ++k) {
            const double t = schedule.t0 + k * schedule.tau;
            if (t > horizon) break;
            times.push_back(t);
        }
        if (times.empty()) continue;
        const TransferRecord record =
            run_protocol(chain, qubit, MeasurementSchedule(SnapshotList(times)), 0.9999999);
        best_regular = std::max(best_regular, record.final_cumulative());
    }

    double best_gap = 1.0;
    for (double rate : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
        const double dt = 0.09 * std::min(1.0, 1.0 / rate);
        const ContinuousRecord record = run_continuous(chain, qubit, rate, horizon, dt);
        best_gap = std::min(best_gap,
                            std::abs(record.record.final_cumulative() - best_regular));
    }
    CHECK(best_gap <= 0.05);
}

}  // TEST_SUITE
