#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "dualrail/errors.hpp"
#include "dualrail/jch.hpp"
#include "dualrail/spectral.hpp"

using namespace dualrail;
using Complex = std::complex<double>;

namespace {
const double kPi = std::acos(-1.0);

// Brute-force sector dimension: iterate the full product space and count.
// Kept independent of the enumeration under test.
int count_sector_configs(int n_sites, int n_max, int sector) {
    const long per_site = 2L * (n_max + 1);
    long total = 1;
    for (int k = 0; k < n_sites; ++k) total *= per_site;
    int count = 0;
    for (long code = 0; code < total; ++code) {
        long rest = code;
        int excitation = 0;
        for (int k = 0; k < n_sites; ++k) {
            const long state = rest % per_site;
            rest /= per_site;
            excitation += static_cast<int>(state / 2) + static_cast<int>(state % 2);
        }
        if (excitation == sector) ++count;
    }
    return count;
}
}  // namespace

TEST_SUITE("jch-exact") {

TEST_CASE("basis enumeration: dimensions and ordering") {
    const FockAtomBasis single = enumerate_basis(1, 1, 1);
    REQUIRE(single.size() == 2);
    // lexicographic: (photons, excited)
    CHECK(single.config(0).photons[0] == 0);
    CHECK(single.config(0).excited[0] == 1);
    CHECK(single.config(1).photons[0] == 1);
    CHECK(single.config(1).excited[0] == 0);

    CHECK(enumerate_basis(2, 1, 1).size() == 4);

    // two-excitation sector on two sites: frozen against the brute count
    CHECK(count_sector_configs(2, 2, 2) == 8);
    CHECK(enumerate_basis(2, 2, 2).size() == 8);
    CHECK(enumerate_basis(2, 3, 2).size() == 8);  // cutoff above the sector adds nothing

    for (int n_sites : {1, 2, 3}) {
        for (int n_max : {1, 2, 3}) {
            for (int sector : {0, 1, 2, 3}) {
                CHECK(enumerate_basis(n_sites, n_max, sector).size() ==
                      count_sector_configs(n_sites, n_max, sector));
            }
        }
    }

    // uniqueness and exact sector restriction
    const FockAtomBasis basis = enumerate_basis(3, 2, 2);
    for (int i = 0; i < basis.size(); ++i) {
        CHECK(basis.config(i).total_excitation() == 2);
        CHECK(basis.index_of(basis.config(i)) == i);
        if (i > 0) CHECK_FALSE(basis.config(i) == basis.config(i - 1));
    }

    CHECK_THROWS_AS(enumerate_basis(5, 2, 1), CapacityError);
    CHECK_THROWS_AS(enumerate_basis(2, 5, 1), CapacityError);
}

TEST_CASE("single-site spectrum reproduces the polariton ladder") {
    const double g = 1.0;
    const JchParams params(1e4, 1e4, g, 0.0, 0.0, 0.0, 3);
    const CouplingGraph site = build_chain(1, 1.0);

    for (int n = 1; n <= 3; ++n) {
        const FockAtomBasis basis = enumerate_basis(1, 3, n);
        REQUIRE(basis.size() == 2);
        const JchMatrix h = build_jch(params, site, basis);
        const double e_minus = h.eigenvalues()(0);
        const double e_plus = h.eigenvalues()(1);
        const double expected_minus =
            polariton_energy(n, Branch::minus, params).value;
        const double expected_plus = polariton_energy(n, Branch::plus, params).value;
        CHECK(std::abs(e_minus - expected_minus) < 1e-10 * g);
        CHECK(std::abs(e_plus - expected_plus) < 1e-10 * g);
    }
}

TEST_CASE("decoupled cavities: spectrum is a direct sum of site spectra") {
    const JchParams params(1e4, 1e4, 1.0, 0.0, 0.0, 0.0, 1);
    const CouplingGraph pair(2, {}, 1, 2);
    const FockAtomBasis basis = enumerate_basis(2, 1, 1);
    const JchMatrix h = build_jch(params, pair, basis);
    // one excitation on either of two identical sites: both polariton
    // energies appear twice
    const Eigen::VectorXd ev = h.eigenvalues();
    REQUIRE(ev.size() == 4);
    CHECK(ev(0) == doctest::Approx(1e4 - 1.0).epsilon(1e-12));
    CHECK(ev(1) == doctest::Approx(1e4 - 1.0).epsilon(1e-12));
    CHECK(ev(2) == doctest::Approx(1e4 + 1.0).epsilon(1e-12));
    CHECK(ev(3) == doctest::Approx(1e4 + 1.0).epsilon(1e-12));
}

TEST_CASE("matrix structure: hermitian, sector-conserving") {
    const JchParams params(1e4, 1.00005e4, 0.8, 0.0, 0.0, 0.0, 1);
    // full basis on two sites: the Hamiltonian must not mix sectors
    const FockAtomBasis full = enumerate_basis(2, 1, std::nullopt);
    const JchMatrix h = build_jch(params, build_chain(2, 0.01), full);
    CHECK((h.matrix() - h.matrix().transpose()).norm() == 0.0);
    for (int i = 0; i < full.size(); ++i) {
        for (int j = 0; j < full.size(); ++j) {
            if (full.config(i).total_excitation() != full.config(j).total_excitation()) {
                CHECK(h.matrix()(i, j) == 0.0);
            }
        }
    }
}

TEST_CASE("exact evolution: identity, Rabi period, eigenstate phases") {
    const double g = 1.0;
    const JchParams params(1e4, 1e4, g, 0.0, 0.0, 0.0, 1);
    const CouplingGraph site = build_chain(1, 1.0);
    const FockAtomBasis basis = enumerate_basis(1, 1, 1);
    const JchMatrix h = build_jch(params, site, basis);

    FockConfig photon{{1}, {0}};
    FockConfig atom{{0}, {1}};
    const int ip = basis.index_of(photon);
    const int ia = basis.index_of(atom);

    Eigen::VectorXcd start = Eigen::VectorXcd::Zero(2);
    start(ip) = 1.0;  // |g,1>

    // t = 0 is the identity
    CHECK((exact_evolve(start, h, 0.0) - start).norm() == 0.0);

    // Rabi oscillation: fully atomic at t = pi/(2g), back at t = pi/g
    const Eigen::VectorXcd quarter = exact_evolve(start, h, kPi / (2.0 * g));
    CHECK(std::norm(quarter(ia)) == doctest::Approx(1.0).epsilon(1e-10));
    const Eigen::VectorXcd half = exact_evolve(start, h, kPi / g);
    CHECK(std::norm(half(ip)) == doctest::Approx(1.0).epsilon(1e-10));

    // norm preservation
    CHECK(exact_evolve(start, h, 17.3).norm() == doctest::Approx(1.0).epsilon(1e-12));

    // an eigenstate only picks up a phase
    const Eigen::VectorXcd plus = polariton_site_state(basis, 1, Branch::plus);
    const Eigen::VectorXcd evolved = exact_evolve(plus, h, 3.0);
    for (int k = 0; k < 2; ++k) {
        CHECK(std::norm(evolved(k)) == doctest::Approx(std::norm(plus(k))).epsilon(1e-12));
    }
}

TEST_CASE("interconversion leakage: zero without hopping, tiny in the strong regime") {
    const JchParams decoupled = JchParams::resonant(1.0, 0.0, 1);
    const CouplingGraph pair(2, {}, 1, 2);
    const LeakageReport none = interconversion_leakage(decoupled, pair, 50.0);
    CHECK(none.max_plus_population < 1e-20);

    const JchParams strong = JchParams::resonant(1.0, 0.01, 1);
    const LeakageReport leak =
        interconversion_leakage(strong, build_chain(2, 0.01), 10.0 / 0.01);
    CHECK(leak.max_plus_population < 1e-3);
    // second-order estimate (A/4g)^2 per neighbour sets the scale
    CHECK(leak.max_plus_population > 1e-7);

    const JchParams weak = JchParams::resonant(1.0, 0.5, 1);
    const LeakageReport coarse = interconversion_leakage(weak, build_chain(2, 0.5), 20.0);
    CHECK(coarse.max_plus_population > 10.0 * leak.max_plus_population);

    // one-excitation quantities do not move when the cutoff rises: the
    // sector basis is already complete at n_max = 1
    const JchParams roomier = strong.with_n_max(2);
    const LeakageReport same =
        interconversion_leakage(roomier, build_chain(2, 0.01), 10.0 / 0.01);
    CHECK(std::abs(same.max_plus_population - leak.max_plus_population) <
          0.01 * leak.max_plus_population);

    CHECK_THROWS_AS(
        interconversion_leakage(JchParams(1e4, 1.1e4, 1.0, 0.01), build_chain(2, 0.01), 1.0),
        InvalidParameterError);
}

TEST_CASE("hopping calibration: both species at half the bare rate") {
    const JchParams params = JchParams::resonant(1.0, 0.01, 1);
    const CalibrationResult cal = calibrate_j_eff(params);
    CHECK(cal.ratio_to_a == doctest::Approx(0.5).epsilon(0.02));
    CHECK(std::abs(cal.j_plus - cal.j_minus) / cal.j_plus < 0.01);

    const CalibrationResult cal_converged = calibrate_j_eff(JchParams::resonant(1.0, 0.0025, 1));
    CHECK(std::abs(cal_converged.ratio_to_a - cal.ratio_to_a) / cal.ratio_to_a < 0.005);

    CHECK_THROWS_AS(calibrate_j_eff(JchParams::resonant(1.0, 0.0, 1)), CalibrationError);
}

TEST_CASE("blockade: strong coupling suppresses double occupancy") {
    const double hop = 0.01;
    const JchParams strong = JchParams::resonant(1.0, hop, 2);
    const BlockadeResult blockade =
        blockade_check(strong, build_chain(2, hop), 1, 2, Branch::minus, 10.0 / hop);
    CHECK(blockade.max_double_occupancy < 1e-2);
    CHECK_FALSE(blockade.cutoff_sensitive);
    CHECK(blockade.cutoff_shift < 0.10);

    // no transport at A = 0
    const JchParams fixed = JchParams::resonant(1.0, 0.0, 2);
    const CouplingGraph pair(2, {}, 1, 2);
    const BlockadeResult frozen = blockade_check(fixed, pair, 1, 2, Branch::minus, 30.0);
    CHECK(frozen.max_double_occupancy < 1e-20);

    // comparable coupling and hopping: blockade collapses
    const JchParams weak = JchParams::resonant(1.0, 1.0, 2);
    const BlockadeResult open_gate =
        blockade_check(weak, build_chain(2, 1.0), 1, 2, Branch::minus, 10.0);
    CHECK(open_gate.max_double_occupancy > 10.0 * blockade.max_double_occupancy);

    CHECK_THROWS_AS(blockade_check(JchParams::resonant(1.0, hop, 1), build_chain(2, hop), 1, 2,
                                   Branch::minus, 1.0),
                    InvalidParameterError);
    CHECK_THROWS_AS(
        blockade_check(strong, build_chain(2, hop), 1, 1, Branch::minus, 1.0),
        InvalidParameterError);
}

TEST_CASE("effective model tracks the exact dynamics in the strong regime") {
    const double hop = 0.01;
    const JchParams strong = JchParams::resonant(1.0, hop, 1);
    const PolaritonQubit qubit(Complex(1.0 / std::sqrt(2.0), 0.0),
                               Complex(0.0, 1.0 / std::sqrt(2.0)));

    const OverlapResult instant =
        effective_vs_exact_overlap(strong, build_chain(3, hop), qubit, 0.0);
    CHECK(instant.min_overlap == doctest::Approx(1.0).epsilon(1e-12));

    const OverlapResult tracked =
        effective_vs_exact_overlap(strong, build_chain(3, hop), qubit, 10.0 / hop);
    CHECK(tracked.min_overlap > 0.99);

    const JchParams loose = JchParams::resonant(1.0, 0.2, 1);
    const OverlapResult degraded =
        effective_vs_exact_overlap(loose, build_chain(3, 0.2), qubit, 10.0 / 0.2);
    CHECK(degraded.min_overlap < tracked.min_overlap);
}

}  // TEST_SUITE
