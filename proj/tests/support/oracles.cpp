#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <unsupported/Eigen/MatrixFunctions>

#include "dualrail/spectral.hpp"

namespace dualrail::test {

Eigen::Matrix2cd exp_minus_i_mt(const Eigen::Matrix2cd& m, double t) {
    const Complex tau = 0.5 * (m(0, 0) + m(1, 1));
    const Complex delta = std::sqrt(0.25 * (m(0, 0) - m(1, 1)) * (m(0, 0) - m(1, 1)) +
                                    m(0, 1) * m(1, 0));
    const Complex phase = std::exp(Complex(0.0, -1.0) * tau * t);
    const Eigen::Matrix2cd traceless = m - tau * Eigen::Matrix2cd::Identity();

    Complex cos_term, sinc_term;
    if (std::abs(delta) < 1e-14) {
        cos_term = 1.0;
        sinc_term = Complex(0.0, -1.0) * t;  // limit of sin(d t)/d
    } else {
        cos_term = std::cos(delta * t);
        sinc_term = Complex(0.0, -1.0) * std::sin(delta * t) / delta;
    }
    return phase * (cos_term * Eigen::Matrix2cd::Identity() + sinc_term * traceless);
}

Eigen::MatrixXcd pade_exp_minus_i_mt(const Eigen::MatrixXcd& m, double t) {
    const Eigen::MatrixXcd a = Complex(0.0, -1.0) * t * m;
    return a.exp();
}

TwoRailSim::TwoRailSim(const CouplingGraph& graph, const PolaritonQubit& qubit)
    : hamiltonian_(hamiltonian_matrix(graph).cast<Complex>()),
      receiver_(graph.receiver()),
      alpha_(qubit.alpha()),
      beta_(qubit.beta()),
      rail_one_(Eigen::VectorXcd::Zero(graph.node_count())),
      rail_two_(Eigen::VectorXcd::Zero(graph.node_count())) {
    rail_one_(graph.sender() - 1) = beta_;
    rail_two_(graph.sender() - 1) = alpha_;
}

void TwoRailSim::evolve(double t) {
    const Eigen::MatrixXcd u = pade_exp_minus_i_mt(hamiltonian_, t);
    rail_one_ = u * rail_one_;
    rail_two_ = u * rail_two_;
}

TwoRailSim::Measurement TwoRailSim::measure() {
    const Complex a_r = rail_two_(receiver_ - 1);  // alpha branch
    const Complex b_r = rail_one_(receiver_ - 1);  // beta branch
    Measurement result;
    result.p_absolute = std::norm(a_r) + std::norm(b_r);
    if (result.p_absolute > 0.0) {
        const Complex overlap = std::conj(alpha_) * a_r + std::conj(beta_) * b_r;
        result.fidelity = std::norm(overlap) /
                          (result.p_absolute * (std::norm(alpha_) + std::norm(beta_)));
    }
    rail_one_(receiver_ - 1) = 0.0;
    rail_two_(receiver_ - 1) = 0.0;
    return result;
}

double TwoRailSim::norm2() const {
    return rail_one_.squaredNorm() + rail_two_.squaredNorm();
}

PolaritonQubit random_qubit(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Complex a(gauss(rng), gauss(rng));
    Complex b(gauss(rng), gauss(rng));
    const double norm = std::sqrt(std::norm(a) + std::norm(b));
    return PolaritonQubit(a / norm, b / norm);
}

CouplingGraph random_connected_graph(std::mt19937_64& rng, int n_sites) {
    std::uniform_real_distribution<double> weight(0.3, 2.0);
    std::uniform_int_distribution<int> coin(0, 3);
    std::vector<int> order(n_sites);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<Edge> edges;
    const auto add_edge = [&](int a, int b) {
        const int lo = std::min(a, b);
        const int hi = std::max(a, b);
        for (const auto& edge : edges) {
            if (edge.i == lo && edge.j == hi) return;
        }
        edges.push_back({lo, hi, weight(rng)});
    };
    for (int k = 1; k < n_sites; ++k) {
        std::uniform_int_distribution<int> parent(0, k - 1);
        add_edge(order[parent(rng)], order[k]);
    }
    // A few extra edges on top of the random spanning tree.
    const int extras = n_sites > 2 ? coin(rng) : 0;
    for (int e = 0; e < extras; ++e) {
        std::uniform_int_distribution<int> site(1, n_sites);
        const int i = site(rng);
        const int j = site(rng);
        if (i != j) add_edge(i, j);
    }
    std::uniform_int_distribution<int> site(1, n_sites);
    const int sender = site(rng);
    int receiver = sender;
    while (n_sites > 1 && receiver == sender) receiver = site(rng);
    return build_graph(n_sites, std::move(edges), sender, receiver);
}

std::vector<double> random_snapshot_times(std::mt19937_64& rng, int count, double t_max) {
    std::uniform_real_distribution<double> uniform(1e-3, t_max);
    std::vector<double> times(count);
    for (auto& t : times) t = uniform(rng);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    return times;
}

}  // namespace dualrail::test
