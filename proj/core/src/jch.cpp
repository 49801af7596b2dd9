#include "dualrail/jch.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "dualrail/errors.hpp"
#include "dualrail/format.hpp"
#include "dualrail/spectral.hpp"

namespace dualrail {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

bool config_less(const FockConfig& a, const FockConfig& b) {
    return std::tie(a.photons, a.excited) < std::tie(b.photons, b.excited);
}

void require_resonant(const JchParams& params, const char* what) {
    if (params.delta() != 0.0) {
        throw InvalidParameterError(std::string(what) + " requires delta = 0");
    }
}

void require_sites(const CouplingGraph& graph, int limit, const char* what) {
    if (graph.node_count() > limit) {
        throw CapacityError(std::string(what) + " is exact-method only, capped at " +
                            std::to_string(limit) + " sites");
    }
}

/// Sampling step resolving the fast 2g beat, with a hard cap on the number
/// of samples.
double sample_step(const JchParams& params, double t_max, int max_samples = 20000) {
    const double pi = std::acos(-1.0);
    double dt = pi / (40.0 * params.g());
    if (t_max / dt > max_samples) dt = t_max / max_samples;
    return dt;
}

}  // namespace

int FockConfig::total_excitation() const {
    int m = 0;
    for (int n : photons) m += n;
    for (int e : excited) m += e;
    return m;
}

FockAtomBasis FockAtomBasis::enumerate(int n_sites, int n_max, std::optional<int> sector) {
    if (n_sites < 1) {
        throw InvalidParameterError("basis needs at least one site");
    }
    if (n_sites > kMaxExactSites || n_max > kMaxExactCutoff) {
        double dim = 1.0;
        for (int k = 0; k < n_sites; ++k) dim *= 2.0 * (n_max + 1);
        throw CapacityError("exact basis capped at " + std::to_string(kMaxExactSites) +
                            " sites and n_max " + std::to_string(kMaxExactCutoff) +
                            "; requested full dimension would be " + format_g17(dim));
    }
    if (n_max < 1) {
        throw InvalidParameterError("Fock cutoff must be at least 1");
    }
    if (sector && *sector < 0) {
        throw InvalidParameterError("excitation sector must be non-negative");
    }

    FockAtomBasis basis;
    basis.n_sites_ = n_sites;
    basis.n_max_ = n_max;
    basis.sector_ = sector;

    FockConfig config{std::vector<int>(n_sites, 0), std::vector<int>(n_sites, 0)};
    const long per_site = 2L * (n_max + 1);
    long total = 1;
    for (int k = 0; k < n_sites; ++k) total *= per_site;
    for (long code = 0; code < total; ++code) {
        long rest = code;
        for (int k = n_sites - 1; k >= 0; --k) {
            const long state = rest % per_site;
            rest /= per_site;
            config.photons[k] = static_cast<int>(state / 2);
            config.excited[k] = static_cast<int>(state % 2);
        }
        if (!sector || config.total_excitation() == *sector) {
            basis.configs_.push_back(config);
        }
    }
    std::sort(basis.configs_.begin(), basis.configs_.end(), config_less);
    return basis;
}

int FockAtomBasis::index_of(const FockConfig& config) const {
    const auto it = std::lower_bound(configs_.begin(), configs_.end(), config, config_less);
    if (it == configs_.end() || !(*it == config)) return -1;
    return static_cast<int>(it - configs_.begin());
}

bool FockAtomBasis::cutoff_limited() const {
    if (!sector_) return true;
    return *sector_ > n_max_;
}

FockAtomBasis enumerate_basis(int n_sites, int n_max, std::optional<int> sector) {
    return FockAtomBasis::enumerate(n_sites, n_max, sector);
}

JchMatrix::JchMatrix(Eigen::MatrixXd matrix, FockAtomBasis basis, JchParams params,
                     CouplingGraph graph)
    : matrix_(std::move(matrix)),
      basis_(std::move(basis)),
      params_(std::move(params)),
      graph_(std::move(graph)) {}

void JchMatrix::diagonalize() const {
    if (diagonalized_) return;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix_);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("JCH eigendecomposition failed at dimension " +
                             std::to_string(matrix_.rows()));
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
    diagonalized_ = true;
}

const Eigen::VectorXd& JchMatrix::eigenvalues() const {
    diagonalize();
    return eigenvalues_;
}

const Eigen::MatrixXd& JchMatrix::eigenvectors() const {
    diagonalize();
    return eigenvectors_;
}

Eigen::VectorXcd JchMatrix::evolve(const Eigen::VectorXcd& state, double t) const {
    if (state.size() != matrix_.rows()) {
        throw DimensionError("state dimension does not match the Hamiltonian");
    }
    diagonalize();
    Eigen::VectorXcd modal = eigenvectors_.transpose() * state;
    for (int k = 0; k < modal.size(); ++k) {
        modal(k) *= std::polar(1.0, -eigenvalues_(k) * t);
    }
    return eigenvectors_ * modal;
}

JchMatrix build_jch(const JchParams& params, const CouplingGraph& graph,
                    const FockAtomBasis& basis) {
    if (basis.n_sites() != graph.node_count()) {
        throw DimensionError("basis covers " + std::to_string(basis.n_sites()) +
                             " sites, graph has " + std::to_string(graph.node_count()));
    }
    if (params.n_max() != basis.n_max()) {
        throw DimensionError("params n_max does not match the basis cutoff");
    }
    const int dim = basis.size();
    const int n_max = basis.n_max();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

    for (int i = 0; i < dim; ++i) {
        const FockConfig& c = basis.config(i);
        double diag = 0.0;
        for (int k = 0; k < basis.n_sites(); ++k) {
            diag += params.omega_d() * c.photons[k] + params.omega_0() * c.excited[k];
        }
        h(i, i) = diag;

        // Jaynes-Cummings coupling, generated once per pair from the
        // atom-to-photon direction.
        for (int k = 0; k < basis.n_sites(); ++k) {
            if (c.excited[k] == 1 && c.photons[k] + 1 <= n_max) {
                FockConfig partner = c;
                partner.excited[k] = 0;
                partner.photons[k] += 1;
                const int j = basis.index_of(partner);
                if (j >= 0) {
                    const double v = params.g() * std::sqrt(double(c.photons[k] + 1));
                    h(i, j) += v;
                    h(j, i) += v;
                }
            }
        }

        // Photon hopping on edges; the j > i guard keeps each unordered
        // pair counted once (the reverse move regenerates it).
        for (const auto& e : graph.edges()) {
            const int pair[2][2] = {{e.i - 1, e.j - 1}, {e.j - 1, e.i - 1}};
            for (const auto& dir : pair) {
                const int src = dir[0];
                const int dst = dir[1];
                if (c.photons[src] >= 1 && c.photons[dst] + 1 <= n_max) {
                    FockConfig partner = c;
                    partner.photons[src] -= 1;
                    partner.photons[dst] += 1;
                    const int j = basis.index_of(partner);
                    if (j > i) {
                        const double v = e.weight * std::sqrt(double(c.photons[src])) *
                                         std::sqrt(double(c.photons[dst] + 1));
                        h(i, j) += v;
                        h(j, i) += v;
                    }
                }
            }
        }
    }
    return JchMatrix(std::move(h), basis, params, graph);
}

Eigen::VectorXcd exact_evolve(const Eigen::VectorXcd& state, const JchMatrix& h, double t) {
    return h.evolve(state, t);
}

Eigen::VectorXcd polariton_site_state(const FockAtomBasis& basis, int site, Branch branch) {
    if (site < 1 || site > basis.n_sites()) {
        throw DimensionError("polariton site out of range");
    }
    FockConfig photon{std::vector<int>(basis.n_sites(), 0), std::vector<int>(basis.n_sites(), 0)};
    photon.photons[site - 1] = 1;
    FockConfig atom{std::vector<int>(basis.n_sites(), 0), std::vector<int>(basis.n_sites(), 0)};
    atom.excited[site - 1] = 1;

    const int ip = basis.index_of(photon);
    const int ia = basis.index_of(atom);
    if (ip < 0 || ia < 0) {
        throw DimensionError("basis does not contain the single-excitation configurations");
    }
    Eigen::VectorXcd state = Eigen::VectorXcd::Zero(basis.size());
    const double sign = (branch == Branch::plus) ? 1.0 : -1.0;
    state(ip) = kInvSqrt2;
    state(ia) = sign * kInvSqrt2;
    return state;
}

Eigen::VectorXcd two_polariton_state(const FockAtomBasis& basis, int site_a, int site_b,
                                     Branch branch) {
    if (site_a == site_b) {
        throw InvalidParameterError("the two polaritons must sit on distinct sites");
    }
    const int n = basis.n_sites();
    if (site_a < 1 || site_a > n || site_b < 1 || site_b > n) {
        throw DimensionError("polariton site out of range");
    }
    const double sign = (branch == Branch::plus) ? 1.0 : -1.0;
    Eigen::VectorXcd state = Eigen::VectorXcd::Zero(basis.size());
    // (|g,1> + s|e,0>)_a (|g,1> + s|e,0>)_b / 2 over the vacuum elsewhere.
    for (int ca = 0; ca < 2; ++ca) {
        for (int cb = 0; cb < 2; ++cb) {
            FockConfig config{std::vector<int>(n, 0), std::vector<int>(n, 0)};
            if (ca == 0) {
                config.photons[site_a - 1] = 1;
            } else {
                config.excited[site_a - 1] = 1;
            }
            if (cb == 0) {
                config.photons[site_b - 1] = 1;
            } else {
                config.excited[site_b - 1] = 1;
            }
            const int idx = basis.index_of(config);
            if (idx < 0) {
                throw DimensionError("basis does not contain the two-excitation configurations");
            }
            state(idx) = 0.5 * (ca == 1 ? sign : 1.0) * (cb == 1 ? sign : 1.0);
        }
    }
    return state;
}

LeakageReport interconversion_leakage(const JchParams& params, const CouplingGraph& graph,
                                      double t_max) {
    require_resonant(params, "interconversion leakage");
    require_sites(graph, 3, "interconversion leakage");
    if (!(t_max >= 0.0)) {
        throw InvalidParameterError("t_max must be non-negative");
    }

    const FockAtomBasis basis = enumerate_basis(graph.node_count(), params.n_max(), 1);
    const JchMatrix h = build_jch(params, graph, basis);
    const Eigen::VectorXcd psi0 = polariton_site_state(basis, 1, Branch::minus);

    std::vector<std::pair<int, int>> site_indices;  // (photon idx, atom idx) per site
    for (int site = 1; site <= graph.node_count(); ++site) {
        FockConfig photon{std::vector<int>(graph.node_count(), 0),
                          std::vector<int>(graph.node_count(), 0)};
        photon.photons[site - 1] = 1;
        FockConfig atom = photon;
        atom.photons[site - 1] = 0;
        atom.excited[site - 1] = 1;
        site_indices.emplace_back(basis.index_of(photon), basis.index_of(atom));
    }

    const double dt = sample_step(params, t_max);
    LeakageReport report;
    for (double t = 0.0; t <= t_max; t += dt) {
        const Eigen::VectorXcd psi = h.evolve(psi0, t);
        double p_plus = 0.0;
        for (const auto& [ip, ia] : site_indices) {
            p_plus += std::norm((psi(ip) + psi(ia)) * kInvSqrt2);
        }
        report.max_plus_population = std::max(report.max_plus_population, p_plus);
        ++report.samples;
        if (t_max == 0.0) break;
    }
    return report;
}

namespace {

/// Linear least squares of samples against a + b cos(omega t), profiled
/// over omega; returns the residual sum.
double cosine_residual(const std::vector<double>& t, const std::vector<double>& p, double omega) {
    const int n = static_cast<int>(t.size());
    double s_c = 0.0, s_cc = 0.0, s_p = 0.0, s_pc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double c = std::cos(omega * t[i]);
        s_c += c;
        s_cc += c * c;
        s_p += p[i];
        s_pc += p[i] * c;
    }
    const double det = n * s_cc - s_c * s_c;
    if (std::abs(det) < 1e-12 * n * n) return 1e300;
    const double b = (n * s_pc - s_c * s_p) / det;
    const double a = (s_p - b * s_c) / n;
    double res = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = p[i] - a - b * std::cos(omega * t[i]);
        res += r * r;
    }
    return res;
}

double fit_oscillation_frequency(const std::vector<double>& t, const std::vector<double>& p) {
    const int n = static_cast<int>(t.size());
    const double p_max = *std::max_element(p.begin(), p.end());
    const double p_min = *std::min_element(p.begin(), p.end());
    if (p_max - p_min < 0.2) {
        throw CalibrationError("population signal is non-oscillatory (swing " +
                               format_g17(p_max - p_min) + ")");
    }
    // First local maximum near full transfer locates half a period.
    int peak = -1;
    for (int i = 1; i + 1 < n; ++i) {
        if (p[i] >= p[i - 1] && p[i] >= p[i + 1] && p[i] > 0.8 * p_max) {
            peak = i;
            break;
        }
    }
    if (peak <= 0) {
        throw CalibrationError("no transfer peak found in the calibration window");
    }
    const double pi = std::acos(-1.0);
    const double omega_est = pi / t[peak];

    double lo = 0.85 * omega_est;
    double hi = 1.15 * omega_est;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = cosine_residual(t, p, x1);
    double f2 = cosine_residual(t, p, x2);
    for (int it = 0; it < 200 && (hi - lo) > 1e-13 * omega_est; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = cosine_residual(t, p, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = cosine_residual(t, p, x2);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

CalibrationResult calibrate_j_eff(const JchParams& params) {
    require_resonant(params, "hopping calibration");
    if (!(params.hop_a() > 0.0)) {
        throw CalibrationError("hopping calibration needs A > 0");
    }
    const CouplingGraph graph = build_chain(2, params.hop_a());
    const FockAtomBasis basis = enumerate_basis(2, params.n_max(), 1);
    const JchMatrix h = build_jch(params, graph, basis);

    FockConfig photon2{{0, 1}, {0, 0}};
    FockConfig atom2{{0, 0}, {0, 1}};
    const int ip = basis.index_of(photon2);
    const int ia = basis.index_of(atom2);

    // Three expected transfer periods at the anticipated scale 2 J_eff ~ A.
    const double pi = std::acos(-1.0);
    const double t_end = 3.0 * 2.0 * pi / params.hop_a();
    const int n_samples = 4096;

    CalibrationResult result;
    for (Branch branch : {Branch::plus, Branch::minus}) {
        const Eigen::VectorXcd psi0 = polariton_site_state(basis, 1, branch);
        std::vector<double> ts(n_samples), ps(n_samples);
        for (int i = 0; i < n_samples; ++i) {
            const double t = t_end * (i + 1) / n_samples;
            const Eigen::VectorXcd psi = h.evolve(psi0, t);
            ts[i] = t;
            ps[i] = std::norm(psi(ip)) + std::norm(psi(ia));
        }
        const double omega = fit_oscillation_frequency(ts, ps);
        const double j_eff = 0.5 * omega;
        if (branch == Branch::plus) {
            result.j_plus = j_eff;
        } else {
            result.j_minus = j_eff;
        }
    }
    result.ratio_to_a = 0.5 * (result.j_plus + result.j_minus) / params.hop_a();
    return result;
}

BlockadeResult blockade_check(const JchParams& params, const CouplingGraph& graph, int site_a,
                              int site_b, Branch branch, double t_max) {
    require_sites(graph, 3, "blockade check");
    if (params.n_max() < 2) {
        throw InvalidParameterError("blockade check needs n_max >= 2");
    }

    const auto run_once = [&](int n_max) {
        const FockAtomBasis basis = enumerate_basis(graph.node_count(), n_max, 2);
        const JchMatrix h = build_jch(params.with_n_max(n_max), graph, basis);
        const Eigen::VectorXcd psi0 = two_polariton_state(basis, site_a, site_b, branch);

        std::vector<int> doubly;
        for (int i = 0; i < basis.size(); ++i) {
            const FockConfig& c = basis.config(i);
            for (int k = 0; k < basis.n_sites(); ++k) {
                if (c.photons[k] >= 2 || c.photons[k] + c.excited[k] >= 2) {
                    doubly.push_back(i);
                    break;
                }
            }
        }

        const double dt = sample_step(params, t_max);
        double worst = 0.0;
        for (double t = 0.0; t <= t_max; t += dt) {
            const Eigen::VectorXcd psi = h.evolve(psi0, t);
            double p = 0.0;
            for (int idx : doubly) p += std::norm(psi(idx));
            worst = std::max(worst, p);
            if (t_max == 0.0) break;
        }
        return worst;
    };

    BlockadeResult result;
    result.max_double_occupancy = run_once(params.n_max());
    result.value_next_cutoff = run_once(params.n_max() + 1);
    const double base = std::max(result.max_double_occupancy, 1e-300);
    result.cutoff_shift = std::abs(result.value_next_cutoff - result.max_double_occupancy) / base;
    result.cutoff_sensitive = result.cutoff_shift > 0.10;
    return result;
}

OverlapResult effective_vs_exact_overlap(const JchParams& params, const CouplingGraph& graph,
                                         const PolaritonQubit& qubit, double t_max) {
    require_resonant(params, "effective-vs-exact overlap");
    require_sites(graph, 3, "effective-vs-exact overlap");
    const int n = graph.node_count();

    const FockAtomBasis basis = enumerate_basis(n, params.n_max(), 1);
    const JchMatrix h_full = build_jch(params, graph, basis);
    const CouplingGraph no_edges(n, {}, 1, n == 1 ? 1 : 2);
    const JchMatrix h_onsite = build_jch(params, no_edges, basis);

    const CalibrationResult calib = calibrate_j_eff(params);
    const auto scaled_graph = [&](double j_eff) {
        std::vector<Edge> edges = graph.edges();
        for (auto& e : edges) e.weight *= j_eff / params.hop_a();
        return CouplingGraph(n, std::move(edges), graph.sender(), graph.receiver());
    };
    const SpectralDecomposition eff_plus(scaled_graph(calib.j_plus));
    const SpectralDecomposition eff_minus(scaled_graph(calib.j_minus));

    std::vector<std::pair<int, int>> site_indices;
    for (int site = 1; site <= n; ++site) {
        FockConfig photon{std::vector<int>(n, 0), std::vector<int>(n, 0)};
        photon.photons[site - 1] = 1;
        FockConfig atom{std::vector<int>(n, 0), std::vector<int>(n, 0)};
        atom.excited[site - 1] = 1;
        site_indices.emplace_back(basis.index_of(photon), basis.index_of(atom));
    }

    const Eigen::VectorXcd psi0 = qubit.alpha() * polariton_site_state(basis, 1, Branch::plus) +
                                  qubit.beta() * polariton_site_state(basis, 1, Branch::minus);
    Eigen::VectorXcd e1 = Eigen::VectorXcd::Zero(n);
    e1(0) = 1.0;

    OverlapResult result;
    const double dt = sample_step(params, t_max);
    for (double t = 0.0; t <= t_max; t += dt) {
        // Exact state in the interaction picture of the on-site Hamiltonian.
        const Eigen::VectorXcd psi_i = h_onsite.evolve(h_full.evolve(psi0, t), -t);

        const Eigen::VectorXcd f_plus = eff_plus.propagate(e1, t);
        const Eigen::VectorXcd f_minus = eff_minus.propagate(e1, t);
        Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(basis.size());
        for (int site = 0; site < n; ++site) {
            const auto [ip, ia] = site_indices[site];
            const std::complex<double> up = qubit.alpha() * f_plus(site);
            const std::complex<double> um = qubit.beta() * f_minus(site);
            phi(ip) += (up + um) * kInvSqrt2;
            phi(ia) += (up - um) * kInvSqrt2;
        }

        const double overlap = std::abs(phi.dot(psi_i));
        result.min_overlap = std::min(result.min_overlap, overlap);
        ++result.samples;
        if (t_max == 0.0) break;
    }
    return result;
}

}  // namespace dualrail
