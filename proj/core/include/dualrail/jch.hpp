#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "dualrail/graph.hpp"
#include "dualrail/params.hpp"
#include "dualrail/polariton.hpp"

namespace dualrail {

/// One cavity-atom configuration: photon count and atomic flag per site.
struct FockConfig {
    std::vector<int> photons;
    std::vector<int> excited;  // 0 = g, 1 = e

    int total_excitation() const;
    bool operator==(const FockConfig&) const = default;
};

/// Ordered basis of cavity-atom configurations, optionally restricted to a
/// total-excitation sector (the full Hamiltonian conserves that number, so
/// sector restriction is exact).
class FockAtomBasis {
public:
    static FockAtomBasis enumerate(int n_sites, int n_max, std::optional<int> sector);

    int size() const { return static_cast<int>(configs_.size()); }
    int n_sites() const { return n_sites_; }
    int n_max() const { return n_max_; }
    std::optional<int> sector() const { return sector_; }
    const FockConfig& config(int index) const { return configs_[index]; }

    /// Index of a configuration, -1 when absent from the basis.
    int index_of(const FockConfig& config) const;

    /// True when the sector holds more excitations than the photon cutoff
    /// can absorb on one site, i.e. the cutoff truncates the sector.
    bool cutoff_limited() const;

private:
    int n_sites_ = 0;
    int n_max_ = 0;
    std::optional<int> sector_;
    std::vector<FockConfig> configs_;
};

/// Exact-method capacity limit; validation needs only 2-3 sites.
inline constexpr int kMaxExactSites = 4;
inline constexpr int kMaxExactCutoff = 4;

FockAtomBasis enumerate_basis(int n_sites, int n_max, std::optional<int> sector);

/// Dense Hamiltonian over a FockAtomBasis: bare frequencies on the
/// diagonal, Jaynes-Cummings coupling g sqrt(n) within each site, photon
/// hopping with bosonic factors on graph edges (edge weights are the
/// hopping rates). Eigendecomposition is computed lazily and cached.
class JchMatrix {
public:
    JchMatrix(Eigen::MatrixXd matrix, FockAtomBasis basis, JchParams params,
              CouplingGraph graph);

    int dimension() const { return static_cast<int>(matrix_.rows()); }
    const Eigen::MatrixXd& matrix() const { return matrix_; }
    const FockAtomBasis& basis() const { return basis_; }
    const JchParams& params() const { return params_; }
    const CouplingGraph& graph() const { return graph_; }
    bool cutoff_limited() const { return basis_.cutoff_limited(); }

    const Eigen::VectorXd& eigenvalues() const;
    const Eigen::MatrixXd& eigenvectors() const;

    /// exp(-iHt) |state> by spectral propagation.
    Eigen::VectorXcd evolve(const Eigen::VectorXcd& state, double t) const;

private:
    void diagonalize() const;

    Eigen::MatrixXd matrix_;
    FockAtomBasis basis_;
    JchParams params_;
    CouplingGraph graph_;

    mutable bool diagonalized_ = false;
    mutable Eigen::VectorXd eigenvalues_;
    mutable Eigen::MatrixXd eigenvectors_;
};

JchMatrix build_jch(const JchParams& params, const CouplingGraph& graph,
                    const FockAtomBasis& basis);

Eigen::VectorXcd exact_evolve(const Eigen::VectorXcd& state, const JchMatrix& h, double t);

/// Vacuum everywhere except |1+/-> on one site (single-excitation sector).
Eigen::VectorXcd polariton_site_state(const FockAtomBasis& basis, int site, Branch branch);

/// Product of two single-site polaritons on distinct sites
/// (two-excitation sector).
Eigen::VectorXcd two_polariton_state(const FockAtomBasis& basis, int site_a, int site_b,
                                     Branch branch);

struct LeakageReport {
    double max_plus_population = 0.0;  ///< max over time of the + manifold population
    int samples = 0;
};

/// Starts |1-> on site 1, evolves under the exact Hamiltonian and records
/// the worst-case population of the opposite polariton manifold. The
/// interconversion terms rotate at 2g, so the leakage should sit at the
/// (A/4g)^2 scale in the strong-coupling regime.
LeakageReport interconversion_leakage(const JchParams& params, const CouplingGraph& graph,
                                      double t_max);

struct CalibrationResult {
    double j_plus = 0.0;    ///< effective hopping of the + species
    double j_minus = 0.0;   ///< effective hopping of the - species
    double ratio_to_a = 0.0;  ///< mean effective hopping over the bare A
};

/// Two-site exact run: fits the inter-site population oscillation of each
/// polariton species and reports the effective single-excitation hopping
/// (half the angular frequency of the full transfer oscillation). Settles
/// the effective-model hopping convention empirically.
CalibrationResult calibrate_j_eff(const JchParams& params);

struct BlockadeResult {
    double max_double_occupancy = 0.0;  ///< max probability of any site holding >= 2 excitations
    double value_next_cutoff = 0.0;     ///< same quantity with n_max + 1
    double cutoff_shift = 0.0;          ///< relative shift between the two cutoffs
    bool cutoff_sensitive = false;      ///< shift above 10%
};

/// Two-excitation exact run from polaritons on two distinct sites; returns
/// the worst-case probability of a doubly occupied site (photon number
/// >= 2 or site excitation count >= 2).
BlockadeResult blockade_check(const JchParams& params, const CouplingGraph& graph, int site_a,
                              int site_b, Branch branch, double t_max);

struct OverlapResult {
    double min_overlap = 1.0;  ///< worst-case |<effective|exact>| over sampled times
    int samples = 0;
};

/// Evolves an encoded polariton qubit under the exact Hamiltonian (taken to
/// the interaction picture of the on-site part) and under the effective
/// hopping model with the calibrated rates, and reports the worst overlap.
OverlapResult effective_vs_exact_overlap(const JchParams& params, const CouplingGraph& graph,
                                         const PolaritonQubit& qubit, double t_max);

}  // namespace dualrail
