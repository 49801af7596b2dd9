#pragma once

namespace dualrail {

/// Physical parameter bundle for a cavity array doped with two-level
/// systems. All rates share one unit system; simulation time is measured
/// in the inverse of whatever reference hopping rate the caller picks.
///
/// The detuning is never stored: delta() always recomputes omega_0 - omega_d.
class JchParams {
public:
    JchParams(double omega_d, double omega_0, double g, double hop_a,
              double kappa = 0.0, double gamma = 0.0, int n_max = 1);

    /// Resonant strong-coupling defaults: omega_d = omega_0 = 1e4 * g,
    /// zero losses.
    static JchParams resonant(double g, double hop_a, int n_max = 1);

    double omega_d() const { return omega_d_; }
    double omega_0() const { return omega_0_; }
    double g() const { return g_; }
    double hop_a() const { return hop_a_; }
    double kappa() const { return kappa_; }
    double gamma() const { return gamma_; }
    int n_max() const { return n_max_; }

    double delta() const { return omega_0_ - omega_d_; }

    /// Uniform decay rate of a half-photonic, half-atomic excitation.
    double polariton_decay() const { return 0.5 * (kappa_ + gamma_); }

    JchParams with_hop(double hop_a) const;
    JchParams with_n_max(int n_max) const;
    JchParams with_loss(double kappa, double gamma) const;

private:
    double omega_d_;
    double omega_0_;
    double g_;
    double hop_a_;
    double kappa_;
    double gamma_;
    int n_max_;
};

}  // namespace dualrail
