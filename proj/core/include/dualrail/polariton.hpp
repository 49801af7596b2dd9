#pragma once

#include <complex>
#include <utility>

namespace dualrail {

class JchParams;

/// The two first-manifold polariton species |1+> and |1->. They play the
/// role of the two rails of the encoding.
enum class Branch { plus, minus };

/// Qubit carried by the polariton species of one site: alpha on |1+>
/// (rail I), beta on |1-> (rail II). Inputs farther than 1e-9 from unit
/// norm are rejected; the coefficients are stored as given.
class PolaritonQubit {
public:
    PolaritonQubit(std::complex<double> alpha, std::complex<double> beta);

    std::complex<double> alpha() const { return alpha_; }
    std::complex<double> beta() const { return beta_; }
    double norm2() const;

private:
    std::complex<double> alpha_;
    std::complex<double> beta_;
};

/// Fidelity |<a|b>|^2 between two stored qubits, normalized.
double qubit_fidelity(const PolaritonQubit& a, const PolaritonQubit& b);

/// Polariton-basis coefficients of the bare-basis state a|e,0> + b|g,1>:
/// returns ((a+b)/sqrt2, (b-a)/sqrt2). Unitary, so norms are preserved.
PolaritonQubit bare_to_polariton(std::complex<double> a, std::complex<double> b);

/// Inverse map: bare coefficients (on |e,0>, |g,1>) of a polariton qubit.
std::pair<std::complex<double>, std::complex<double>> polariton_to_bare(const PolaritonQubit& q);

struct PolaritonEnergy {
    double value = 0.0;
    bool ground = false;  ///< set when n = 0 (no polariton, energy 0)
};

/// Closed-form polariton energy n*omega_d +/- g*sqrt(n) at resonance.
/// Off resonance the closed form does not apply and an
/// UnsupportedClosedFormError is thrown; exact energies then come from
/// diagonalization of the full model.
PolaritonEnergy polariton_energy(int n, Branch branch, const JchParams& params);

}  // namespace dualrail
