#include "dualrail/polariton.hpp"

#include <cmath>

#include "dualrail/errors.hpp"
#include "dualrail/format.hpp"
#include "dualrail/params.hpp"

namespace dualrail {

namespace {

constexpr double kInputNormTolerance = 1e-9;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_unit_norm(double norm2, const char* what) {
    if (std::abs(norm2 - 1.0) > kInputNormTolerance) {
        throw NormalizationError(std::string(what) + " must be normalized, |.|^2 = " +
                                 format_g17(norm2));
    }
}

}  // namespace

PolaritonQubit::PolaritonQubit(std::complex<double> alpha, std::complex<double> beta)
    : alpha_(alpha), beta_(beta) {
    check_unit_norm(std::norm(alpha) + std::norm(beta), "qubit coefficients");
}

double PolaritonQubit::norm2() const {
    return std::norm(alpha_) + std::norm(beta_);
}

double qubit_fidelity(const PolaritonQubit& a, const PolaritonQubit& b) {
    const std::complex<double> overlap =
        std::conj(a.alpha()) * b.alpha() + std::conj(a.beta()) * b.beta();
    return std::norm(overlap) / (a.norm2() * b.norm2());
}

PolaritonQubit bare_to_polariton(std::complex<double> a, std::complex<double> b) {
    check_unit_norm(std::norm(a) + std::norm(b), "bare coefficients");
    return PolaritonQubit((a + b) * kInvSqrt2, (b - a) * kInvSqrt2);
}

std::pair<std::complex<double>, std::complex<double>> polariton_to_bare(const PolaritonQubit& q) {
    return {(q.alpha() - q.beta()) * kInvSqrt2, (q.alpha() + q.beta()) * kInvSqrt2};
}

PolaritonEnergy polariton_energy(int n, Branch branch, const JchParams& params) {
    if (n < 0) {
        throw InvalidParameterError("polariton manifold index must be non-negative");
    }
    if (n == 0) {
        return {0.0, true};
    }
    if (params.delta() != 0.0) {
        throw UnsupportedClosedFormError(
            "polariton energies have a closed form only at delta = 0; "
            "diagonalize the full model for detuned parameters");
    }
    const double sign = (branch == Branch::plus) ? 1.0 : -1.0;
    return {n * params.omega_d() + sign * params.g() * std::sqrt(double(n)), false};
}

}  // namespace dualrail
